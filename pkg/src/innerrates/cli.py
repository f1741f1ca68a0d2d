"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 verification mismatch. Every rational
is printed as ``a/b`` (or a bare integer), never as a decimal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .corpus import full_corpus
from .dualgraph import canonical_key, key_digest, to_dot, triple_to_json
from .errors import InnerRatesError, NotPrimary, ParseError
from .exactalg import format_rat
from .toric import (MonomialIdeal, Ray, chain_through, integral_closure, invariants_at_ray,
                    profile_on_chain, required_rays, resolve)
from .verify import cross_check

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2
DEFAULT_SEED = 0


@dataclass
class RunReport:
    """Everything a subcommand computed; rendered as text or JSON."""

    command: list
    ideals: list = field(default_factory=list)
    sections: list = field(default_factory=list)
    seeds: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "ideals": self.ideals,
            "results": self.sections,
            "seeds": self.seeds,
            "verdicts": self.verdicts,
            "exit_code": self.exit_code,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rat(x)
    if isinstance(x, Ray):
        return [x.p, x.q]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _vec(v) -> str:
    return "(" + ",".join(format_rat(Fraction(x)) for x in v) + ")"


def _parse(text: str) -> MonomialIdeal:
    return MonomialIdeal.parse(text)


def triple_section(I: MonomialIdeal) -> dict:
    res = resolve(I)
    key = canonical_key(res.triple)
    return {
        "ideal": str(I),
        "chain": [[r.p, r.q] for r in res.chain.rays],
        "rays": [{"ray": [x.ray.p, x.ray.q], "self_int": v.self_int, "m": x.m, "nu": x.nu,
                  "q": format_rat(x.q)}
                 for x, v in zip(res.invariants, res.triple.graph.vertices)],
        "L": list(res.triple.L),
        "P": list(res.triple.P),
        "triple": triple_to_json(res.triple),
        "key": key_digest(key),
    }


def _render_triple(sec: dict, out) -> None:
    print(f"ideal: {sec['ideal']}", file=out)
    print("chain: " + " ".join(f"({p},{q})" for p, q in sec["chain"]), file=out)
    print(f"{'vertex':>6}  {'ray':<8} {'E^2':>4} {'m':>4} {'nu':>4}  q", file=out)
    for i, row in enumerate(sec["rays"]):
        ray = "({},{})".format(*row["ray"])
        print(f"{i:>6}  {ray:<8} {row['self_int']:>4} {row['m']:>4} {row['nu']:>4}  {row['q']}", file=out)
    print(f"L: {_vec(sec['L'])}", file=out)
    print(f"P: {_vec(sec['P'])}", file=out)
    print(f"key: {sec['key']}", file=out)


def _run_checks(report: RunReport, I: MonomialIdeal, seed: int) -> bool:
    results = cross_check(I, seed)
    ok = all(r.ok for r in results)
    for r in results:
        report.seeds.extend(s for s in r.seeds if s not in report.seeds)
    report.verdicts.append({
        "ideal": str(I),
        "verdict": "OK" if ok else "MISMATCH",
        "checks": [{"name": r.name, "ok": r.ok, "seeds": r.seeds, "detail": r.detail} for r in results],
    })
    return ok


def cmd_triple(ideal: str, *, verify: bool = False, seed: int = DEFAULT_SEED, argv=None) -> RunReport:
    I = _parse(ideal)
    report = RunReport(list(argv or ["triple", ideal]), [str(I)])
    report.sections.append(triple_section(I))
    if verify and not _run_checks(report, I, seed):
        report.exit_code = EXIT_MISMATCH
    return report


def cmd_compare(a: str, b: str, *, argv=None) -> RunReport:
    I, J = _parse(a), _parse(b)
    report = RunReport(list(argv or ["compare", a, b]), [str(I), str(J)])
    rI, rJ = resolve(I), resolve(J)
    same_triple = canonical_key(rI.triple) == canonical_key(rJ.triple)
    joint = chain_through(required_rays(I) | required_rays(J) | set(rI.chain.interior) | set(rJ.chain.interior))
    pI, pJ = profile_on_chain(I, joint), profile_on_chain(J, joint)
    diffs = [{"ray": [r.p, r.q], "q": [format_rat(x), format_rat(y)], "m": [mx, my]}
             for r, x, y, mx, my in zip(joint.interior, pI.q, pJ.q, pI.m, pJ.m) if (x, mx) != (y, my)]
    same_profile = not diffs
    same_closure = integral_closure(I) == integral_closure(J)
    consistent = same_closure or not same_profile
    report.sections.append({
        "triples_isomorphic": same_triple,
        "keys": [key_digest(canonical_key(rI.triple)), key_digest(canonical_key(rJ.triple))],
        "joint_chain": [[r.p, r.q] for r in joint.rays],
        "profiles_equal": same_profile,
        "profile_differences": diffs,
        "closures_equal": same_closure,
        "closures": [str(integral_closure(I)), str(integral_closure(J))],
        "implication_holds": consistent,
    })
    report.verdicts.append({"check": "profiles equal implies closures equal",
                            "verdict": "OK" if consistent else "ENGINE BUG"})
    if not consistent:
        report.exit_code = EXIT_MISMATCH
    return report


def cmd_family(n_max: int, *, argv=None) -> RunReport:
    if not 1 <= n_max <= 64:
        raise ValueError("n-max must lie in 1..64")
    report = RunReport(list(argv or ["family", str(n_max)]))
    keys, rows = [], []
    for n in range(1, n_max + 1):
        I = MonomialIdeal.power_of_maximal(n)
        res = resolve(I)
        keys.append(canonical_key(res.triple))
        report.ideals.append(str(I))
        rows.append({
            "n": n,
            "vertices": len(res.triple.graph),
            "L": list(res.triple.L),
            "P": list(res.triple.P),
            "q(1,1)": format_rat(invariants_at_ray(I, (1, 1)).q),
            "q(2,1)": format_rat(invariants_at_ray(I, (2, 1)).q),
            "key": key_digest(keys[-1]),
        })
    distinct = len(set(keys)) == len(keys)
    report.sections.append({"rows": rows, "pairwise_distinct": distinct})
    report.verdicts.append({"check": "pairwise distinct triples", "verdict": "OK" if distinct else "MISMATCH"})
    if not distinct:
        report.exit_code = EXIT_MISMATCH
    return report


def cmd_verify(ideals: list, *, seed: int = DEFAULT_SEED, argv=None) -> RunReport:
    targets = [_parse(s) for s in ideals] if ideals else full_corpus()
    report = RunReport(list(argv or ["verify", *ideals]), [str(I) for I in targets])
    ok = True
    for I in targets:
        ok &= _run_checks(report, I, seed)
    if not ok:
        report.exit_code = EXIT_MISMATCH
    return report


def _render(report: RunReport, name: str, out) -> None:
    if name == "triple":
        _render_triple(report.sections[0], out)
    elif name == "compare":
        s = report.sections[0]
        print(f"ideals: {report.ideals[0]} vs {report.ideals[1]}", file=out)
        print(f"triples isomorphic: {'yes' if s['triples_isomorphic'] else 'no'}"
              f" ({s['keys'][0]} / {s['keys'][1]})", file=out)
        print("joint chain: " + " ".join(f"({p},{q})" for p, q in s["joint_chain"]), file=out)
        print(f"rate profiles equal: {'yes' if s['profiles_equal'] else 'no'}", file=out)
        for d in s["profile_differences"]:
            print("  ray ({},{}): m {} vs {}, q {} vs {}".format(*d["ray"], *d["m"], *d["q"]), file=out)
        print(f"integral closures equal: {'yes' if s['closures_equal'] else 'no'}"
              f" ({s['closures'][0]} / {s['closures'][1]})", file=out)
    elif name == "family":
        s = report.sections[0]
        print(f"{'n':>3} {'L':>4} {'P':>5} {'q(1,1)':>7} {'q(2,1)':>7}  key", file=out)
        for r in s["rows"]:
            L = ",".join(map(str, r["L"]))
            P = ",".join(map(str, r["P"]))
            print(f"{r['n']:>3} {L:>4} {P:>5} {r['q(1,1)']:>7} {r['q(2,1)']:>7}  {r['key']}", file=out)
    for v in report.verdicts:
        if "checks" in v:
            print(f"verify {v['ideal']}: {v['verdict']}", file=out)
            for c in v["checks"]:
                if not c["ok"] or name == "triple":
                    seeds = ",".join(map(str, c["seeds"])) or "-"
                    tail = f" ({c['detail']})" if c["detail"] else ""
                    print(f"  {c['name']}: {'OK' if c['ok'] else 'MISMATCH'} [seeds {seeds}]{tail}", file=out)
        else:
            print(f"{v['check']}: {v['verdict']}", file=out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="innerrates",
                                 description="Inner rates of m-primary monomial ideals.")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the random oracle (default 0)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="oracle seed")

    p = sub.add_parser("triple", help="resolution chain, per-ray invariants and (graph, L, P)")
    p.add_argument("ideal")
    p.add_argument("--dot", action="store_true", help="emit the decorated graph in DOT")
    p.add_argument("--verify", action="store_true", help="cross-check against the polynomial oracle")
    common(p)
    p = sub.add_parser("compare", help="compare two ideals")
    p.add_argument("ideal_a")
    p.add_argument("ideal_b")
    common(p)
    p = sub.add_parser("family", help="the family I_n = (x,y)^n for n = 1..N")
    p.add_argument("n_max", type=int)
    common(p)
    p = sub.add_parser("verify", help="oracle cross-checks (default: built-in corpus)")
    p.add_argument("ideals", nargs="*")
    common(p)
    p = sub.add_parser("dot", help="DOT rendering of the decorated graph")
    p.add_argument("ideal")
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "dot":
            print(to_dot(resolve(_parse(args.ideal)).triple), file=out, end="")
            return EXIT_OK
        if args.command == "triple":
            report = cmd_triple(args.ideal, verify=args.verify, seed=args.seed, argv=argv)
            if args.dot and not args.json:
                print(to_dot(resolve(_parse(args.ideal)).triple), file=out, end="")
                return report.exit_code
        elif args.command == "compare":
            report = cmd_compare(args.ideal_a, args.ideal_b, argv=argv)
        elif args.command == "family":
            report = cmd_family(args.n_max, argv=argv)
        else:
            report = cmd_verify(args.ideals, seed=args.seed, argv=argv)
    except (NotPrimary, ParseError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INPUT
    except (InnerRatesError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INPUT
    if args.json:
        payload = report.to_json()
        if args.command == "triple" and args.dot:
            payload["dot"] = to_dot(resolve(_parse(args.ideal)).triple)
        print(json.dumps(_jsonable(payload), indent=2), file=out)
    else:
        _render(report, args.command, out)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
