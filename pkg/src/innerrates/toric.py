"""Monomial ideals of C{x, y} and their toric resolutions.

Exponent pairs ``(a, b)`` stand for ``x^a y^b``; a ray ``(p, q)`` is the
monomial valuation ``x^a y^b -> p a + q b``. A good resolution factoring
through the blow-up of a monomial ideal ``I`` and the principalization of
its module of 2-forms is toric: a unimodular chain of rays from ``(1, 0)``
to ``(0, 1)`` whose interior rays are the exceptional curves.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .dualgraph import DecoratedTriple, DualGraph, intersection_matrix, k_vector
from .errors import BoundaryRay, InconsistentInvariants, NotPrimary, ParseError
from .ratecalc import RateProfile

Exponent = tuple  # (a, b)


def minimalize(exponents: Iterable[Sequence[int]]) -> tuple:
    """Minimal elements for divisibility, sorted by decreasing x-exponent."""
    pts = sorted({(int(a), int(b)) for a, b in exponents}, key=lambda e: (e[0], e[1]))
    out = []
    best_b = None
    for a, b in pts:
        # ascending a: a point survives iff its b is below every b seen so far
        if best_b is None or b < best_b:
            out.append((a, b))
            best_b = b
    return tuple(sorted(out, key=lambda e: (-e[0], e[1])))


def divides(e: Exponent, f: Exponent) -> bool:
    return e[0] <= f[0] and e[1] <= f[1]


def module_contains(gens: Iterable[Exponent], e: Exponent) -> bool:
    return any(divides(g, e) for g in gens)


def _is_primary(gens: Sequence[Exponent]) -> bool:
    return (any(b == 0 for _, b in gens) and any(a == 0 for a, _ in gens)
            and (0, 0) not in gens)


def _monomial_str(e: Exponent) -> str:
    a, b = e
    parts = []
    for var, k in (("x", a), ("y", b)):
        if k == 1:
            parts.append(var)
        elif k > 1:
            parts.append(f"{var}^{k}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"\s*\*?\s*([xy])\s*(?:\^\s*(\d+))?")
_POWER_OF_M = re.compile(r"^\s*(?:I_|m\^)(\d+)\s*$")


def _parse_monomial(term: str) -> Exponent:
    term = term.strip()
    if not term:
        raise ParseError("empty monomial")
    if term == "1":
        return (0, 0)
    exps = {"x": 0, "y": 0}
    pos = 0
    while pos < len(term):
        mt = _FACTOR.match(term, pos)
        if not mt or mt.end() == pos:
            raise ParseError(f"cannot parse monomial {term!r}")
        exps[mt.group(1)] += int(mt.group(2)) if mt.group(2) else 1
        pos = mt.end()
    return (exps["x"], exps["y"])


@dataclass(frozen=True)
class MonomialIdeal:
    """An m-primary monomial ideal, stored by its minimal generators."""

    generators: tuple

    def __post_init__(self):
        gens = minimalize(self.generators)
        if not gens or not _is_primary(gens):
            raise NotPrimary(f"ideal ({', '.join(map(_monomial_str, gens))}) is not m-primary")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def parse(cls, text: str) -> MonomialIdeal:
        """Read ``"x^2, x*y^3, y^4"``, ``'{"gens": [[2,0],[0,2]]}'`` or ``"I_3"`` (= m^3)."""
        text = text.strip()
        if text.startswith("{"):
            try:
                gens = json.loads(text)["gens"]
                return cls(tuple((int(a), int(b)) for a, b in gens))
            except (ValueError, KeyError, TypeError) as exc:
                raise ParseError(f"bad JSON ideal: {exc}") from None
        mt = _POWER_OF_M.match(text)
        if mt:
            return cls.power_of_maximal(int(mt.group(1)))
        text = text.strip("()")
        return cls(tuple(_parse_monomial(t) for t in text.split(",")))

    @classmethod
    def power_of_maximal(cls, n: int) -> MonomialIdeal:
        """``I_n = (x^k y^(n-k), 0 <= k <= n)``."""
        if n < 1:
            raise NotPrimary("I_n needs n >= 1")
        return cls(tuple((k, n - k) for k in range(n + 1)))

    def __contains__(self, e) -> bool:
        return module_contains(self.generators, tuple(e))

    def __str__(self):
        return "(" + ", ".join(_monomial_str(e) for e in self.generators) + ")"

    def to_json(self) -> dict:
        return {"gens": [list(e) for e in self.generators]}

    def order_at(self, ray) -> int:
        p, q = ray
        return min(p * a + q * b for a, b in self.generators)


@dataclass(frozen=True)
class MonomialModule2:
    """Monomial submodule of 2-forms; ``(e, f)`` stands for ``x^e y^f dx^dy``."""

    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", minimalize(self.generators))

    def __contains__(self, e) -> bool:
        return module_contains(self.generators, tuple(e))

    def issubset(self, other: MonomialModule2) -> bool:
        return all(g in other for g in self.generators)

    def __str__(self):
        return "{" + ", ".join(_monomial_str(e) for e in self.generators) + "}"


@dataclass(frozen=True, order=True)
class Ray:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) is not a primitive non-negative ray")

    def __iter__(self):
        return iter((self.p, self.q))

    def __getitem__(self, i):
        return (self.p, self.q)[i]

    @property
    def is_interior(self) -> bool:
        return self.p > 0 and self.q > 0

    def __str__(self):
        return f"({self.p},{self.q})"


def det(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def primitive(p: int, q: int) -> Ray:
    g = gcd(p, q)
    return Ray(p // g, q // g)


@dataclass(frozen=True)
class FanChain:
    """Unimodular chain of rays from (1, 0) to (0, 1)."""

    rays: tuple

    def __post_init__(self):
        rays = tuple(r if isinstance(r, Ray) else Ray(*r) for r in self.rays)
        if len(rays) < 2 or rays[0] != Ray(1, 0) or rays[-1] != Ray(0, 1):
            raise ValueError("a fan chain runs from (1,0) to (0,1)")
        for u, v in zip(rays, rays[1:]):
            if det(u, v) != 1:
                raise ValueError(f"cone {u}-{v} is not unimodular")
        object.__setattr__(self, "rays", rays)

    @property
    def interior(self) -> tuple:
        return self.rays[1:-1]

    def self_intersection_numbers(self) -> tuple:
        """``-c_i`` where ``u_(i-1) + u_(i+1) = c_i u_i``."""
        out = []
        for prev, r, nxt in zip(self.rays, self.rays[1:], self.rays[2:]):
            s = (prev.p + nxt.p, prev.q + nxt.q)
            c = s[0] // r.p if r.p else s[1] // r.q
            assert (c * r.p, c * r.q) == s
            out.append(-c)
        return tuple(out)

    def graph(self) -> DualGraph:
        return DualGraph.chain(self.self_intersection_numbers())


class NewtonPolygon(NamedTuple):
    vertices: tuple  # decreasing x-exponent
    normals: tuple   # primitive inner normal of each compact face, same order


def newton_polygon(I: MonomialIdeal | MonomialModule2 | Iterable[Exponent]) -> NewtonPolygon:
    gens = I.generators if hasattr(I, "generators") else minimalize(I)
    pts = sorted(gens)  # ascending a, hence descending b
    hull: list = []
    for pnt in pts:
        # pop while the last turn is not strictly convex (lower hull)
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            if (a[0] - o[0]) * (pnt[1] - o[1]) - (a[1] - o[1]) * (pnt[0] - o[0]) <= 0:
                hull.pop()
            else:
                break
        hull.append(pnt)
    verts = tuple(reversed(hull))
    normals = tuple(primitive(b2 - b1, a1 - a2) for (a1, b1), (a2, b2) in zip(verts, verts[1:]))
    return NewtonPolygon(verts, normals)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Monomials on or above the Newton polygon."""
    poly = newton_polygon(I)
    faces = [(n, I.order_at(n)) for n in poly.normals]
    a_max = poly.vertices[0][0]
    gens = []
    for a in range(a_max + 1):
        b = 0
        for (p, q), m in faces:
            b = max(b, -((p * a - m) // q))  # ceil((m - p a) / q)
        gens.append((a, b))
    return MonomialIdeal(tuple(gens))


def _wedge_exponents(e1: Exponent, e2: Exponent) -> list:
    (a, b), (c, d) = e1, e2
    out = []
    if a * d - b * c != 0:
        out.append((a + c - 1, b + d - 1))
    if b > 0:
        out.append((a + c, b + d - 1))
    if a > 0:
        out.append((a + c - 1, b + d))
    return out


def omega2_module(I: MonomialIdeal) -> MonomialModule2:
    """Monomial generators of the module spanned by ``dg ^ dh`` for g, h in I.

    For generators ``f_i, f_j`` the expansion of ``d(g_i f_i) ^ d(h_j f_j)``
    contributes ``df_i ^ df_j`` (nonzero iff the exponents are independent),
    ``f_j df_i ^ dx`` and ``f_j df_i ^ dy``; the last term ``f_i f_j dg_i ^ dh_j``
    is always dominated.
    """
    exps = []
    for e1 in I.generators:
        for e2 in I.generators:
            exps.extend(_wedge_exponents(e1, e2))
    return MonomialModule2(tuple(exps))


def is_precomplete(gens: Sequence[Exponent]) -> bool:
    """Whether the pairwise wedges ``df_i ^ df_j`` of these monomials generate the 2-form module."""
    gens = [tuple(g) for g in gens]
    I = MonomialIdeal(tuple(gens))
    wedges = [(a + c - 1, b + d - 1) for a, b in gens for c, d in gens if a * d - b * c != 0]
    return all(module_contains(wedges, g) for g in omega2_module(I).generators)


def complete_system(I: MonomialIdeal) -> tuple:
    """Minimal generators followed by their products with x and y, without repeats."""
    out = list(I.generators)
    seen = set(out)
    for a, b in I.generators:
        for e in ((a + 1, b), (a, b + 1)):
            if e not in seen:
                seen.add(e)
                out.append(e)
    return tuple(out)


class RayInvariants(NamedTuple):
    ray: Ray
    m: int
    nu: int
    q: Fraction


def form_order(e: Exponent, ray) -> int:
    """Order of ``x^e y^f dx^dy`` along the toric divisor of ``ray``."""
    p, q = ray
    return p * (e[0] + 1) + q * (e[1] + 1) - 1


def invariants_at_ray(I: MonomialIdeal, r, omega: MonomialModule2 | None = None) -> RayInvariants:
    r = r if isinstance(r, Ray) else Ray(*r)
    if not r.is_interior:
        raise BoundaryRay(f"{r} is a boundary ray, not an exceptional divisor")
    omega = omega2_module(I) if omega is None else omega
    m = I.order_at(r)
    nu = min(form_order(e, r) for e in omega.generators)
    return RayInvariants(r, m, nu, Fraction(nu - m + 1, m))


def _hj_fill(u: Ray, v: Ray) -> list:
    """Rays strictly between u and v in the minimal regular subdivision of their cone."""
    out = []
    d = det(u, v)
    while d > 1:
        k = next(k for k in range(1, d) if (v.p + k * u.p) % d == 0 and (v.q + k * u.q) % d == 0)
        w = Ray((v.p + k * u.p) // d, (v.q + k * u.q) // d)
        out.append(w)
        u, d = w, k
    return out


def chain_through(rays: Iterable) -> FanChain:
    """Minimal unimodular chain containing the given interior rays."""
    req = {r if isinstance(r, Ray) else Ray(*r) for r in rays} | {Ray(1, 0), Ray(0, 1)}
    # increasing angle from the x-axis ray: compare q/p by cross-multiplication
    ordered = sorted(req, key=cmp_to_key(lambda u, v: -det(u, v)))
    out = [ordered[0]]
    for u, v in zip(ordered, ordered[1:]):
        out.extend(_hj_fill(u, v))
        out.append(v)
    return FanChain(tuple(out))


def required_rays(I: MonomialIdeal) -> frozenset:
    """Face normals of the Newton polygons of I and of its 2-form module."""
    return frozenset(newton_polygon(I).normals) | frozenset(newton_polygon(omega2_module(I)).normals)


def minimal_resolution_chain(I: MonomialIdeal) -> FanChain:
    req = required_rays(I)
    if not req:
        req = {Ray(1, 1)}
    return chain_through(req)


def profile_on_chain(I: MonomialIdeal, chain: FanChain) -> RateProfile:
    omega = omega2_module(I)
    inv = [invariants_at_ray(I, r, omega) for r in chain.interior]
    return RateProfile(chain.graph(), tuple(x.m for x in inv), tuple(x.q for x in inv))


def skeletal_parameter(I: MonomialIdeal, u, v, w) -> Fraction:
    """Normalized position t of the ray ``w`` on the edge from ``u`` to ``v``.

    ``u, v`` must span a unimodular cone containing ``w = alpha u + beta v``;
    the skeletal distance from u to w is ``beta / (m_u m_w)``.
    """
    u, v, w = (x if isinstance(x, Ray) else Ray(*x) for x in (u, v, w))
    if det(u, v) != 1:
        raise ValueError("u, v must span a unimodular cone")
    alpha, beta = det(w, v), det(u, w)
    if alpha < 0 or beta < 0:
        raise ValueError(f"{w} is not in the cone spanned by {u} and {v}")
    m_v, m_w = I.order_at(v), I.order_at(w)
    return Fraction(beta * m_v, m_w)


@dataclass(frozen=True)
class ToricResolution:
    ideal: MonomialIdeal
    chain: FanChain
    invariants: tuple
    triple: DecoratedTriple
    profile: RateProfile


def resolve(I: MonomialIdeal) -> ToricResolution:
    chain = minimal_resolution_chain(I)
    omega = omega2_module(I)
    inv = tuple(invariants_at_ray(I, r, omega) for r in chain.interior)
    g = chain.graph()
    M = intersection_matrix(g)
    m = tuple(Fraction(x.m) for x in inv)
    a = tuple(x.m * x.q for x in inv)
    L = tuple(-x for x in M.matvec(m))
    P = tuple(k + l - x for k, l, x in zip(k_vector(g), L, M.matvec(a)))
    for name, vec in (("L", L), ("P", P)):
        bad = [x for x in vec if x.denominator != 1 or x < 0]
        if bad:
            raise InconsistentInvariants(f"{name} = {vec} for {I} is not a non-negative integer vector")
    triple = DecoratedTriple(g, tuple(int(x) for x in L), tuple(int(x) for x in P))
    profile = RateProfile(g, tuple(x.m for x in inv), tuple(x.q for x in inv))
    return ToricResolution(I, chain, inv, triple, profile)


def triple_of_ideal(I: MonomialIdeal) -> tuple:
    """``(DecoratedTriple, RateProfile)`` of the germ attached to I."""
    res = resolve(I)
    return res.triple, res.profile
