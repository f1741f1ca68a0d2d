"""Brute-force cross-checks with explicit polynomials and random generic coefficients.

Nothing here uses the combinatorial rules of :mod:`innerrates.toric`: orders
are read off the support of actual Jacobians of random members of the ideal.
Random integers in ``[1, 10**6]`` from a seeded :class:`random.Random` stand
in for Zariski-generic coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import AllJacobiansZero, ZeroPolynomial

COEFF_MAX = 10 ** 6


@dataclass(frozen=True)
class Poly2:
    """Polynomial in x, y as a map from exponent pairs to nonzero exact coefficients."""

    terms: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.terms).items():
            if isinstance(c, float):
                raise TypeError("floating point coefficients are not allowed")
            if c != 0:
                clean[(int(e[0]), int(e[1]))] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, e, c=1) -> Poly2:
        return cls({tuple(e): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Poly2) -> Poly2:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly2(out)

    def __neg__(self) -> Poly2:
        return Poly2({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly2) -> Poly2:
        return self + (-other)

    def __mul__(self, other) -> Poly2:
        if not isinstance(other, Poly2):
            return Poly2({e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a + a2, b + b2)
                out[k] = out.get(k, 0) + c * c2
        return Poly2(out)

    __rmul__ = __mul__

    def dx(self) -> Poly2:
        return Poly2({(a - 1, b): a * c for (a, b), c in self.terms.items() if a})

    def dy(self) -> Poly2:
        return Poly2({(a, b - 1): b * c for (a, b), c in self.terms.items() if b})

    def support(self) -> list:
        return sorted(self.terms)

    def weighted_order(self, ray) -> int:
        """Order along the toric divisor of ``ray``; no cancellation between distinct monomials."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has infinite order")
        p, q = ray
        return min(p * a + q * b for a, b in self.terms)

    def __repr__(self):
        if not self.terms:
            return "Poly2(0)"
        parts = [f"{c}*x^{a}*y^{b}" for (a, b), c in sorted(self.terms.items())]
        return "Poly2(" + " + ".join(parts) + ")"


def jacobian(f: Poly2, g: Poly2) -> Poly2:
    """Coefficient of ``df ^ dg`` on ``dx ^ dy``."""
    return f.dx() * g.dy() - f.dy() * g.dx()


def _generators(I) -> tuple:
    return tuple(I.generators) if hasattr(I, "generators") else tuple(map(tuple, I))


def substream(seed: int, *labels) -> random.Random:
    """Deterministic independent stream for one trial."""
    return random.Random(repr((seed,) + labels))


def generic_member(I, seed: int, gens: Sequence | None = None) -> Poly2:
    """``sum alpha_i f_i`` over the monomial generators with random nonzero integer alphas."""
    rng = random.Random(seed) if isinstance(seed, int) else seed
    gens = _generators(I) if gens is None else gens
    return Poly2({tuple(e): rng.randint(1, COEFF_MAX) for e in gens})


def random_poly(rng: random.Random, degree: int) -> Poly2:
    return Poly2({(i, d - i): rng.randint(1, COEFF_MAX)
                  for d in range(degree + 1) for i in range(d + 1)})


def generic_element(I, rng: random.Random, degree: int) -> Poly2:
    """``sum g_i f_i`` with random polynomial multipliers ``g_i`` of degree <= ``degree``."""
    out = Poly2()
    for e in _generators(I):
        out = out + random_poly(rng, degree) * Poly2.monomial(e)
    return out


def nu_oracle(I, r, trials: int = 5, seed: int = 0) -> int:
    """Least order of ``dF ^ dG`` along the divisor of ``r`` over random pairs in I.

    The pairs use linear multipliers, i.e. generic combinations of the
    generators and of their products with x and y, which pairwise generate
    the whole module of 2-forms of a monomial ideal.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    p, q = r
    best = None
    for t in range(trials):
        rng = substream(seed, "nu", t)
        jac = jacobian(generic_element(I, rng, 1), generic_element(I, rng, 1))
        if not jac:
            continue
        val = jac.weighted_order((p, q)) + p + q - 1
        best = val if best is None else min(best, val)
    if best is None:
        raise AllJacobiansZero(f"all {trials} random Jacobians vanished")
    return best


def _chain_matrix(chain) -> list:
    rays = [tuple(r) for r in chain.rays] if hasattr(chain, "rays") else [tuple(r) for r in chain]
    n = len(rays) - 2
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        prev, r, nxt = rays[i], rays[i + 1], rays[i + 2]
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        c = Fraction(s[0], r[0]) if r[0] else Fraction(s[1], r[1])
        M[i][i] = -int(c)
        if i + 1 < n:
            M[i][i + 1] = M[i + 1][i] = 1
    return M, rays[1:-1]


def polar_vector_oracle(I, chain, seed: int = 0) -> tuple:
    """``-M m(h)`` for the polar ``h = jac(F, G)`` of a random pair, one entry per interior ray."""
    rng = substream(seed, "polar")
    h = jacobian(generic_element(I, rng, 1), generic_element(I, rng, 1))
    if not h:
        raise AllJacobiansZero("random Jacobian vanished")
    M, rays = _chain_matrix(chain)
    mh = [h.weighted_order(r) for r in rays]
    return tuple(-sum(M[i][j] * mh[j] for j in range(len(rays))) for i in range(len(rays)))


def omega2_oracle(I, samples: int = 50, seed: int = 0, degree: int = 3):
    """Minimal monomials seen in the supports of ``dg ^ dh`` for random g, h in I."""
    from .toric import MonomialModule2

    if samples < 1:
        raise ValueError("samples must be >= 1")
    support: set = set()
    for s in range(samples):
        rng = substream(seed, "omega2", s)
        g, h = generic_element(I, rng, degree), generic_element(I, rng, degree)
        support.update(jacobian(g, h).terms)
    return MonomialModule2(tuple(support))
