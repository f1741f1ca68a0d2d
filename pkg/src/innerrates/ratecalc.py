"""Inner rates on a dual graph.

With ``M`` the intersection matrix, ``m`` the multiplicity vector of the
ideal and ``a_v = m_v q_v``, the inner rates satisfy

    M a = K + F - P,        M m = -L,

where ``K_v = valency(v) + 2 g_v - 2``. The function ``f`` is the generic
hyperplane section, so ``F`` is identified with ``L`` throughout.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dualgraph import (DecoratedTriple, DualGraph, blowup_double, blowup_smooth,
                        intersection_matrix, k_vector)
from .errors import (DisconnectedPoint, InvalidProfile, NonIntegralMultiplicity,
                     UnknownEdge, ZeroPolynomial)
from .exactalg import rat, solve_exact


@dataclass(frozen=True)
class RateProfile:
    """Multiplicities ``m_v(I)`` and inner rates ``q_v^I`` on every vertex of a graph."""

    graph: DualGraph
    m: tuple
    q: tuple

    def __post_init__(self):
        n = len(self.graph)
        m = tuple(self.m)
        q = tuple(rat(x) for x in self.q)
        if len(m) != n or len(q) != n:
            raise InvalidProfile("m and q must be indexed by the vertex set")
        for x in m:
            if int(x) != x or x <= 0:
                raise InvalidProfile(f"multiplicities must be positive integers, got {x!r}")
        m = tuple(int(x) for x in m)
        for mv, qv, v in zip(m, q, self.graph.vertices):
            if qv <= 0:
                raise InvalidProfile(f"inner rate at {v.id!r} is not positive: {qv}")
            if (mv * (qv + 1)).denominator != 1:
                raise InvalidProfile(f"m(q+1)-1 is not an integer at {v.id!r}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "q", q)
        for a, b in self.graph.edges:
            if self.slope(a, b).denominator != 1:
                raise InvalidProfile(f"non-integral slope on edge {a!r}-{b!r}")

    def m_of(self, vid) -> int:
        return self.m[self.graph.index(vid)]

    def q_of(self, vid) -> Fraction:
        return self.q[self.graph.index(vid)]

    @property
    def a(self) -> tuple:
        return tuple(mv * qv for mv, qv in zip(self.m, self.q))

    @property
    def nu(self) -> tuple:
        """``nu_v = m_v q_v + m_v - 1``, inverted from the definition of ``q_v``."""
        return tuple(int(mv * qv + mv - 1) for mv, qv in zip(self.m, self.q))

    def edge_length(self, u, v) -> Fraction:
        return Fraction(1, self.m_of(u) * self.m_of(v))

    def slope(self, u, v) -> Fraction:
        """Slope of the inner-rate function from u to v in the skeletal metric."""
        return self.m_of(u) * self.m_of(v) * (self.q_of(v) - self.q_of(u))


@dataclass(frozen=True)
class GraphPoint:
    """Point at normalized parameter ``t`` along the edge ``(v, v')``; t=0 is v."""

    edge: tuple
    t: Fraction = Fraction(0)

    def __post_init__(self):
        t = rat(self.t)
        if not 0 <= t <= 1:
            raise ValueError(f"edge parameter must lie in [0, 1], got {t}")
        edge = tuple(self.edge)
        if len(edge) != 2:
            raise ValueError("edge must be a pair of vertex ids")
        if edge[0] == edge[1] and t != 0:
            raise ValueError("a degenerate edge only names its vertex (t = 0)")
        object.__setattr__(self, "edge", edge)
        object.__setattr__(self, "t", t)

    @classmethod
    def at_vertex(cls, vid) -> GraphPoint:
        return cls((vid, vid), Fraction(0))


def multiplicities_from_L(g: DualGraph, L: Sequence) -> tuple:
    """Solve ``M m = -L``; every entry must come out a positive integer."""
    x = solve_exact(intersection_matrix(g), tuple(-rat(v) for v in L))
    for v, xv in zip(g.vertices, x):
        if xv.denominator != 1 or xv <= 0:
            raise NonIntegralMultiplicity(
                f"L is inconsistent with the graph: m at {v.id!r} would be {xv}")
    return tuple(int(xv) for xv in x)


def rates_from_triple(t: DecoratedTriple) -> RateProfile:
    g = t.graph
    m = multiplicities_from_L(g, t.L)
    rhs = tuple(k + l - p for k, l, p in zip(k_vector(g), t.L, t.P))
    a = solve_exact(intersection_matrix(g), rhs)
    return RateProfile(g, m, tuple(av / mv for av, mv in zip(a, m)))


def polar_from_rates(g: DualGraph, m: Sequence, q: Sequence) -> tuple:
    """``P = K + F - M a`` with ``F = -M m``."""
    M = intersection_matrix(g)
    m = tuple(Fraction(x) for x in m)
    a = tuple(mv * rat(qv) for mv, qv in zip(m, q))
    F = tuple(-x for x in M.matvec(m))
    Ma = M.matvec(a)
    return tuple(k + f - x for k, f, x in zip(k_vector(g), F, Ma))


def recurrence_extend(p: RateProfile, *, at_vertex=None, on_edge=None, new_id=None) -> RateProfile:
    """Blow up one point and decorate the new exceptional curve.

    Exactly one of ``at_vertex`` (a smooth point of that curve) or ``on_edge``
    (the double point of that edge) must be given. The new vertex is appended
    last in the graph's vertex order.
    """
    if (at_vertex is None) == (on_edge is None):
        raise TypeError("give exactly one of at_vertex or on_edge")
    if at_vertex is not None:
        g = blowup_smooth(p.graph, at_vertex, new_id)
        mv, qv = p.m_of(at_vertex), p.q_of(at_vertex)
        mw, qw = mv, qv + Fraction(1, mv)
    else:
        u, v = on_edge
        g = blowup_double(p.graph, on_edge, new_id)
        mu, mv = p.m_of(u), p.m_of(v)
        mw = mu + mv
        qw = (p.q_of(u) * mu + p.q_of(v) * mv) / mw
    return RateProfile(g, p.m + (mw,), p.q + (qw,))


def _check_point(p: RateProfile, x: GraphPoint):
    u, v = x.edge
    p.graph.index(u)
    p.graph.index(v)
    if u != v and p.graph.edge_multiplicity(u, v) == 0:
        raise UnknownEdge(f"no edge between {u!r} and {v!r}")


def _vertex_distances(p: RateProfile, sources: dict) -> dict:
    dist = dict(sources)
    heap = [(d, n, s) for n, (s, d) in enumerate(sources.items())]
    heapq.heapify(heap)
    counter = len(heap)
    while heap:
        d, _, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for w in p.graph.neighbors(u):
            nd = d + p.edge_length(u, w)
            if w not in dist or nd < dist[w]:
                dist[w] = nd
                counter += 1
                heapq.heappush(heap, (nd, counter, w))
    return dist


def skeletal_distance(p: RateProfile, a: GraphPoint, b: GraphPoint) -> Fraction:
    """Distance for the metric giving edge ``(v, v')`` length ``1/(m_v m_v')``."""
    _check_point(p, a)
    _check_point(p, b)

    def ends(x: GraphPoint) -> dict:
        u, v = x.edge
        if u == v:
            return {u: Fraction(0)}
        length = p.edge_length(u, v)
        return {u: x.t * length, v: (1 - x.t) * length}

    best = None
    (ua, va), (ub, vb) = a.edge, b.edge
    if ua != va and {ua, va} == {ub, vb}:
        tb = b.t if (ub, vb) == (ua, va) else 1 - b.t
        best = abs(a.t - tb) * p.edge_length(ua, va)
    dist = _vertex_distances(p, ends(a))
    for w, d_end in ends(b).items():
        if w not in dist:
            raise DisconnectedPoint(f"{w!r} is not reachable")
        d = dist[w] + d_end
        if best is None or d < best:
            best = d
    return best


def rate_at(p: RateProfile, x: GraphPoint) -> Fraction:
    """Value of the inner-rate function, linear in ``t`` along each edge."""
    _check_point(p, x)
    u, v = x.edge
    return (1 - x.t) * p.q_of(u) + x.t * p.q_of(v)


def eval_monomial_semivaluation(weights, f, normalizer=1) -> Fraction:
    """``min {p i + q j : x^i y^j in supp f} / normalizer``.

    ``f`` is anything exposing ``support()`` (an oracle ``Poly2``) or a
    mapping from exponent pairs to coefficients.
    """
    pw, qw = (rat(w) for w in weights)
    normalizer = rat(normalizer)
    if normalizer <= 0:
        raise ValueError("normalizer must be positive")
    support = f.support() if hasattr(f, "support") else [e for e, c in f.items() if c != 0]
    support = list(support)
    if not support:
        raise ZeroPolynomial("the zero polynomial has infinite order")
    return min(pw * i + qw * j for i, j in support) / normalizer

