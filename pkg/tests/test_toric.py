from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given

from innerrates.dualgraph import intersection_matrix
from innerrates.errors import BoundaryRay, NotPrimary, ParseError
from innerrates.exactalg import is_negative_definite
from innerrates.toric import (FanChain, MonomialIdeal, MonomialModule2, Ray, complete_system,
                              det, integral_closure, invariants_at_ray, is_precomplete,
                              minimal_resolution_chain, newton_polygon, omega2_module,
                              required_rays, triple_of_ideal)

from conftest import monomial_ideals

F = Fraction


def ideal(*gens):
    return MonomialIdeal(tuple(gens))


X2Y2 = ideal((2, 0), (0, 2))
X2XYY2 = ideal((2, 0), (1, 1), (0, 2))
XY = ideal((1, 0), (0, 1))


def I_(n):
    return MonomialIdeal.power_of_maximal(n)


# -- parsing and construction ------------------------------------------------

def test_parse_formats():
    assert MonomialIdeal.parse("x^2, x*y^3, y^4").generators == ((2, 0), (1, 3), (0, 4))
    assert MonomialIdeal.parse("xy, x^3, y^2") == ideal((3, 0), (1, 1), (0, 2))
    assert MonomialIdeal.parse('{"gens": [[2,0],[1,3],[0,4]]}').generators == ((2, 0), (1, 3), (0, 4))
    assert MonomialIdeal.parse("I_3") == I_(3)
    assert MonomialIdeal.parse("(x^2,y^2)") == X2Y2


@pytest.mark.parametrize("text", ["x^2, z", "x^a", '{"gens": 3}', ""])
def test_parse_errors(text):
    with pytest.raises((ParseError, NotPrimary)):
        MonomialIdeal.parse(text)


def test_not_primary():
    with pytest.raises(NotPrimary):
        ideal((2, 0))
    with pytest.raises(NotPrimary):
        MonomialIdeal.parse("x^2, x*y")
    with pytest.raises(NotPrimary):
        is_precomplete([(2, 0), (1, 1)])


def test_minimal_generators():
    assert ideal((2, 0), (3, 1), (0, 2), (2, 2)).generators == ((2, 0), (0, 2))


def test_ray_validation():
    with pytest.raises(ValueError):
        Ray(2, 4)
    assert not Ray(1, 0).is_interior and Ray(2, 1).is_interior


# -- Newton polygon and closure ---------------------------------------------

def test_newton_polygon_examples():
    assert newton_polygon(X2Y2) == ((((2, 0), (0, 2))), (Ray(1, 1),))
    for n in (1, 3, 5):
        poly = newton_polygon(I_(n))
        assert poly.vertices == ((n, 0), (0, n)) and poly.normals == (Ray(1, 1),)
    poly = newton_polygon(ideal((3, 0), (1, 1), (0, 2)))
    assert poly.vertices == ((3, 0), (1, 1), (0, 2))
    assert set(poly.normals) == {Ray(1, 2), Ray(1, 1)}


def test_integral_closure_examples():
    assert integral_closure(X2Y2) == X2XYY2
    assert integral_closure(XY) == XY
    for n in range(1, 7):
        assert integral_closure(I_(n)) == I_(n)


def _in_closure_by_rays(I, e, bound=8):
    rays = [(p, q) for p in range(bound) for q in range(bound) if gcd(p, q) == 1]
    return all(p * e[0] + q * e[1] >= I.order_at((p, q)) for p, q in rays)


@given(monomial_ideals())
def test_integral_closure_properties(I):
    J = integral_closure(I)
    assert integral_closure(J) == J
    assert all(g in J for g in I.generators)
    assert newton_polygon(J) == newton_polygon(I)
    top = max(max(a, b) for a, b in I.generators) + 1
    for a in range(top):
        for b in range(top):
            assert ((a, b) in J) == _in_closure_by_rays(I, (a, b))
    for r in [(1, 1), (2, 1), (1, 3), (5, 2)]:
        assert invariants_at_ray(I, r).m == invariants_at_ray(J, r).m


# -- 2-forms ------------------------------------------------------------------

def test_omega2_examples():
    assert omega2_module(X2Y2) == MonomialModule2(((3, 0), (1, 1), (0, 3)))
    assert omega2_module(XY).generators == ((0, 0),)
    assert omega2_module(X2XYY2) == MonomialModule2(((2, 0), (1, 1), (0, 2)))


@pytest.mark.parametrize("gens, expected", [
    ([(2, 0), (0, 2)], False),
    ([(2, 0), (0, 2), (1, 2), (2, 1)], True),
    ([(1, 0), (0, 1)], True),
])
def test_precomplete_examples(gens, expected):
    assert is_precomplete(gens) is expected


def test_complete_system_examples():
    for n in range(1, 7):
        got = set(complete_system(I_(n)))
        family = {(0, n + 1), (n + 1, 0)} | {(k, n - k) for k in range(n + 1)}
        assert family <= got
        assert is_precomplete(sorted(got))
    assert set(complete_system(X2Y2)) == {(2, 0), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)}
    assert set(complete_system(XY)) == {(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}


@given(monomial_ideals())
def test_complete_system_is_precomplete(I):
    sys_ = complete_system(I)
    assert len(set(sys_)) == len(sys_)
    assert is_precomplete(sys_)


# -- invariants, chains, triples --------------------------------------------

def test_invariants_examples():
    assert invariants_at_ray(X2Y2, (2, 1))[1:] == (2, 5, 2)
    assert invariants_at_ray(X2XYY2, (2, 1))[1:] == (2, 4, F(3, 2))
    assert invariants_at_ray(X2Y2, (1, 1))[1:] == (2, 3, 1)
    with pytest.raises(BoundaryRay):
        invariants_at_ray(X2Y2, (1, 0))


def test_chain_examples():
    assert minimal_resolution_chain(X2Y2).rays == tuple(
        Ray(*r) for r in ((1, 0), (2, 1), (1, 1), (1, 2), (0, 1)))
    for I in (I_(1), I_(4), XY):
        assert minimal_resolution_chain(I).rays == (Ray(1, 0), Ray(1, 1), Ray(0, 1))


def test_fanchain_validation():
    with pytest.raises(ValueError):
        FanChain(((1, 0), (1, 2), (0, 1)))
    with pytest.raises(ValueError):
        FanChain(((1, 1), (0, 1)))


def test_triple_examples():
    for n in range(1, 7):
        t, p = triple_of_ideal(I_(n))
        assert [v.self_int for v in t.graph.vertices] == [-1]
        assert (t.L, t.P, p.q) == ((n,), (2 * n - 2,), (1,))
    t, p = triple_of_ideal(X2Y2)
    assert [v.self_int for v in t.graph.vertices] == [-1, -3, -1]
    assert (t.L, t.P, p.q) == ((0, 2, 0), (1, 0, 1), (2, 1, 2))
    t, p = triple_of_ideal(XY)
    assert (t.L, t.P, p.q) == ((1,), (0,), (1,))


@given(monomial_ideals())
def test_chain_structure(I):
    chain = minimal_resolution_chain(I)
    req = required_rays(I)
    assert req <= set(chain.interior)
    for u, v in zip(chain.rays, chain.rays[1:]):
        assert det(u, v) == 1
    for r, s in zip(chain.interior, chain.self_intersection_numbers()):
        assert r in req or s <= -2
    assert is_negative_definite(intersection_matrix(chain.graph()))


@given(monomial_ideals())
def test_mediant_additivity(I):
    # m and m q are linear on each cone of the chain, hence additive on u + v
    chain = minimal_resolution_chain(I)
    for u, v in zip(chain.interior, chain.interior[1:]):
        w = Ray(u.p + v.p, u.q + v.q)
        iu, iv, iw = (invariants_at_ray(I, r) for r in (u, v, w))
        assert iw.m == iu.m + iv.m
        assert iw.q == (iu.m * iu.q + iv.m * iv.q) / (iu.m + iv.m)
