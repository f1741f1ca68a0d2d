from __future__ import annotations

import json
from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from innerrates.dualgraph import (DecoratedTriple, DualGraph, Vertex, blowup_double, blowup_smooth,
                                  canonical_key, intersection_matrix, k_vector, to_dot,
                                  triple_from_json, triple_to_json)
from innerrates.errors import InvalidGraph, TooLarge, UnknownEdge, UnknownVertex
from innerrates.exactalg import determinant, is_negative_definite
from innerrates.toric import MonomialIdeal, resolve

from conftest import monomial_ideals


def chain(*s):
    return DualGraph.chain(s)


def test_intersection_matrix_examples():
    assert intersection_matrix(chain(-1)).tolist() == [[-1]]
    assert intersection_matrix(chain(-1, -3, -1)).tolist() == [[-1, 1, 0], [1, -3, 1], [0, 1, -1]]
    g = DualGraph((Vertex(0, 0, -2), Vertex(1, 0, -2)), ((0, 1), (0, 1)))
    assert intersection_matrix(g).tolist() == [[-2, 2], [2, -2]]


def test_k_vector_examples():
    assert k_vector(chain(-1)) == (-2,)
    assert k_vector(chain(-1, -3, -1)) == (-1, 0, -1)
    assert k_vector(DualGraph((Vertex(0, 1, -1),))) == (0,)


def test_graph_validation():
    with pytest.raises(InvalidGraph):
        DualGraph((Vertex(0), Vertex(0)))
    with pytest.raises(InvalidGraph):
        DualGraph((Vertex(0), Vertex(1)), ((0, 0),))
    with pytest.raises(InvalidGraph):
        DualGraph((Vertex(0), Vertex(1)))


def test_blowup_smooth_examples():
    g = blowup_smooth(chain(-1), 0)
    assert [v.self_int for v in g.vertices] == [-2, -1]
    assert g.edge_multiplicity(0, g.vertices[1].id) == 1
    h = blowup_smooth(chain(-1, -3, -1), 1)
    assert [v.self_int for v in h.vertices] == [-1, -4, -1, -1]
    leaf = h.vertices[-1].id
    k = blowup_smooth(h, leaf)
    assert k.vertex(leaf).self_int == -2 and k.vertices[-1].self_int == -1
    with pytest.raises(UnknownVertex):
        blowup_smooth(h, 99)


def test_blowup_double_examples():
    g = blowup_double(chain(-2, -2), (0, 1))
    w = g.vertices[-1].id
    assert [g.vertex(i).self_int for i in (0, w, 1)] == [-3, -1, -3]
    assert g.edge_multiplicity(0, 1) == 0
    h = blowup_double(chain(-1, -3, -1), (0, 1))
    w = h.vertices[-1].id
    assert [h.vertex(i).self_int for i in (0, w, 1, 2)] == [-2, -1, -4, -1]
    with pytest.raises(UnknownEdge):
        blowup_double(h, (0, 2))


def test_blowup_double_matches_toric_chain():
    # rays (2,1),(3,2),(1,1),(1,2): the mediant (3,2) subdivides the first edge
    from innerrates.toric import FanChain
    expected = FanChain(((1, 0), (2, 1), (3, 2), (1, 1), (1, 2), (0, 1))).self_intersection_numbers()
    h = blowup_double(chain(-1, -3, -1), (0, 1))
    w = h.vertices[-1].id
    assert tuple(h.vertex(i).self_int for i in (0, w, 1, 2)) == expected


def test_double_edge_removes_one_copy():
    g = DualGraph((Vertex(0, 0, -3), Vertex(1, 0, -3)), ((0, 1), (0, 1)))
    h = blowup_double(g, (0, 1))
    assert h.edge_multiplicity(0, 1) == 1 and len(h) == 3


blowup_ops = st.lists(st.tuples(st.booleans(), st.integers(0, 10 ** 6)), max_size=6)


@given(monomial_ideals(), blowup_ops)
def test_blowups_preserve_definiteness_and_det(I, ops):
    g = resolve(I).triple.graph
    d = abs(determinant(intersection_matrix(g)))
    for smooth, pick in ops:
        n_edges = len(g.edges)
        if smooth or not g.edges:
            g2 = blowup_smooth(g, g.ids[pick % len(g)])
        else:
            g2 = blowup_double(g, g.edges[pick % len(g.edges)])
        assert len(g2) == len(g) + 1 and len(g2.edges) == n_edges + 1
        g = g2
        assert is_negative_definite(intersection_matrix(g))
        assert abs(determinant(intersection_matrix(g))) == d


def x2y2():
    return DecoratedTriple(chain(-1, -3, -1), (0, 2, 0), (1, 0, 1))


def test_key_examples():
    t = x2y2()
    assert canonical_key(t) == canonical_key(t.reordered([2, 1, 0]))
    assert canonical_key(t) == canonical_key(t.reordered([1, 0, 2]))
    i1 = DecoratedTriple(chain(-1), (1,), (0,))
    i2 = DecoratedTriple(chain(-1), (2,), (2,))
    assert canonical_key(i1) != canonical_key(i2)


def test_key_too_large():
    n = 65
    t = DecoratedTriple(DualGraph.chain([-2] * n), [1] + [0] * (n - 2) + [1], [0] * n)
    with pytest.raises(TooLarge):
        canonical_key(t)


def test_triple_validation():
    with pytest.raises(InvalidGraph):
        DecoratedTriple(chain(-1), (-1,), (0,))
    with pytest.raises(InvalidGraph):
        DecoratedTriple(chain(-1, -3, -1), (0, 2), (1, 0, 1))


@st.composite
def decorated_triples(draw, max_n: int = 6):
    """Random small triples: pick m > 0 and edges, then self-intersections making L = -M m >= 0."""
    n = draw(st.integers(1, max_n))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3))
    edges += [e for e in extra if e[0] != e[1]]
    m = [draw(st.integers(1, 3)) for _ in range(n)]
    nb = [0] * n
    for a, b in edges:
        nb[a] += m[b]
        nb[b] += m[a]
    c = [-(-nb[v] // m[v]) + draw(st.integers(0, 1)) for v in range(n)]
    c = [max(x, 1) for x in c]
    g = DualGraph(tuple(Vertex(i, draw(st.integers(0, 1)), -c[i]) for i in range(n)), tuple(edges))
    L = [c[v] * m[v] - nb[v] for v in range(n)]
    assume(determinant(intersection_matrix(g)) != 0)
    P = [draw(st.integers(0, 2)) for _ in range(n)]
    return DecoratedTriple(g, L, P)


def _brute_isomorphic(s: DecoratedTriple, t: DecoratedTriple) -> bool:
    gs, gt = s.graph, t.graph
    if len(gs) != len(gt) or len(gs.edges) != len(gt.edges):
        return False
    ds = [(v.genus, v.self_int, s.L[i], s.P[i]) for i, v in enumerate(gs.vertices)]
    dt = [(v.genus, v.self_int, t.L[i], t.P[i]) for i, v in enumerate(gt.vertices)]
    Ms, Mt = intersection_matrix(gs), intersection_matrix(gt)
    n = len(gs)
    for perm in permutations(range(n)):
        if all(ds[i] == dt[perm[i]] for i in range(n)) and all(
                Ms[i, j] == Mt[perm[i], perm[j]] for i in range(n) for j in range(n)):
            return True
    return False


@given(decorated_triples(), st.randoms(use_true_random=False))
def test_key_permutation_invariant(t, rnd):
    order = list(t.graph.ids)
    rnd.shuffle(order)
    assert canonical_key(t) == canonical_key(t.reordered(order))


@given(decorated_triples(max_n=5), decorated_triples(max_n=5))
def test_key_agrees_with_brute_force(s, t):
    assert (canonical_key(s) == canonical_key(t)) == _brute_isomorphic(s, t)


@given(decorated_triples())
def test_json_roundtrip(t):
    back = triple_from_json(json.dumps(triple_to_json(t)))
    assert back == t
    assert canonical_key(back) == canonical_key(t)


def test_json_schema_and_dot():
    t = x2y2()
    obj = triple_to_json(t)
    assert obj["vertices"][1] == {"id": 1, "genus": 0, "self_int": -3}
    assert obj["L"] == {"0": 0, "1": 2, "2": 0}
    dot = to_dot(t)
    assert '"1" [label="1 [E²=-3, g=0, L=2, P=0]"];' in dot
    assert '"0" -- "1";' in dot


def test_string_ids_roundtrip():
    g = DualGraph.chain([-2, -1], ids=["a", "b"])
    t = DecoratedTriple(g, {"a": 0, "b": 1}, {"a": 0, "b": 0})
    assert triple_from_json(triple_to_json(t)) == t
    assert blowup_smooth(g, "a").vertices[-1].id not in ("a", "b")


def test_family_keys_distinct():
    keys = {canonical_key(resolve(MonomialIdeal.power_of_maximal(n)).triple) for n in range(1, 9)}
    assert len(keys) == 8
