"""Resolution dual graphs decorated with genus and self-intersection.

A :class:`DualGraph` has no loops and no arrowhead vertices; incidences of
strict transforms are carried separately by the ``L`` and ``P`` vectors of a
:class:`DecoratedTriple`. Per-vertex vectors throughout the package are
tuples aligned with ``graph.vertices``.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InvalidGraph, TooLarge, UnknownEdge, UnknownVertex
from .exactalg import IntMat, is_negative_definite

MAX_CANONICAL_VERTICES = 64


@dataclass(frozen=True)
class Vertex:
    id: Hashable
    genus: int = 0
    self_int: int = -1


def _edge_key(u, v) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple
    edges: tuple = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        index = {}
        for i, v in enumerate(self.vertices):
            if v.id in index:
                raise InvalidGraph(f"duplicate vertex id {v.id!r}")
            if v.genus < 0:
                raise InvalidGraph(f"negative genus at {v.id!r}")
            index[v.id] = i
        object.__setattr__(self, "_index", index)
        for e in self.edges:
            if len(e) != 2:
                raise InvalidGraph(f"edge {e!r} is not a pair")
            a, b = e
            if a not in index or b not in index:
                raise InvalidGraph(f"edge {e!r} references an unknown vertex")
            if a == b:
                raise InvalidGraph(f"loop at {a!r}; loops are not allowed")
        if not self.is_connected():
            raise InvalidGraph("dual graph must be connected")

    @classmethod
    def chain(cls, self_ints: Sequence[int], genera: Sequence[int] | None = None,
              ids: Sequence | None = None) -> DualGraph:
        """Bamboo graph ``v0 - v1 - ... `` with the given self-intersections."""
        n = len(self_ints)
        ids = list(range(n)) if ids is None else list(ids)
        genera = [0] * n if genera is None else list(genera)
        verts = [Vertex(ids[i], genera[i], self_ints[i]) for i in range(n)]
        return cls(tuple(verts), tuple((ids[i], ids[i + 1]) for i in range(n - 1)))

    def __len__(self):
        return len(self.vertices)

    @property
    def ids(self) -> tuple:
        return tuple(v.id for v in self.vertices)

    def index(self, vid) -> int:
        try:
            return self._index[vid]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vid!r}") from None

    def vertex(self, vid) -> Vertex:
        return self.vertices[self.index(vid)]

    def edge_multiplicity(self, u, v) -> int:
        k = _edge_key(u, v)
        return sum(1 for e in self.edges if _edge_key(*e) == k)

    def valency(self, vid) -> int:
        self.index(vid)
        return sum((a == vid) + (b == vid) for a, b in self.edges)

    def neighbors(self, vid) -> list:
        out = []
        for a, b in self.edges:
            if a == vid:
                out.append(b)
            elif b == vid:
                out.append(a)
        return out

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v.id: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        start = self.vertices[0].id
        seen, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_negative_definite(self) -> bool:
        return is_negative_definite(intersection_matrix(self))

    def fresh_id(self):
        ids = self.ids
        if all(isinstance(i, int) and not isinstance(i, bool) for i in ids):
            return max(ids, default=-1) + 1
        k = len(ids)
        while f"w{k}" in self._index:
            k += 1
        return f"w{k}"

    def reordered(self, order: Sequence) -> DualGraph:
        """Same graph with vertices listed in ``order`` (a permutation of the ids)."""
        if sorted(map(repr, order)) != sorted(map(repr, self.ids)) or len(order) != len(self):
            raise InvalidGraph("order must be a permutation of the vertex ids")
        return DualGraph(tuple(self.vertex(i) for i in order), self.edges)


def intersection_matrix(g: DualGraph) -> IntMat:
    n = len(g)
    rows = [[0] * n for _ in range(n)]
    for i, v in enumerate(g.vertices):
        rows[i][i] = v.self_int
    for a, b in g.edges:
        i, j = g.index(a), g.index(b)
        rows[i][j] += 1
        rows[j][i] += 1
    return IntMat.from_rows(rows)


def k_vector(g: DualGraph) -> tuple:
    """Per-vertex ``valency + 2 genus - 2``."""
    return tuple(Fraction(g.valency(v.id) + 2 * v.genus - 2) for v in g.vertices)


def blowup_smooth(g: DualGraph, vid, new_id=None) -> DualGraph:
    """Blow up a smooth point of E_v: a new (-1)-curve attached to v only."""
    i = g.index(vid)
    w = g.fresh_id() if new_id is None else new_id
    verts = list(g.vertices)
    v = verts[i]
    verts[i] = Vertex(v.id, v.genus, v.self_int - 1)
    verts.append(Vertex(w, 0, -1))
    return DualGraph(tuple(verts), g.edges + ((vid, w),))


def blowup_double(g: DualGraph, edge, new_id=None) -> DualGraph:
    """Blow up the double point of one edge ``(v, v')``; the new vertex subdivides it."""
    u, v = edge
    k = _edge_key(u, v)
    pos = next((n for n, e in enumerate(g.edges) if _edge_key(*e) == k), None)
    if pos is None:
        raise UnknownEdge(f"no edge between {u!r} and {v!r}")
    w = g.fresh_id() if new_id is None else new_id
    verts = list(g.vertices)
    for x in (u, v):
        i = g.index(x)
        old = verts[i]
        verts[i] = Vertex(old.id, old.genus, old.self_int - 1)
    verts.append(Vertex(w, 0, -1))
    edges = list(g.edges)
    a, b = edges.pop(pos)
    edges += [(a, w), (w, b)]
    return DualGraph(tuple(verts), tuple(edges))


@dataclass(frozen=True)
class DecoratedTriple:
    """A dual graph with its hyperplane-section vector L and polar vector P."""

    graph: DualGraph
    L: tuple
    P: tuple

    def __post_init__(self):
        L = tuple(self.L.get(i) for i in self.graph.ids) if isinstance(self.L, Mapping) else tuple(self.L)
        P = tuple(self.P.get(i) for i in self.graph.ids) if isinstance(self.P, Mapping) else tuple(self.P)
        n = len(self.graph)
        if len(L) != n or len(P) != n or None in L or None in P:
            raise InvalidGraph("L and P must be indexed exactly by the vertex set")
        for x in L + P:
            if int(x) != x or x < 0:
                raise InvalidGraph(f"L and P entries must be non-negative integers, got {x!r}")
        object.__setattr__(self, "L", tuple(int(x) for x in L))
        object.__setattr__(self, "P", tuple(int(x) for x in P))
        from .ratecalc import multiplicities_from_L
        multiplicities_from_L(self.graph, self.L)

    def L_of(self, vid) -> int:
        return self.L[self.graph.index(vid)]

    def P_of(self, vid) -> int:
        return self.P[self.graph.index(vid)]

    def reordered(self, order: Sequence) -> DecoratedTriple:
        g = self.graph.reordered(order)
        return DecoratedTriple(g, {i: self.L_of(i) for i in order}, {i: self.P_of(i) for i in order})


# -- canonical form -------------------------------------------------------

def _rank(signatures: list) -> list:
    table = {s: r for r, s in enumerate(sorted(set(signatures)))}
    return [table[s] for s in signatures]


def _refine(colors: list, adj: list) -> list:
    while True:
        sigs = [(colors[i], tuple(sorted((colors[j], m) for j, m in adj[i].items())))
                for i in range(len(colors))]
        new = _rank(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _encode(order: list, deco: list, adj: list) -> tuple:
    pos = {v: k for k, v in enumerate(order)}
    edges = sorted(
        (min(pos[i], pos[j]), max(pos[i], pos[j]), m)
        for i in range(len(order)) for j, m in adj[i].items() if i < j)
    return (tuple(deco[v] for v in order), tuple(edges))


def _are_twins(u: int, w: int, adj: list) -> bool:
    keys = (set(adj[u]) | set(adj[w])) - {u, w}
    return all(adj[u].get(x, 0) == adj[w].get(x, 0) for x in keys)


def _search(colors: list, deco: list, adj: list):
    colors = _refine(colors, adj)
    n = len(colors)
    if len(set(colors)) == n:
        order = sorted(range(n), key=colors.__getitem__)
        return _encode(order, deco, adj)
    counts = Counter(colors)
    target = min(c for c, k in counts.items() if k > 1)
    cell = [i for i in range(n) if colors[i] == target]
    reps = []
    for v in cell:
        if not any(_are_twins(v, r, adj) for r in reps):
            reps.append(v)
    best = None
    for v in reps:
        indiv = [2 * c + (0 if i == v else 1) if c == target else 2 * c for i, c in enumerate(colors)]
        enc = _search(_rank(indiv), deco, adj)
        if best is None or enc < best:
            best = enc
    return best


def canonical_key(t: DecoratedTriple) -> bytes:
    """Byte string equal for two triples iff they are isomorphic as decorated graphs.

    Isomorphisms must preserve genus, self-intersection, L and P. The search is
    colour refinement plus individualisation over decoration-compatible
    vertices, keeping the lexicographically least encoding.
    """
    g = t.graph
    n = len(g)
    if n > MAX_CANONICAL_VERTICES:
        raise TooLarge(f"canonical_key supports at most {MAX_CANONICAL_VERTICES} vertices, got {n}")
    deco = [(v.genus, v.self_int, t.L[i], t.P[i]) for i, v in enumerate(g.vertices)]
    adj = [dict() for _ in range(n)]
    for a, b in g.edges:
        i, j = g.index(a), g.index(b)
        adj[i][j] = adj[i].get(j, 0) + 1
        adj[j][i] = adj[j].get(i, 0) + 1
    enc = _search(_rank(deco), deco, adj) if n else ((), ())
    payload = {"n": n, "vertices": [list(d) for d in enc[0]], "edges": [list(e) for e in enc[1]]}
    return b"innerrates-triple-v1:" + json.dumps(payload, separators=(",", ":")).encode()


def key_digest(key: bytes) -> str:
    """Short printable fingerprint of a canonical key."""
    return hashlib.sha256(key).hexdigest()[:16]


# -- serialization --------------------------------------------------------

def to_dot(t: DecoratedTriple | DualGraph, name: str = "G") -> str:
    g = t.graph if isinstance(t, DecoratedTriple) else t
    lines = [f"graph {name} {{"]
    for i, v in enumerate(g.vertices):
        label = f"{v.id} [E²={v.self_int}, g={v.genus}"
        if isinstance(t, DecoratedTriple):
            label += f", L={t.L[i]}, P={t.P[i]}"
        label += "]"
        lines.append(f'  "{v.id}" [label="{label}"];')
    for a, b in g.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def triple_to_json(t: DecoratedTriple) -> dict:
    g = t.graph
    return {
        "vertices": [{"id": v.id, "genus": v.genus, "self_int": v.self_int} for v in g.vertices],
        "edges": [[a, b] for a, b in g.edges],
        "L": {str(v.id): t.L[i] for i, v in enumerate(g.vertices)},
        "P": {str(v.id): t.P[i] for i, v in enumerate(g.vertices)},
    }


def triple_from_json(obj: Mapping | str) -> DecoratedTriple:
    if isinstance(obj, str):
        obj = json.loads(obj)
    verts = tuple(Vertex(d["id"], int(d.get("genus", 0)), int(d["self_int"])) for d in obj["vertices"])
    g = DualGraph(verts, tuple(tuple(e) for e in obj.get("edges", ())))
    L = {v.id: obj["L"][str(v.id)] for v in verts}
    P = {v.id: obj["P"][str(v.id)] for v in verts}
    return DecoratedTriple(g, L, P)
