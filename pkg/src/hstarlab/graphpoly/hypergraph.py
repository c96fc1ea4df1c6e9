"""Hypergraphs, hypertrees and the interior polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from hstarlab.errors import DomainError
from hstarlab.graphpoly.graphs import Graph
from hstarlab.polycore import IntPolynomial


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``1..vertices`` and an ordered list of nonempty hyperedges."""

    vertices: int
    hyperedges: tuple[frozenset, ...]

    def __post_init__(self):
        hs = tuple(frozenset(int(v) for v in h) for h in self.hyperedges)
        for h in hs:
            if not h:
                raise DomainError("hyperedges must be nonempty")
            if not all(1 <= v <= self.vertices for v in h):
                raise DomainError(f"hyperedge {sorted(h)} leaves 1..{self.vertices}")
        object.__setattr__(self, "hyperedges", hs)

    def bip_edges(self) -> list[tuple[int, int]]:
        """Edges of the incidence graph: vertex ``v`` is node ``v - 1``, hyperedge
        ``j`` is node ``vertices + j``."""
        return [(v - 1, self.vertices + j) for j, h in enumerate(self.hyperedges) for v in sorted(h)]

    def bip_connected(self) -> bool:
        n = self.vertices + len(self.hyperedges)
        return n > 0 and _connected(n, self.bip_edges())

    def transpose(self) -> "Hypergraph":
        """Swap the roles of vertices and hyperedges."""
        return Hypergraph(
            len(self.hyperedges),
            tuple(frozenset(j + 1 for j, h in enumerate(self.hyperedges) if v in h) for v in range(1, self.vertices + 1)),
        )

    def reorder(self, order: Sequence[int]) -> "Hypergraph":
        return Hypergraph(self.vertices, tuple(self.hyperedges[k] for k in order))

    @classmethod
    def from_bipartite(cls, G: Graph, hyperedge_side: Iterable[int]) -> "Hypergraph":
        """Read a bipartite graph as a hypergraph: each node of ``hyperedge_side``
        (in increasing order) is the hyperedge of its neighbours."""
        hside = sorted(set(hyperedge_side))
        vside = [v for v in G.vertices if v not in set(hside)]
        pos = {v: k + 1 for k, v in enumerate(vside)}
        hs = []
        for w in hside:
            nb = G.neighbors(w)
            if any(u not in pos for u in nb):
                raise DomainError("hyperedge side is not an independent set")
            hs.append(frozenset(pos[u] for u in nb))
        return cls(len(vside), tuple(hs))

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "hyperedges": [sorted(h) for h in self.hyperedges]}

    @classmethod
    def from_json(cls, data: dict) -> "Hypergraph":
        v = data["vertices"]
        k = len(v) if isinstance(v, list) else int(v)
        return cls(k, tuple(frozenset(h) for h in data["hyperedges"]))


@dataclass(frozen=True, order=True)
class Hypertree:
    degrees: tuple[int, ...]


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def spanning_trees(n: int, edges: Sequence[tuple[int, int]]):
    """Yield every spanning tree of a connected multigraph as a tuple of edge
    indices.  Include/exclude branching: an edge joining two components may be
    taken, and it may be skipped only if the graph stays connected without it."""
    edges = list(edges)
    if not _connected(n, edges):
        raise DomainError("graph is disconnected")
    need = n - 1
    alive = [True] * len(edges)

    def rec(i: int, parent: list[int], chosen: list[int]):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if i == len(edges):
            return
        a, b = edges[i]
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            p2 = parent.copy()
            p2[ra] = rb
            chosen.append(i)
            yield from rec(i + 1, p2, chosen)
            chosen.pop()
        alive[i] = False
        rest = [e for k, e in enumerate(edges) if alive[k]]
        if _connected(n, rest):
            yield from rec(i + 1, parent, chosen)
        alive[i] = True

    yield from rec(0, list(range(n)), [])


def hypertrees(H: Hypergraph) -> set[Hypertree]:
    """Degree vectors ``f(e) = deg_T(e) - 1`` over spanning trees ``T`` of Bip H."""
    edges = H.bip_edges()
    n = H.vertices + len(H.hyperedges)
    if not H.bip_connected():
        raise DomainError("Bip H is disconnected")
    owner = [b - H.vertices for _, b in edges]
    out = set()
    for tree in spanning_trees(n, edges):
        deg = [-1] * len(H.hyperedges)
        for k in tree:
            deg[owner[k]] += 1
        out.add(Hypertree(tuple(deg)))
    return out


def internally_inactive(f: tuple[int, ...], j: int, trees: set[tuple[int, ...]]) -> bool:
    """Whether ``e_j`` can pass one unit of degree to an earlier hyperedge."""
    if f[j] == 0:
        return False
    for jp in range(j):
        g = list(f)
        g[j] -= 1
        g[jp] += 1
        if tuple(g) in trees:
            return True
    return False


def interior_polynomial(H: Hypergraph) -> IntPolynomial:
    trees = {t.degrees for t in hypertrees(H)}
    coeffs = [0] * (len(H.hyperedges) + 1)
    for f in trees:
        k = sum(internally_inactive(f, j, trees) for j in range(len(f)))
        coeffs[k] += 1
    poly = IntPolynomial(coeffs)
    bound = min(H.vertices, len(H.hyperedges)) - 1
    assert poly.degree <= bound, "interior polynomial degree bound violated"
    return poly
