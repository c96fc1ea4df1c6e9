"""Simple graphs with an ordered edge list, and the graph operations used by the
symmetric edge polytope formulas."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from hstarlab.errors import DomainError


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1..n``.

    The edge order is part of the value: it fixes hyperedge order, and hence
    internal activity, for anything derived from the graph.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen = set()
        norm = []
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise DomainError(f"edge {e} has a vertex outside 1..{self.n}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DomainError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set()

    def neighbors(self, v: int) -> list[int]:
        return sorted({j for i, j in self.edges if i == v} | {i for i, j in self.edges if j == v})

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel the nodes of ``g`` to ``1..n`` in sorted order."""
        order = {v: k + 1 for k, v in enumerate(sorted(g.nodes()))}
        return cls(len(order), tuple(sorted((order[a], order[b]) for a, b in g.edges())))

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def bipartition(self) -> tuple[frozenset, frozenset] | None:
        """A 2-colouring with the smallest vertex of each component on the first side,
        or ``None`` if the graph has an odd cycle."""
        side: dict[int, int] = {}
        for s in self.vertices:
            if s in side:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if w not in side:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        return (
            frozenset(v for v in self.vertices if side[v] == 0),
            frozenset(v for v in self.vertices if side[v] == 1),
        )

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def complement(self) -> "Graph":
        es = self.edge_set()
        return Graph(self.n, tuple(e for e in combinations(self.vertices, 2) if e not in es))

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabelled to ``1..k`` preserving order."""
        keep = sorted(set(keep))
        pos = {v: k + 1 for k, v in enumerate(keep)}
        return Graph(len(keep), tuple((pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos))

    def delete_edge(self, e: Sequence[int]) -> "Graph":
        key = (min(e), max(e))
        if key not in self.edge_set():
            raise DomainError(f"{key} is not an edge")
        return Graph(self.n, tuple(f for f in self.edges if f != key))

    def relabel(self, perm: dict[int, int]) -> "Graph":
        return Graph(self.n, tuple((perm[i], perm[j]) for i, j in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


# -- families -------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``1..a`` and ``a+1..a+b``."""
    return Graph(a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((1, j) for j in range(2, leaves + 2)))


# -- recognisers ----------------------------------------------------------------


def is_cycle(G: Graph) -> bool:
    return G.n >= 3 and len(G.edges) == G.n and G.is_connected() and all(G.degree(v) == 2 for v in G.vertices)


def is_complete(G: Graph) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


def complete_bipartite_sides(G: Graph) -> tuple[int, int] | None:
    """``(a, b)`` with ``a <= b`` if ``G`` is a connected ``K_{a,b}``."""
    if not G.is_connected():
        return None
    parts = G.bipartition()
    if parts is None:
        return None
    a, b = sorted(len(p) for p in parts)
    if a == 0 or len(G.edges) != a * b:
        return None
    return a, b


def dominating_vertex(G: Graph) -> int | None:
    for v in G.vertices:
        if G.degree(v) == G.n - 1:
            return v
    return None


# -- operations -------------------------------------------------------------------


def suspension(G: Graph) -> Graph:
    """Add vertex ``n+1`` joined to every vertex; new edges come last."""
    return Graph(G.n + 1, G.edges + tuple((i, G.n + 1) for i in G.vertices))


def tilde_extend(G: Graph, bipartition: tuple[Iterable[int], Iterable[int]] | None = None) -> Graph:
    """The connected bipartite graph on ``n+2`` vertices adding edges
    ``{i, n+1}`` for ``i`` in the first side and ``{j, n+2}`` for ``j`` in the
    second side together with ``n+1``."""
    if bipartition is None:
        bipartition = G.bipartition()
        if bipartition is None:
            raise DomainError("graph is not bipartite")
    V1, V2 = set(bipartition[0]), set(bipartition[1])
    if V1 & V2 or V1 | V2 != set(G.vertices):
        raise DomainError("sides must partition the vertex set")
    if any((i in V1) == (j in V1) for i, j in G.edges):
        raise DomainError("an edge lies inside one side of the bipartition")
    a, b = G.n + 1, G.n + 2
    extra = tuple((i, a) for i in sorted(V1)) + tuple((j, b) for j in sorted(V2)) + ((a, b),)
    return Graph(G.n + 2, G.edges + extra)


@dataclass(frozen=True)
class Cut:
    side: frozenset
    graph: Graph

    @property
    def bipartition(self) -> tuple[frozenset, frozenset]:
        return self.side, frozenset(self.graph.vertices) - self.side


def cuts(G: Graph) -> list[Cut]:
    """One cut ``E_S`` per complementary pair ``{S, [n] - S}``, represented by the
    ``S`` containing vertex 1; each keeps its defining bipartition."""
    if G.n < 1:
        raise DomainError("cuts need at least one vertex")
    out = []
    rest = list(range(2, G.n + 1))
    for mask in range(1 << (G.n - 1)):
        S = frozenset([1] + [v for k, v in enumerate(rest) if mask >> k & 1])
        out.append(Cut(S, Graph(G.n, tuple(e for e in G.edges if (e[0] in S) != (e[1] in S)))))
    return out


def contract(G: Graph, e: Sequence[int]) -> Graph:
    """Identify the ends of ``e`` (merged vertex keeps the smaller label, labels
    above the larger shift down) and drop loops and parallel edges."""
    i, j = min(e), max(e)
    if (i, j) not in G.edge_set():
        raise DomainError(f"({i}, {j}) is not an edge")

    def lab(v: int) -> int:
        if v == j:
            return i
        return v - 1 if v > j else v

    out, seen = [], set()
    for a, b in G.edges:
        if (a, b) == (i, j):
            continue
        u, w = lab(a), lab(b)
        key = (min(u, w), max(u, w))
        if u != w and key not in seen:
            seen.add(key)
            out.append(key)
    return Graph(G.n - 1, tuple(out))


def two_connected_components(G: Graph) -> list[Graph]:
    """Blocks (maximal 2-connected subgraphs and bridges), each relabelled to its
    own ``1..k`` in vertex order, listed by smallest original vertex."""
    blocks = []
    for edges in nx.biconnected_component_edges(G.to_networkx()):
        edges = [(min(a, b), max(a, b)) for a, b in edges]
        verts = sorted({v for e in edges for v in e})
        pos = {v: k + 1 for k, v in enumerate(verts)}
        ordered = [f for f in G.edges if f in set(edges)]
        blocks.append((verts, Graph(len(verts), tuple((pos[a], pos[b]) for a, b in ordered))))
    blocks.sort(key=lambda t: t[0])
    return [g for _, g in blocks]


def is_bridge(G: Graph, e: Sequence[int]) -> bool:
    H = G.delete_edge(e).to_networkx()
    return nx.number_connected_components(H) > nx.number_connected_components(G.to_networkx())


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism (``n <= 7``)."""
    out = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == n and n > 0 and nx.is_connected(g):
            out.append(Graph.from_networkx(g))
    return out


def all_graphs(n: int) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism (``n <= 7``)."""
    return [Graph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
