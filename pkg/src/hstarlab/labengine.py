"""Locally anti-blocking polytopes: assembly from orthant pieces, the orthant
average and projection formulas for h*, and reflexivity through perfect graphs.

A locally anti-blocking polytope is described by one anti-blocking piece per
closed orthant; the polytope meets the orthant of ``eps`` exactly where the
unconditional closure of that piece does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from hstarlab.errors import (
    DomainError,
    NonIntegralError,
    NotLocallyAntiBlockingError,
    ResourceError,
    VerificationError,
)
from hstarlab.graphpoly import Graph, cuts, edge_polytope_B
from hstarlab.lattice import (
    LIMITS,
    VPolytope,
    hstar,
    hull,
    is_anti_blocking,
    is_reflexive,
    lattice_points,
    project,
    reflect,
    sign_vectors,
    unconditional_closure,
)
from hstarlab.polycore import IntPolynomial, RatPolynomial, gamma_decompose, is_palindromic
from hstarlab.posetpoly import Poset, chain_polytope, orthant_poset, stable_set_polytope

Signs = tuple[int, ...]


@dataclass
class OrthantAssignment:
    """One anti-blocking piece per sign vector.  ``graphs`` is filled when the
    pieces are stable set polytopes."""

    d: int
    pieces: dict[Signs, VPolytope]
    graphs: dict[Signs, Graph] = field(default_factory=dict)

    def __post_init__(self):
        self.pieces = {tuple(int(s) for s in k): v for k, v in self.pieces.items()}
        missing = [e for e in sign_vectors(self.d) if e not in self.pieces]
        if missing:
            raise DomainError(f"no piece for sign vectors {missing[:3]}")
        for eps, P in self.pieces.items():
            if P.ambient_dim != self.d:
                raise DomainError(f"piece for {eps} has dimension {P.ambient_dim}")
            if not is_anti_blocking(P):
                raise DomainError(f"piece for {eps} is not anti-blocking")

    def piece(self, eps: Sequence[int]) -> VPolytope:
        return self.pieces[tuple(eps)]

    @classmethod
    def uniform(cls, P: VPolytope) -> "OrthantAssignment":
        return cls(P.ambient_dim, {e: P for e in sign_vectors(P.ambient_dim)})

    @classmethod
    def from_graphs(cls, d: int, graphs: Mapping[Signs, Graph]) -> "OrthantAssignment":
        return cls(d, {e: stable_set_polytope(G) for e, G in graphs.items()}, dict(graphs))

    def to_json(self) -> dict:
        pieces = []
        for e in sign_vectors(self.d):
            entry = {"signs": list(e)}
            if e in self.graphs:
                entry["graph"] = self.graphs[e].to_json()
            else:
                entry["polytope"] = self.pieces[e].to_json()
            pieces.append(entry)
        return {"d": self.d, "pieces": pieces}

    @classmethod
    def from_json(cls, data: dict) -> "OrthantAssignment":
        d = int(data["d"])

        def parse(entry):
            if "graph" in entry:
                G = Graph.from_json(entry["graph"])
                return stable_set_polytope(G), G
            if "polytope" in entry:
                return VPolytope.from_json(entry["polytope"]), None
            raise DomainError("piece needs a 'polytope' or a 'graph'")

        pieces, graphs = {}, {}
        for entry in data.get("pieces", []):
            eps = tuple(int(s) for s in entry["signs"])
            if len(eps) != d or any(s not in (1, -1) for s in eps):
                raise DomainError(f"bad sign vector {entry['signs']}")
            pieces[eps], G = parse(entry)
            if G is not None:
                graphs[eps] = G
        if "default" in data:
            P, G = parse(data["default"])
            for e in sign_vectors(d):
                if e not in pieces:
                    pieces[e] = P
                    if G is not None:
                        graphs[e] = G
        return cls(d, pieces, graphs)


# -- instances ---------------------------------------------------------------------------


def unconditional_assignment(P: VPolytope) -> OrthantAssignment:
    return OrthantAssignment.uniform(P)


def twinned_assignment(P: Poset, Q: Poset) -> OrthantAssignment:
    """Pieces of the twinned chain polytope: the chain polytope of ``P`` on the
    positive coordinates placed below ``Q`` on the negative ones."""
    d = P.n
    return OrthantAssignment(d, {e: chain_polytope(orthant_poset(P, Q, e)) for e in sign_vectors(d)})


def suspension_assignment(G: Graph) -> OrthantAssignment:
    """Pieces of ``conv(±e_i, ±(e_i - e_j) : ij in E)``, which is the type A
    polytope of the suspension with the apex coordinate dropped.  The orthant of
    ``eps`` carries ``B`` of the cut at the positive coordinates, i.e. the
    stable set polytope of the cut's complement."""
    by_side = {c.side: c.graph for c in cuts(G)}
    full = frozenset(G.vertices)
    pieces, graphs = {}, {}
    for e in sign_vectors(G.n):
        S = frozenset(i + 1 for i, s in enumerate(e) if s > 0)
        H = by_side[S] if S in by_side else by_side[full - S]
        pieces[e] = edge_polytope_B(H)
        graphs[e] = H.complement()
    return OrthantAssignment(G.n, pieces, graphs)


def suspension_model(G: Graph) -> VPolytope:
    pts = []
    for i in G.vertices:
        v = [0] * G.n
        v[i - 1] = 1
        pts += [tuple(v), tuple(-x for x in v)]
    for i, j in G.edges:
        v = [0] * G.n
        v[i - 1], v[j - 1] = 1, -1
        pts += [tuple(v), tuple(-x for x in v)]
    return hull(pts, ambient_dim=G.n)


# -- consistency and assembly -----------------------------------------------------------------


def _point_set(P: VPolytope, m: int) -> set[tuple[int, ...]]:
    return set(map(tuple, lattice_points(P, m).tolist()))


def check_consistency(A: OrthantAssignment, dilations: Iterable[int] | None = None) -> list[tuple[Signs, Signs, int]]:
    """Neighbouring orthants ``eps``, ``eps'`` (differing at ``k``) whose pieces
    have different lattice points on ``x_k = 0`` at some dilation."""
    ms = list(range(1, A.d + 1)) if dilations is None else list(dilations)
    cache: dict[tuple[Signs, int], set] = {}

    def pts(e, m):
        if (e, m) not in cache:
            cache[(e, m)] = _point_set(A.pieces[e], m)
        return cache[(e, m)]

    bad = []
    for e in sign_vectors(A.d):
        for k in range(A.d):
            if e[k] < 0:
                continue
            f = e[:k] + (-1,) + e[k + 1 :]
            for m in ms:
                if {p for p in pts(e, m) if p[k] == 0} != {p for p in pts(f, m) if p[k] == 0}:
                    bad.append((e, f, k))
                    break
    return bad


def assemble(A: OrthantAssignment, verify: bool = True) -> VPolytope:
    """Hull of the reflected pieces, accepted only if every orthant slice of
    ``mP`` has the lattice points of the matching piece for ``m = 1..d``."""
    bad = check_consistency(A)
    if bad:
        e, f, k = bad[0]
        raise NotLocallyAntiBlockingError(f"pieces {e} and {f} disagree on x_{k + 1} = 0")
    P = hull((reflect(e, v) for e, piece in A.pieces.items() for v in piece.vertices), ambient_dim=A.d)
    if verify:
        for m in range(1, A.d + 1):
            whole = lattice_points(P, m).tolist()
            for e in sign_vectors(A.d):
                got = {reflect(e, z) for z in whole if all(s * x >= 0 for s, x in zip(e, z))}
                if got != _point_set(A.pieces[e], m):
                    raise NotLocallyAntiBlockingError(
                        f"orthant {e} of the hull differs from its piece at dilation {m}"
                    )
    return P


# -- h* formulas -------------------------------------------------------------------------------


def hstar_unconditional_via_projections(P: VPolytope) -> IntPolynomial:
    """h* of the unconditional closure from the h* of all coordinate projections:
    ``sum_j 2^j (x - 1)^(d - j) sum_{|J| = j} h*(pi_J P)``."""
    if not is_anti_blocking(P):
        raise DomainError("projection formula needs an anti-blocking polytope")
    d = P.ambient_dim
    xm1 = IntPolynomial([-1, 1])
    out = IntPolynomial()
    for j in range(d + 1):
        inner = IntPolynomial()
        for J in combinations(range(d), j):
            inner = inner + (hstar(project(P, J)) if J else IntPolynomial([1]))
        out = out + inner * (2**j) * xm1 ** (d - j)
    return out


def _piece_hstar(P: VPolytope, method: str) -> IntPolynomial:
    if method == "projections":
        return hstar_unconditional_via_projections(P)
    if method == "oracle":
        return hstar(unconditional_closure(P))
    if method == "both":
        a, b = hstar_unconditional_via_projections(P), hstar(unconditional_closure(P))
        if a != b:
            raise VerificationError(f"projection formula {a} != oracle {b}")
        return a
    raise DomainError(f"unknown method {method!r}")


def orthant_terms(A: OrthantAssignment, method: str = "projections") -> dict[Signs, IntPolynomial]:
    """h* of the unconditional closure of each piece (shared pieces computed once)."""
    memo: dict[tuple, IntPolynomial] = {}
    out = {}
    for e in sign_vectors(A.d):
        key = A.pieces[e].vertices
        if key not in memo:
            memo[key] = _piece_hstar(A.pieces[e], method)
        out[e] = memo[key]
    return out


def hstar_locally_antiblocking(A: OrthantAssignment, method: str = "projections", check: bool = False) -> IntPolynomial:
    """Average of the per-orthant h* over all ``2^d`` sign vectors.

    With ``check`` the pieces are assembled and the oracle h* of the result must
    agree; otherwise the assignment is trusted.
    """
    terms = orthant_terms(A, method)
    total = IntPolynomial()
    for t in terms.values():
        total = total + t
    avg = total.to_rational() / 2**A.d
    try:
        h = avg.to_int()
    except NonIntegralError as exc:
        raise VerificationError(f"orthant average is not integral: {avg}") from exc
    if check:
        oracle = hstar(assemble(A))
        if oracle != h:
            raise VerificationError(f"orthant average {h} != oracle {oracle}")
    return h


def gamma_average_consistent(terms: Iterable[IntPolynomial], d: int) -> bool:
    """For palindromic degree-``d`` terms, the gamma vector of their average is
    the average of their gamma vectors."""
    terms = list(terms)
    if not all(is_palindromic(t, d) for t in terms):
        raise DomainError("gamma averaging needs palindromic terms of degree d")
    size = d // 2 + 1
    gs = [gamma_decompose(t, d) for t in terms]
    avg_terms = [sum(g[i] for g in gs) for i in range(size)]
    total = RatPolynomial()
    for t in terms:
        total = total + t.to_rational()
    avg = total / len(terms)
    return [Fraction(a) for a in gamma_decompose(avg, d)] == [Fraction(a, len(terms)) for a in avg_terms]


# -- perfect graphs ----------------------------------------------------------------------------


def _adjacency(G: Graph) -> list[int]:
    adj = [0] * G.n
    for i, j in G.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return adj


def _induced_cycle(adj: list[int], S: Sequence[int]) -> bool:
    mask = 0
    for v in S:
        mask |= 1 << v
    if any((adj[v] & mask).bit_count() != 2 for v in S):
        return False
    # 2-regular: a single cycle iff connected
    seen, stack = {S[0]}, [S[0]]
    while stack:
        u = stack.pop()
        nb = adj[u] & mask
        while nb:
            low = nb & -nb
            w = low.bit_length() - 1
            nb ^= low
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(S)


def has_odd_hole(G: Graph) -> bool:
    """Induced odd cycle of length at least 5."""
    adj = _adjacency(G)
    for k in range(5, G.n + 1, 2):
        for S in combinations(range(G.n), k):
            if _induced_cycle(adj, S):
                return True
    return False


def _clique_number(adj: list[int], mask: int) -> int:
    best = 0

    def rec(cand: int, size: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            rec(cand & adj[v], size + 1)
            cand ^= low
            if size + cand.bit_count() <= best:
                return

    rec(mask, 0)
    return best


def _colourable(adj: list[int], verts: list[int], k: int) -> bool:
    colour = {}

    def rec(i: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        used = {colour[u] for u in colour if adj[v] >> u & 1}
        # symmetry: never open more than one new colour
        top = max(colour.values(), default=-1)
        for c in range(min(k, top + 2)):
            if c not in used:
                colour[v] = c
                if rec(i + 1):
                    return True
                del colour[v]
        return False

    return rec(0)


def chromatic_number(G: Graph, vertices: Iterable[int] | None = None) -> int:
    adj = _adjacency(G)
    verts = sorted(v - 1 for v in (G.vertices if vertices is None else vertices))
    if not verts:
        return 0
    verts.sort(key=lambda v: -(adj[v]).bit_count())
    k = 1
    while not _colourable(adj, verts, k):
        k += 1
    return k


def is_perfect_definitional(G: Graph) -> bool:
    """Chromatic number equals clique number on every induced subgraph."""
    adj = _adjacency(G)
    for mask in range(1, 1 << G.n):
        verts = [v + 1 for v in range(G.n) if mask >> v & 1]
        if chromatic_number(G, verts) != _clique_number(adj, mask):
            return False
    return True


def is_perfect(G: Graph, cross_check_up_to: int = 8) -> bool:
    """No odd hole in ``G`` or its complement; on graphs with at most
    ``cross_check_up_to`` vertices the colouring definition is checked too."""
    if G.n > LIMITS.max_graph_vertices:
        raise ResourceError(f"perfectness test capped at {LIMITS.max_graph_vertices} vertices")
    verdict = not has_odd_hole(G) and not has_odd_hole(G.complement())
    if G.n <= cross_check_up_to and verdict != is_perfect_definitional(G):
        raise VerificationError("odd-hole test and colouring definition disagree")
    return verdict


@dataclass(frozen=True)
class ReflexivityVerdict:
    reflexive: bool
    all_perfect: bool
    polytope: VPolytope

    @property
    def consistent(self) -> bool:
        return self.reflexive == self.all_perfect


def check_reflexive_via_perfect(assignment: OrthantAssignment | Mapping[Signs, Graph], d: int | None = None) -> ReflexivityVerdict:
    """Assemble the stable set pieces and compare facet reflexivity with
    perfectness of every orthant graph."""
    if not isinstance(assignment, OrthantAssignment):
        graphs = dict(assignment)
        d = len(next(iter(graphs))) if d is None else d
        assignment = OrthantAssignment.from_graphs(d, graphs)
    if set(assignment.graphs) != set(assignment.pieces):
        raise DomainError("every orthant needs a graph")
    P = assemble(assignment)
    perfect = {}
    for G in assignment.graphs.values():
        if G not in perfect:
            perfect[G] = is_perfect(G)
    verdict = ReflexivityVerdict(is_reflexive(P), all(perfect.values()), P)
    if not verdict.consistent:
        raise VerificationError(f"reflexive={verdict.reflexive} but all_perfect={verdict.all_perfect}")
    return verdict
