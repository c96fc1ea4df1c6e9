"""Finite posets, chain/order/enriched chain polytopes, left peak polynomials,
twinned chain polytopes and enriched (P,Q)-partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from hstarlab.errors import DomainError, NonIntegralError, VerificationError
from hstarlab.graphpoly.graphs import Graph
from hstarlab.lattice import (
    VPolytope,
    cayley_sum,
    gamma_join,
    hstar,
    hull,
    omega_join,
    unconditional_closure,
)
from hstarlab.polycore import IntPolynomial, RatPolynomial, gamma_expand, interpolate, is_gamma_positive


@dataclass(frozen=True)
class Poset:
    """A strict partial order on a finite set of integer labels.

    ``less`` is transitively closed; build from cover relations with
    :meth:`from_relations`.
    """

    elements: tuple[int, ...]
    less: frozenset = frozenset()

    def __post_init__(self):
        els = tuple(sorted(set(int(x) for x in self.elements)))
        rel = frozenset((int(a), int(b)) for a, b in self.less)
        es = set(els)
        for a, b in rel:
            if a not in es or b not in es:
                raise DomainError(f"relation {a} < {b} leaves the ground set")
            if a == b or (b, a) in rel:
                raise DomainError("relation is not irreflexive / antisymmetric")
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    raise DomainError("relation is not transitively closed")
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "less", rel)

    @classmethod
    def from_relations(cls, elements: int | Iterable[int], relations: Iterable[Sequence[int]] = ()) -> "Poset":
        """Transitive closure of ``relations`` (pairs ``(i, j)`` meaning ``i < j``).
        An int ``elements`` means the ground set ``1..n``."""
        els = tuple(range(1, elements + 1)) if isinstance(elements, int) else tuple(elements)
        rel = {(int(a), int(b)) for a, b in relations}
        while True:
            extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
            if not extra:
                break
            rel |= extra
        if any(a == b for a, b in rel):
            raise DomainError("relations contain a cycle")
        return cls(els, frozenset(rel))

    @property
    def n(self) -> int:
        return len(self.elements)

    def lt(self, a: int, b: int) -> bool:
        return (a, b) in self.less

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.less or (b, a) in self.less

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for a, b in sorted(self.less):
            if not any((a, c) in self.less and (c, b) in self.less for c in self.elements):
                out.append((a, b))
        return out

    def is_naturally_labeled(self) -> bool:
        return all(a < b for a, b in self.less)

    def index(self) -> dict[int, int]:
        """Element to 0-based coordinate."""
        return {e: k for k, e in enumerate(self.elements)}

    def comparability_graph(self) -> Graph:
        pos = self.index()
        return Graph(self.n, tuple(sorted((min(pos[a], pos[b]) + 1, max(pos[a], pos[b]) + 1) for a, b in self.less)))

    def relabel(self, perm: dict[int, int]) -> "Poset":
        return Poset(tuple(perm[e] for e in self.elements), frozenset((perm[a], perm[b]) for a, b in self.less))

    def to_json(self) -> dict:
        if self.elements != tuple(range(1, self.n + 1)):
            raise DomainError("only posets on 1..n serialise")
        return {"n": self.n, "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        return cls.from_relations(int(data["n"]), data.get("covers", []))


def chain(n: int) -> Poset:
    return Poset.from_relations(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> Poset:
    return Poset.from_relations(n)


# -- combinatorics ----------------------------------------------------------------------


def antichains(P: Poset) -> list[frozenset]:
    out = []
    for k in range(P.n + 1):
        for S in combinations(P.elements, k):
            if not any(P.comparable(a, b) for a, b in combinations(S, 2)):
                out.append(frozenset(S))
    return out


def filters(P: Poset) -> list[frozenset]:
    """Up-closed subsets (complements of order ideals)."""
    return [
        frozenset(S)
        for k in range(P.n + 1)
        for S in combinations(P.elements, k)
        if all(b in S for a, b in P.less if a in S)
    ]


@dataclass(frozen=True)
class LinearExtension:
    perm: tuple[int, ...]


def linear_extensions(P: Poset) -> list[LinearExtension]:
    """Every linear extension, in lexicographic order."""
    below = {e: {a for a, b in P.less if b == e} for e in P.elements}
    out: list[LinearExtension] = []

    def rec(prefix: list[int], placed: set[int]):
        if len(prefix) == P.n:
            out.append(LinearExtension(tuple(prefix)))
            return
        for e in P.elements:
            if e not in placed and below[e] <= placed:
                prefix.append(e)
                placed.add(e)
                rec(prefix, placed)
                placed.discard(e)
                prefix.pop()

    rec([], set())
    return out


def relabel_natural(P: Poset) -> tuple[Poset, dict[int, int]]:
    """Relabel along the lexicographically smallest linear extension: its
    ``k``-th element becomes ``k``."""
    first = linear_extensions(P)[0].perm
    perm = {e: k + 1 for k, e in enumerate(first)}
    return P.relabel(perm), perm


def ordinal_sum(P: Poset, Q: Poset) -> Poset:
    """Everything of ``P`` below everything of ``Q``."""
    if set(P.elements) & set(Q.elements):
        raise DomainError("ordinal sum needs disjoint ground sets")
    rel = set(P.less) | set(Q.less) | {(a, b) for a in P.elements for b in Q.elements}
    return Poset(P.elements + Q.elements, frozenset(rel))


def induced_subposet(P: Poset, I: Iterable[int]) -> Poset:
    I = set(I)
    if not I <= set(P.elements):
        raise DomainError("subset leaves the ground set")
    return Poset(tuple(I), frozenset((a, b) for a, b in P.less if a in I and b in I))


def left_peaks(perm: Sequence[int]) -> int:
    """Indices ``1 <= i <= d-1`` with ``pi_{i-1} < pi_i > pi_{i+1}`` and ``pi_0 = 0``."""
    seq = (0,) + tuple(perm)
    return sum(seq[i - 1] < seq[i] > seq[i + 1] for i in range(1, len(perm)))


def left_peak_polynomial(P: Poset) -> IntPolynomial:
    """Left peak counts over linear extensions, read on the labels as given.
    The h* identity needs a natural labelling; see :func:`hstar_enriched_chain`."""
    coeffs = [0] * (P.n + 1)
    for L in linear_extensions(P):
        coeffs[left_peaks(L.perm)] += 1
    return IntPolynomial(coeffs)


def _left_enriched_ok(a: int, b: int, fa: int, fb: int) -> bool:
    """Conditions for ``a < b``: ``|f(a)| <= |f(b)|`` and ties force ``f(b) >= 0``."""
    if abs(fa) > abs(fb):
        return False
    return abs(fa) != abs(fb) or fb >= 0


def _count_maps(P: Poset, window: range, ok_pair) -> int:
    """Backtracking count of maps ``P -> window`` with every comparable pair
    accepted by ``ok_pair(a, b, f(a), f(b))`` (``a < b``)."""
    order = list(linear_extensions(P)[0].perm) if P.n else []
    rels = {e: [] for e in order}
    for a, b in P.less:
        rels[b].append(a)
    vals: dict[int, int] = {}
    count = 0

    def rec(k: int):
        nonlocal count
        if k == len(order):
            count += 1
            return
        e = order[k]
        for v in window:
            if all(ok_pair(a, e, vals[a], v) for a in rels[e]):
                vals[e] = v
                rec(k + 1)
        vals.pop(e, None)

    rec(0)
    return count


def left_enriched_order_count(P: Poset, m: int) -> int:
    """Maps ``f`` with ``|f| <= m`` that are left enriched P-partitions."""
    if m < 0:
        raise DomainError("m must be nonnegative")
    return _count_maps(P, range(-m, m + 1), _left_enriched_ok)


# -- polytopes --------------------------------------------------------------------------


def _indicator(P: Poset, S: Iterable[int]) -> tuple[int, ...]:
    pos = P.index()
    v = [0] * P.n
    for e in S:
        v[pos[e]] = 1
    return tuple(v)


def chain_polytope(P: Poset) -> VPolytope:
    return hull((_indicator(P, A) for A in antichains(P)), ambient_dim=P.n)


def order_polytope(P: Poset) -> VPolytope:
    """Vertices are the indicator vectors of filters."""
    return hull((_indicator(P, F) for F in filters(P)), ambient_dim=P.n)


def enriched_chain_polytope(P: Poset) -> VPolytope:
    return unconditional_closure(chain_polytope(P))


def stable_sets(G: Graph) -> list[frozenset]:
    adj = [0] * (G.n + 1)
    for i, j in G.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    out = []
    for mask in range(1 << G.n):
        S = [v for v in G.vertices if mask >> (v - 1) & 1]
        bits = mask << 1
        if all(not (adj[v] & bits) for v in S):
            out.append(frozenset(S))
    return out


def stable_set_polytope(G: Graph) -> VPolytope:
    pts = []
    for S in stable_sets(G):
        v = [0] * G.n
        for i in S:
            v[i - 1] = 1
        pts.append(tuple(v))
    return hull(pts, ambient_dim=G.n)


def hstar_enriched_chain(P: Poset) -> IntPolynomial:
    """h* of the unconditional chain polytope from the left peak polynomial of a
    natural relabelling."""
    R, _ = relabel_natural(P)
    return gamma_expand(left_peak_polynomial(R), P.n)


# -- twinned chain polytopes --------------------------------------------------------------


def _same_ground(P: Poset, Q: Poset) -> None:
    if P.elements != Q.elements:
        raise DomainError("posets must share a ground set")


def twinned_chain_polytope(P: Poset, Q: Poset) -> VPolytope:
    _same_ground(P, Q)
    return gamma_join(chain_polytope(P), chain_polytope(Q))


def orthant_poset(P: Poset, Q: Poset, eps: Sequence[int]) -> Poset:
    """``P`` on the positive coordinates placed below ``Q`` on the rest."""
    _same_ground(P, Q)
    I = [e for e, s in zip(P.elements, eps) if s > 0]
    J = [e for e, s in zip(P.elements, eps) if s < 0]
    return ordinal_sum(induced_subposet(P, I), induced_subposet(Q, J))


def f_PQ(P: Poset, Q: Poset) -> RatPolynomial:
    """Average over sign vectors of the left peak polynomial of the naturally
    relabelled orthant poset (rational in general)."""
    _same_ground(P, Q)
    total = IntPolynomial()
    for eps in product((1, -1), repeat=P.n):
        R, _ = relabel_natural(orthant_poset(P, Q, eps))
        total = total + left_peak_polynomial(R)
    return total.to_rational() / 2**P.n


def hstar_twinned(P: Poset, Q: Poset) -> IntPolynomial:
    h = gamma_expand(f_PQ(P, Q), P.n)
    try:
        return h.to_int()
    except NonIntegralError as exc:
        raise VerificationError(f"orthant average is not integral: {h}") from exc


def _enriched_pq_ok(P: Poset, Q: Poset, literal: bool):
    def ok(a, b, fa, fb):
        # pair a < b in P or Q
        if P.lt(a, b) and fa >= 0 and fb >= 0 and fa > fb:
            return False
        if Q.lt(a, b):
            if literal and fa <= 0 and fb <= 0 and fa < fb:
                return False
            if not literal and fa < 0 and fb < 0 and fa <= fb:
                return False
        return True

    return ok


def enriched_PQ_count(P: Poset, Q: Poset, m: int, literal: bool = False) -> int:
    """Enriched (P,Q)-partitions with ``M(f) - m(f) <= m``.

    Nonnegative values weakly increase along ``P``.  By default negative values
    strictly decrease along ``Q`` and zeros are unconstrained by ``Q``; this is
    the set in bijection with the lattice points of the dilated twinned chain
    polytope (the nonnegative part is read as ``f >= 0``).  ``literal=True``
    instead applies the weak ``Q`` condition to all values ``<= 0``, which
    overcounts or undercounts once ``d >= 3``.

    Since ``m(f) <= 0 <= M(f)``, every value lies in ``[-m, m]``, so that window
    is searched exhaustively.
    """
    _same_ground(P, Q)
    if m < 0:
        raise DomainError("m must be nonnegative")
    if P.n == 0:
        return 1
    ok = _enriched_pq_ok(P, Q, literal)
    rels = sorted(set(P.less) | set(Q.less))
    order = list(P.elements)
    pos = {e: k for k, e in enumerate(order)}
    earlier = {e: [] for e in order}
    for a, b in rels:
        if pos[a] < pos[b]:
            earlier[b].append((a, True))
        else:
            earlier[a].append((b, False))
    vals: dict[int, int] = {}
    count = 0

    def rec(k: int, lo: int, hi: int):
        nonlocal count
        if k == len(order):
            count += 1
            return
        e = order[k]
        for v in range(-m, m + 1):
            nlo, nhi = min(lo, v), max(hi, v)
            if nhi - nlo > m:
                continue
            good = True
            for o, o_first in earlier[e]:
                if o_first and not ok(o, e, vals[o], v):
                    good = False
                    break
                if not o_first and not ok(e, o, v, vals[o]):
                    good = False
                    break
            if good:
                vals[e] = v
                rec(k + 1, nlo, nhi)
        vals.pop(e, None)

    rec(0, 0, 0)
    return count


def enriched_PQ_polynomial(P: Poset, Q: Poset) -> RatPolynomial:
    """Degree-``n`` interpolant of the counts at ``m = 0..n``."""
    return interpolate([(m, enriched_PQ_count(P, Q, m)) for m in range(P.n + 1)])


def satisfies_reciprocity(F: RatPolynomial, d: int) -> bool:
    """``F(m) = (-1)^d F(-m-1)`` as polynomials."""
    x = RatPolynomial([-1, -1])
    G = RatPolynomial([0])
    for i, c in enumerate(F.coeffs):
        G = G + x**i * c
    return F == G * (-1) ** d


def have_common_linear_extension(P: Poset, Q: Poset) -> bool:
    _same_ground(P, Q)
    return bool({L.perm for L in linear_extensions(P)} & {L.perm for L in linear_extensions(Q)})


@dataclass
class IdentityReport:
    hstar: IntPolynomial
    polynomials: dict[str, IntPolynomial] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    common_extension: bool = False

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "hstar": self.hstar.to_json(),
            "polynomials": {k: v.to_json() for k, v in self.polynomials.items()},
            "checks": dict(self.checks),
            "common_extension": self.common_extension,
        }


def related_hstar_identities(P: Poset, Q: Poset) -> IdentityReport:
    """Oracle h* of the polytopes built from order and chain polytopes that are
    tied to the twinned chain polytope, with pass/fail flags."""
    _same_ground(P, Q)
    OP, CP, CQ = order_polytope(P), chain_polytope(P), chain_polytope(Q)
    base = hstar(twinned_chain_polytope(P, Q))
    one = IntPolynomial([1, 1])
    rep = IdentityReport(base, common_extension=have_common_linear_extension(P, Q))
    polys = rep.polynomials
    polys["gamma(O_P,C_Q)"] = hstar(gamma_join(OP, CQ))
    polys["omega(O_P,C_Q)"] = hstar(omega_join(OP, CQ))
    polys["cayley(O_P,C_Q)"] = hstar(cayley_sum(OP, CQ))
    polys["omega(C_P,C_Q)"] = hstar(omega_join(CP, CQ))
    rep.checks["gamma(O_P,C_Q)"] = polys["gamma(O_P,C_Q)"] == base
    rep.checks["omega(O_P,C_Q)"] = polys["omega(O_P,C_Q)"] == one * base
    rep.checks["cayley(O_P,C_Q)"] = polys["cayley(O_P,C_Q)"] == base
    rep.checks["omega(C_P,C_Q) gamma-positive"] = is_gamma_positive(polys["omega(C_P,C_Q)"], P.n + 1)
    if rep.common_extension:
        OQ = order_polytope(Q)
        polys["gamma(O_P,O_Q)"] = hstar(gamma_join(OP, OQ))
        polys["omega(O_P,O_Q)"] = hstar(omega_join(OP, OQ))
        rep.checks["gamma(O_P,O_Q)"] = polys["gamma(O_P,O_Q)"] == base
        rep.checks["omega(O_P,O_Q)"] = polys["omega(O_P,O_Q)"] == one * base
    return rep


# -- enumeration --------------------------------------------------------------------------


def all_posets(n: int, natural: bool = False) -> list[Poset]:
    """Every poset on ``1..n`` (every naturally labelled one if ``natural``)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j and (not natural or i < j)]
    out = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, d) not in rel for a, b in rel for c, d in rel if b == c):
            continue
        out.append(Poset(tuple(range(1, n + 1)), frozenset(rel)))
    return out
