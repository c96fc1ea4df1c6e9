"""Symmetric edge polytopes of types A and B and their h*-polynomial formulas."""

from __future__ import annotations

from math import comb
from typing import Callable, Sequence

from hstarlab.errors import DomainError, NonIntegralError, VerificationError
from hstarlab.graphpoly.graphs import (
    Graph,
    complete_bipartite_sides,
    contract,
    cuts,
    dominating_vertex,
    is_bridge,
    is_complete,
    is_cycle,
    tilde_extend,
    two_connected_components,
)
from hstarlab.graphpoly.hypergraph import Hypergraph, interior_polynomial
from hstarlab.lattice import (
    VPolytope,
    cross_polytope,
    del_pezzo,
    hstar,
    hull,
    pseudo_del_pezzo,
    unconditional_closure,
)
from hstarlab.polycore import IntPolynomial, RatPolynomial, gamma_expand, is_gamma_positive

X1 = IntPolynomial([1, 1])


def _unit(d: int, i: int, s: int = 1) -> tuple[int, ...]:
    v = [0] * d
    v[i - 1] = s
    return tuple(v)


def symmetric_edge_A(G: Graph) -> VPolytope:
    if not G.edges:
        raise DomainError("type A symmetric edge polytope needs at least one edge")
    pts = []
    for i, j in G.edges:
        v = [0] * G.n
        v[i - 1], v[j - 1] = 1, -1
        pts.append(tuple(v))
        pts.append(tuple(-x for x in v))
    P = hull(pts, ambient_dim=G.n)
    assert (P.dim == G.n - 1) == G.is_connected()
    return P


def edge_polytope_B(G: Graph) -> VPolytope:
    """``conv(0, e_i, e_i + e_j)`` over vertices and edges."""
    pts = [(0,) * G.n] + [_unit(G.n, i) for i in G.vertices]
    for i, j in G.edges:
        v = [0] * G.n
        v[i - 1] = v[j - 1] = 1
        pts.append(tuple(v))
    return hull(pts, ambient_dim=G.n)


def symmetric_edge_B(G: Graph) -> VPolytope:
    return unconditional_closure(edge_polytope_B(G))


# -- type B ------------------------------------------------------------------------


def tilde_hypergraph(G: Graph, bipartition=None) -> Hypergraph:
    """``G~`` read as a hypergraph whose hyperedges are the side holding ``n+1``."""
    if bipartition is None:
        bipartition = G.bipartition()
        if bipartition is None:
            raise DomainError("graph is not bipartite")
    T = tilde_extend(G, bipartition)
    return Hypergraph.from_bipartite(T, set(bipartition[1]) | {G.n + 1})


def hstar_B(G: Graph, bipartition=None) -> IntPolynomial:
    """h* of the type B polytope as the gamma-expansion of ``I_{G~}``."""
    I = interior_polynomial(tilde_hypergraph(G, bipartition))
    return gamma_expand(I, G.n)


# -- type A via cuts -----------------------------------------------------------------


def suspension_gamma_polynomial(G: Graph) -> RatPolynomial:
    """``f_G = 2^{1-d} * sum over cuts of I_{H~}`` (rational in general)."""
    total = IntPolynomial()
    for cut in cuts(G):
        total = total + interior_polynomial(tilde_hypergraph(cut.graph, cut.bipartition))
    return total.to_rational() / 2 ** (G.n - 1)


def hstar_A_suspension(G: Graph) -> IntPolynomial:
    """h* of the type A polytope of the suspension of ``G`` (cut average)."""
    h = gamma_expand(suspension_gamma_polynomial(G), G.n)
    try:
        return h.to_int()
    except NonIntegralError as exc:
        raise VerificationError(f"cut average is not integral: {h}") from exc


# -- closed forms --------------------------------------------------------------------


def _sum_terms(terms) -> IntPolynomial:
    out = IntPolynomial()
    for c, i, e in terms:
        out = out + IntPolynomial([0] * i + [c]) * X1**e
    return out


def closed_form_cycle(d: int) -> IntPolynomial:
    if d < 3:
        raise DomainError("cycle length must be at least 3")
    return _sum_terms((comb(2 * i, i), i, d - 1 - 2 * i) for i in range((d - 1) // 2 + 1))


def closed_form_delpezzo(m: int) -> IntPolynomial:
    if m < 1:
        raise DomainError("m must be at least 1")
    return _sum_terms((comb(2 * i, i), i, 2 * m - 2 * i) for i in range(m + 1))


def closed_form_pseudo_delpezzo(m: int) -> IntPolynomial:
    if m < 1:
        raise DomainError("m must be at least 1")
    return X1 ** (2 * m) + _sum_terms((comb(2 * i - 1, i - 1), i, 2 * m - 2 * i) for i in range(1, m + 1))


def closed_form_complete(d: int) -> IntPolynomial:
    if d < 2:
        raise DomainError("complete graph needs at least 2 vertices")
    return _sum_terms(
        (comb(d - 1, 2 * i) * comb(2 * i, i), i, d - 1 - 2 * i) for i in range((d - 1) // 2 + 1)
    )


def closed_form_complete_bipartite(m: int, n: int) -> IntPolynomial:
    """h* of the type A polytope of ``K_{m+1,n+1}``."""
    if m < 0 or n < 0:
        raise DomainError("m and n must be nonnegative")
    return _sum_terms(
        (comb(2 * a, a) * comb(m, a) * comb(n, a), a, m + n - 2 * a + 1) for a in range(min(m, n) + 1)
    )


def complete_bipartite_interior(s: int, t: int) -> IntPolynomial:
    """``sum_i C(s,i) C(t,i) x^i``."""
    return IntPolynomial([comb(s, i) * comb(t, i) for i in range(min(s, t) + 1)])


# -- dispatcher ----------------------------------------------------------------------


def block_product(blocks: Sequence[Graph], f: Callable[[Graph], IntPolynomial]) -> IntPolynomial:
    out = IntPolynomial([1])
    for b in blocks:
        out = out * f(b)
    return out


def _closed_form(B: Graph) -> tuple[str, IntPolynomial] | None:
    if B.n == 2 and len(B.edges) == 1:
        return "edge", X1
    if is_cycle(B):
        return f"cycle({B.n})", closed_form_cycle(B.n)
    if is_complete(B):
        return f"complete({B.n})", closed_form_complete(B.n)
    sides = complete_bipartite_sides(B)
    if sides:
        a, b = sides
        return f"complete_bipartite({a},{b})", closed_form_complete_bipartite(a - 1, b - 1)
    return None


def _without_vertex(G: Graph, v: int) -> Graph:
    return G.induced(u for u in G.vertices if u != v)


def _cheap(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return (
        len(two_connected_components(G)) > 1
        or _closed_form(G) is not None
        or G.is_bipartite()
        or dominating_vertex(G) is not None
    )


def hstar_A(G: Graph, trace: list | None = None) -> IntPolynomial:
    """h* of the type A polytope of a connected graph, by formulas where one
    applies and by lattice-point counting otherwise.

    Order tried: block product, closed forms, edge contraction for bipartite
    blocks, cut average when a vertex dominates, then the oracle.  ``trace``
    collects the route taken.
    """
    if not G.is_connected():
        raise DomainError("hstar_A is only defined here for connected graphs")
    if trace is None:
        trace = []
    if G.n == 1:
        trace.append("point")
        return IntPolynomial([1])
    blocks = two_connected_components(G)
    if len(blocks) > 1:
        trace.append(f"blocks({len(blocks)})")
        return block_product(blocks, lambda b: _hstar_block(b, trace))
    return _hstar_block(G, trace)


def _hstar_block(B: Graph, trace: list) -> IntPolynomial:
    cf = _closed_form(B)
    if cf is not None:
        trace.append(cf[0])
        return cf[1]
    if B.is_bipartite():
        contracted = [(e, contract(B, e)) for e in B.edges]
        e, C = next(((e, C) for e, C in contracted if _cheap(C)), contracted[0])
        trace.append(f"contract{e}")
        return X1 * hstar_A(C, trace)
    v = dominating_vertex(B)
    if v is not None:
        trace.append(f"suspension(apex={v})")
        return hstar_A_suspension(_without_vertex(B, v))
    trace.append("oracle")
    return hstar(symmetric_edge_A(B))


# -- one-edge deletion ----------------------------------------------------------------


def delete_edge_polytope(G: Graph, e: Sequence[int]) -> tuple[VPolytope, IntPolynomial]:
    """Drop the vertex ``e_i - e_j`` (``i < j``) from the type A polytope; the
    h* returned is the average of ``G`` and ``G - e``."""
    if not G.is_connected():
        raise DomainError("graph must be connected")
    i, j = min(e), max(e)
    if is_bridge(G, (i, j)):
        raise DomainError(f"({i}, {j}) is a bridge")
    drop = _unit(G.n, i)
    drop = tuple(a - b for a, b in zip(drop, _unit(G.n, j)))
    P = hull([v for v in symmetric_edge_A(G).vertices if v != drop], ambient_dim=G.n)
    avg = (hstar_A(G) + hstar_A(G.delete_edge((i, j)))).to_rational() / 2
    try:
        return P, avg.to_int()
    except NonIntegralError as exc:
        raise VerificationError(f"edge-deletion average is not integral: {avg}") from exc


# -- pseudo-symmetric simplicial reflexive polytopes --------------------------------------


def _parse_component(c) -> tuple[str, int]:
    if isinstance(c, str):
        name, _, arg = c.partition(":")
        if not arg:
            name, _, arg = c.rstrip(")").partition("(")
        return name.strip(), int(arg)
    name, arg = c
    return str(name), int(arg)


def component_hstar(c) -> IntPolynomial:
    name, k = _parse_component(c)
    if name == "cross":
        if k < 1:
            raise DomainError("cross polytope dimension must be positive")
        return X1**k
    if name in ("delpezzo", "del_pezzo"):
        return closed_form_delpezzo(k)
    if name in ("pseudo_delpezzo", "pseudo_del_pezzo"):
        return closed_form_pseudo_delpezzo(k)
    raise DomainError(f"unknown component {name!r}")


def component_polytope(c) -> VPolytope:
    name, k = _parse_component(c)
    if name == "cross":
        return cross_polytope(k)
    if name in ("delpezzo", "del_pezzo"):
        return del_pezzo(k)
    if name in ("pseudo_delpezzo", "pseudo_del_pezzo"):
        return pseudo_del_pezzo(k)
    raise DomainError(f"unknown component {name!r}")


def pseudo_symmetric_hstar(components: Sequence) -> IntPolynomial:
    """h* of the free sum of cross, del Pezzo and pseudo-del Pezzo pieces."""
    if not components:
        raise DomainError("need at least one component")
    out = IntPolynomial([1])
    for c in components:
        out = out * component_hstar(c)
    assert is_gamma_positive(out), "pseudo-symmetric h* should be gamma-positive"
    return out
