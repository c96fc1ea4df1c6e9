import pytest
from hypothesis import given, settings, strategies as st

import hstarlab.posetpoly as pp
from hstarlab.errors import DomainError
from hstarlab.lattice import count_lattice_points, ehrhart_data, hstar
from hstarlab.polycore import IntPolynomial, RatPolynomial, is_gamma_positive

from oracles import left_enriched_brute, linear_extension_count, oracle_hstar


@st.composite
def posets(draw, max_n=4, natural=False):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    rels = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    P = pp.Poset.from_relations(n, rels)
    if natural:
        return P
    perm = draw(st.permutations(range(1, n + 1)))
    return P.relabel({i: perm[i - 1] for i in range(1, n + 1)})


def test_validation_and_closure():
    with pytest.raises(DomainError):
        pp.Poset((1, 2, 3), frozenset({(1, 2), (2, 3)}))
    with pytest.raises(DomainError):
        pp.Poset.from_relations(2, [(1, 2), (2, 1)])
    P = pp.Poset.from_relations(3, [(1, 2), (2, 3)])
    assert P.lt(1, 3) and P.covers() == [(1, 2), (2, 3)]
    assert pp.Poset.from_json(P.to_json()) == P


@given(posets(5))
def test_linear_extension_count(P):
    assert len(pp.linear_extensions(P)) == linear_extension_count(P.n, P.less)


def test_left_peaks():
    assert pp.left_peaks((1, 2, 3)) == 0
    assert pp.left_peaks((2, 1, 3)) == 1  # 0 < 2 > 1
    assert pp.left_peaks((1, 3, 2)) == 1
    assert pp.left_peak_polynomial(pp.antichain(2)) == IntPolynomial([1, 1])


@given(posets(3, natural=True), st.integers(0, 3))
def test_left_enriched_count_brute(P, m):
    assert pp.left_enriched_order_count(P, m) == left_enriched_brute(P.n, P.less, m)


def test_left_enriched_two_chain():
    # nine maps into {-1,0,1}^2; four violate the conditions
    assert pp.left_enriched_order_count(pp.chain(2), 1) == 5
    assert count_lattice_points(pp.enriched_chain_polytope(pp.chain(2)), 1) == 5


@settings(max_examples=20)
@given(posets(4))
def test_chain_and_order_polytopes_share_ehrhart(P):
    assert ehrhart_data(pp.chain_polytope(P)).counts == ehrhart_data(pp.order_polytope(P)).counts


@pytest.mark.parametrize("P", [pp.chain(3), pp.antichain(3), pp.Poset.from_relations(3, [(1, 3), (2, 3)])], ids=str)
def test_enriched_chain_hstar_oracle(P):
    h = pp.hstar_enriched_chain(P)
    assert list(h.coeffs) == oracle_hstar(pp.enriched_chain_polytope(P).vertices)
    assert is_gamma_positive(h, P.n)


def test_relabel_natural():
    P = pp.Poset.from_relations(3, [(3, 1)])
    R, mp = pp.relabel_natural(P)
    assert R.is_naturally_labeled()
    assert R == P.relabel(mp)
    assert pp.hstar_enriched_chain(P) == pp.hstar_enriched_chain(R)


def test_stable_sets():
    from hstarlab.graphpoly import cycle_graph

    assert len(pp.stable_sets(cycle_graph(4))) == 7
    assert hstar(pp.stable_set_polytope(cycle_graph(4))) == hstar(pp.chain_polytope(pp.Poset.from_relations(4, [(1, 2), (3, 4), (1, 4), (3, 2)])))


def test_twinned_antichain():
    A = pp.antichain(2)
    assert pp.hstar_twinned(A, A) == IntPolynomial([1, 4, 1]) == hstar(pp.twinned_chain_polytope(A, A))
    from fractions import Fraction

    assert pp.f_PQ(A, A) == RatPolynomial([1, Fraction(1, 2)])


def test_twinned_two_chain_cross():
    C = pp.chain(2)
    assert pp.enriched_PQ_count(C, C, 1) == 5 == count_lattice_points(pp.twinned_chain_polytope(C, C), 1)


def test_enriched_pq_definition_counterexample():
    # the literal reading of the sign conditions miscounts here
    P = pp.Poset.from_relations(3, [(1, 3)])
    Q = pp.Poset.from_relations(3, [(2, 3)])
    L = count_lattice_points(pp.twinned_chain_polytope(P, Q), 2)
    assert L == 45
    assert pp.enriched_PQ_count(P, Q, 2) == 45
    assert pp.enriched_PQ_count(P, Q, 2, literal=True) == 46


@settings(max_examples=20)
@given(posets(3), posets(3))
def test_enriched_pq_count_matches_lattice(P, Q):
    if P.elements != Q.elements:
        return
    for m in (1, 2):
        assert pp.enriched_PQ_count(P, Q, m) == count_lattice_points(pp.twinned_chain_polytope(P, Q), m)
    assert pp.satisfies_reciprocity(pp.enriched_PQ_polynomial(P, Q), P.n)


@settings(max_examples=15)
@given(posets(3), posets(3), st.permutations([1, 2, 3]))
def test_twinned_relabel_invariant(P, Q, perm):
    if P.n != 3 or Q.n != 3:
        return
    mp = {i: perm[i - 1] for i in (1, 2, 3)}
    assert pp.hstar_twinned(P, Q) == pp.hstar_twinned(P.relabel(mp), Q.relabel(mp))


def test_reciprocity_rejects():
    assert not pp.satisfies_reciprocity(RatPolynomial([1, 1]), 1)
    assert pp.satisfies_reciprocity(RatPolynomial([1, 2]), 1)  # (2m+1) under m -> -m-1


def test_common_extension():
    assert pp.have_common_linear_extension(pp.chain(2), pp.antichain(2))
    assert not pp.have_common_linear_extension(pp.chain(2), pp.Poset.from_relations(2, [(2, 1)]))


def test_identity_report():
    rep = pp.related_hstar_identities(pp.chain(2), pp.antichain(2))
    assert rep.ok and rep.common_extension
    assert set(rep.to_json()["checks"]) >= {"gamma(O_P,C_Q)", "omega(O_P,C_Q)", "cayley(O_P,C_Q)"}


def test_all_posets_counts():
    assert len(pp.all_posets(3)) == 19
    assert len(pp.all_posets(4, natural=True)) == 40
    assert len(pp.all_posets(4)) == 219


def test_ground_set_mismatch():
    with pytest.raises(DomainError):
        pp.twinned_chain_polytope(pp.chain(2), pp.chain(3))
