import pytest
from hypothesis import given, settings, strategies as st

import hstarlab.graphpoly as gp
import hstarlab.labengine as le
import hstarlab.posetpoly as pp
from hstarlab.errors import DomainError, NotLocallyAntiBlockingError
from hstarlab.lattice import cube, hstar, hull, is_reflexive, sign_vectors, unconditional_closure
from hstarlab.polycore import IntPolynomial

from oracles import oracle_hstar


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return gp.Graph(n, sorted(set(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))))) if pairs else [])


def test_projection_formula_small():
    assert le.hstar_unconditional_via_projections(hull([(0,), (1,)])) == IntPolynomial([1, 1])
    assert le.hstar_unconditional_via_projections(cube(2)) == IntPolynomial([1, 6, 1])
    tri = hull([(0, 0), (1, 0), (0, 1)])
    assert le.hstar_unconditional_via_projections(tri) == IntPolynomial([1, 2, 1])
    with pytest.raises(DomainError):
        le.hstar_unconditional_via_projections(hull([(1, 0), (0, 1), (1, 1)]))


@pytest.mark.parametrize("G", [gp.path_graph(3), gp.cycle_graph(4), gp.empty_graph(3), gp.star_graph(4)], ids=str)
def test_projection_formula_matches_oracle(G):
    Q = pp.stable_set_polytope(G)
    h = le.hstar_unconditional_via_projections(Q)
    assert h == hstar(unconditional_closure(Q))
    if G.n <= 3:
        assert list(h.coeffs) == oracle_hstar(unconditional_closure(Q).vertices)


def test_assignment_validation():
    with pytest.raises(DomainError):
        le.OrthantAssignment(2, {(1, 1): cube(2)})
    with pytest.raises(DomainError):
        le.OrthantAssignment.uniform(hull([(1, 0), (0, 1), (1, 1)]))


def test_uniform_average_is_closure():
    P = pp.stable_set_polytope(gp.path_graph(3))
    A = le.unconditional_assignment(P)
    assert le.hstar_locally_antiblocking(A, check=True) == hstar(unconditional_closure(P))


def test_twinned_assembly():
    P, Q = pp.chain(2), pp.antichain(2)
    A = le.twinned_assignment(P, Q)
    assert le.assemble(A).vertices == pp.twinned_chain_polytope(P, Q).vertices
    assert le.hstar_locally_antiblocking(A, method="both", check=True) == pp.hstar_twinned(P, Q)


def test_suspension_assembly():
    A = le.suspension_assignment(gp.path_graph(2))
    P = le.assemble(A)
    assert len(P.vertices) == 6 and hstar(P) == IntPolynomial([1, 4, 1])
    G = gp.cycle_graph(4)
    h = le.hstar_locally_antiblocking(le.suspension_assignment(G), check=True)
    assert h == IntPolynomial([1, 12, 28, 12, 1]) == gp.hstar_A(gp.suspension(G))
    assert hstar(le.suspension_model(G)) == h


def test_incompatible_pieces_rejected():
    big, small = cube(2), hull([(0, 0), (1, 0), (0, 1)])
    pieces = {e: small for e in sign_vectors(2)}
    pieces[(1, 1)] = big
    A = le.OrthantAssignment(2, pieces)
    assert not le.check_consistency(A)  # the triangle and square agree on both axes
    pieces[(1, 1)] = cube(2, 0, 2)
    A = le.OrthantAssignment(2, pieces)
    assert le.check_consistency(A)
    with pytest.raises(NotLocallyAntiBlockingError):
        le.assemble(A)


def test_gamma_average():
    terms = [IntPolynomial([1, 4, 1]), IntPolynomial([1, 2, 1])]
    assert le.gamma_average_consistent(terms, 2)
    with pytest.raises(DomainError):
        le.gamma_average_consistent([IntPolynomial([1, 2])], 2)


def test_assignment_json():
    A = le.suspension_assignment(gp.path_graph(3))
    B = le.OrthantAssignment.from_json(A.to_json())
    assert B.pieces == A.pieces
    C = le.OrthantAssignment.from_json({"d": 2, "default": {"graph": gp.path_graph(2).to_json()}})
    assert set(C.graphs) == set(sign_vectors(2))


# -- perfect graphs -------------------------------------------------------------------------


def test_perfect_examples():
    assert not le.is_perfect(gp.cycle_graph(5))
    assert le.is_perfect(gp.cycle_graph(6))
    assert not le.is_perfect(gp.cycle_graph(7).complement())
    assert le.has_odd_hole(gp.cycle_graph(7))
    assert le.chromatic_number(gp.cycle_graph(5)) == 3


@settings(max_examples=40)
@given(graphs(7))
def test_perfect_closed_under_complement(G):
    assert le.is_perfect(G) == le.is_perfect(G.complement())


def test_comparability_graphs_perfect():
    for P in pp.all_posets(4):
        assert le.is_perfect(P.comparability_graph())


def test_perfect_cap():
    from hstarlab.errors import ResourceError
    from hstarlab.lattice import limits

    with limits(max_graph_vertices=5):
        with pytest.raises(ResourceError):
            le.is_perfect(gp.cycle_graph(6))


def test_reflexive_via_perfect_matches_facets():
    for n in range(1, 5):
        for G in gp.all_graphs(n):
            Q = unconditional_closure(pp.stable_set_polytope(G))
            assert is_reflexive(Q) == le.is_perfect(G)
    C5 = gp.cycle_graph(5)
    assert not is_reflexive(unconditional_closure(pp.stable_set_polytope(C5)))
    v = le.check_reflexive_via_perfect({e: C5 for e in sign_vectors(5)}, d=5)
    assert not v.reflexive and not v.all_perfect and v.consistent


def test_reflexive_verdict_on_suspension():
    v = le.check_reflexive_via_perfect(le.suspension_assignment(gp.cycle_graph(4)))
    assert v.reflexive and is_reflexive(v.polytope)
