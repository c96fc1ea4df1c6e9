from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from hstarlab.errors import InvalidDegreeError, UnsupportedInputError
from hstarlab.polycore import (
    IntPolynomial,
    RatPolynomial,
    binomial_power,
    gamma_decompose,
    gamma_expand,
    has_internal_zeros,
    interpolate,
    is_gamma_positive,
    is_log_concave,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    polynomial_gcd,
    real_root_count,
    squarefree_decomposition,
)

from oracles import gamma_vector_oracle

small = st.integers(-50, 50)
ints = st.lists(small, max_size=7).map(IntPolynomial)


def value(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


@given(ints, ints, ints)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == IntPolynomial()
    assert f * IntPolynomial([1]) == f


@given(ints, ints, st.integers(-6, 6))
def test_evaluation_is_a_homomorphism(f, g, x):
    assert (f * g)(x) == f(x) * g(x)
    assert (f + g)(x) == value(f.coeffs, x) + value(g.coeffs, x)


def test_trailing_zeros_dropped():
    f = IntPolynomial([1, 2, 0, 0])
    assert f.degree == 1 and f == IntPolynomial([1, 2])
    assert IntPolynomial().degree == -1


def test_int_poly_rejects_fractions():
    with pytest.raises(Exception):
        IntPolynomial([Fraction(1, 2)])


def test_json_round_trip():
    f = IntPolynomial([3, 0, -4, 1])
    assert IntPolynomial.from_json(f.to_json()) == f
    r = RatPolynomial([Fraction(1, 3), 2])
    assert RatPolynomial.from_json(r.to_json()) == r


@given(st.integers(0, 12))
def test_binomial_power(k):
    assert binomial_power(k) == IntPolynomial([1, 1]) ** k


@given(st.lists(st.integers(0, 30), min_size=1, max_size=5), st.integers(0, 4))
def test_gamma_round_trip(g, extra):
    g = IntPolynomial(g)
    d = 2 * max(g.degree, 0) + extra
    f = gamma_expand(g, d)
    assert is_palindromic(f, d)
    assert IntPolynomial(gamma_decompose(f, d)) == IntPolynomial([c * 4**i for i, c in enumerate(g.coeffs)])
    assert is_gamma_positive(f, d)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5), st.integers(0, 3))
def test_gamma_decompose_matches_oracle(g, extra):
    d = 2 * (len(g) - 1) + extra
    f = IntPolynomial([0] * (d + 1))
    for i, c in enumerate(g):
        f = f + IntPolynomial([0] * i + [c]) * binomial_power(d - 2 * i)
    if not f:
        return
    expected = [int(v) for v in gamma_vector_oracle(f.coeffs, d)]
    got = gamma_decompose(f, d)
    assert got + [0] * (len(expected) - len(got)) == expected


def test_gamma_examples():
    assert gamma_decompose(IntPolynomial([1, 4, 1]), 2) == [1, 2]
    assert is_gamma_positive(IntPolynomial([1, 6, 16, 6, 1]))
    assert not is_gamma_positive(IntPolynomial([1, 1, 1]))  # gamma = (1, -1)
    with pytest.raises(UnsupportedInputError):
        gamma_decompose(IntPolynomial([1, 2]), 1)
    with pytest.raises(InvalidDegreeError):
        gamma_expand(IntPolynomial([1, 1, 1]), 3)


def test_gamma_expand_rational():
    out = gamma_expand(RatPolynomial([1, Fraction(1, 2)]), 2)
    assert out == RatPolynomial([1, 4, 1])


def test_palindromic_degree_padding():
    assert is_palindromic(IntPolynomial([0, 1]), 2)
    assert not is_palindromic(IntPolynomial([1, 1]), 2)
    with pytest.raises(InvalidDegreeError):
        is_palindromic(IntPolynomial([1, 1, 1]), 1)


def test_unimodal_and_log_concave():
    assert is_unimodal(IntPolynomial([1, 3, 3, 1]))
    assert not is_unimodal(IntPolynomial([1, 0, 1]))
    assert is_log_concave(IntPolynomial([1, 0, 0, 1]))
    assert has_internal_zeros(IntPolynomial([1, 0, 0, 1]))
    assert not has_internal_zeros(IntPolynomial([0, 0, 2, 1]))
    with pytest.raises(UnsupportedInputError):
        is_log_concave(IntPolynomial([1, -1]))


roots = st.lists(st.integers(-6, 6), min_size=1, max_size=6)


@given(roots, st.integers(0, 2))
def test_sturm_counts_known_roots(rs, pairs):
    f = IntPolynomial([1])
    for r in rs:
        f = f * IntPolynomial([-r, 1])
    for k in range(pairs):
        f = f * IntPolynomial([k + 1, 0, 1])  # x^2 + k + 1 has no real root
    assert real_root_count(f) == len(rs)
    assert is_real_rooted(f) == (pairs == 0)


@given(roots)
def test_squarefree_decomposition_matches_multiplicities(rs):
    f = IntPolynomial([1])
    for r in rs:
        f = f * IntPolynomial([-r, 1])
    mult = {}
    for r in rs:
        mult[r] = mult.get(r, 0) + 1
    parts = squarefree_decomposition(f)
    got = {}
    for a, k in parts:
        for r in set(rs):
            if a(r) == 0:
                got[r] = k
    assert got == mult


@given(roots)
def test_rr_implies_lc_implies_un(rs):
    f = IntPolynomial([1])
    for r in rs:
        f = f * IntPolynomial([abs(r), 1])  # roots <= 0, coefficients >= 0
    assert is_real_rooted(f)
    assert is_log_concave(f)
    assert not has_internal_zeros(f) and is_unimodal(f)


def test_gcd():
    f = IntPolynomial([-1, 0, 1])
    g = IntPolynomial([1, 2, 1])
    assert polynomial_gcd(f, g) == RatPolynomial([1, 1])


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=6))
def test_interpolation_round_trip(cs):
    f = IntPolynomial(cs)
    pts = [(x, f(x)) for x in range(len(cs))]
    assert interpolate(pts) == f.to_rational()


def test_rational_division():
    r = IntPolynomial([2, 4]).to_rational() / 4
    assert r == RatPolynomial([Fraction(1, 2), 1]) and not r.is_integral()
    assert (r * 2).to_int() == IntPolynomial([1, 2])


def test_binomial_values():
    assert list(binomial_power(5).coeffs) == [comb(5, i) for i in range(6)]
