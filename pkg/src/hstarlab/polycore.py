"""Exact dense univariate polynomials and the coefficient-property checkers.

Coefficients are stored lowest degree first with trailing zeros trimmed, so the
zero polynomial has an empty coefficient tuple and degree -1.  Everything is
exact: :class:`IntPolynomial` carries Python ints, :class:`RatPolynomial`
carries :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Integral, Rational
from typing import Iterable, Sequence

from hstarlab.errors import (
    InvalidDegreeError,
    NonIntegralError,
    UnsupportedInputError,
)

__all__ = [
    "IntPolynomial",
    "RatPolynomial",
    "poly_mul",
    "binomial_power",
    "is_palindromic",
    "is_unimodal",
    "is_log_concave",
    "gamma_decompose",
    "gamma_expand",
    "is_gamma_positive",
    "polynomial_gcd",
    "squarefree_decomposition",
    "sturm_sequence",
    "real_root_count",
    "is_real_rooted",
    "interpolate",
]


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class _DensePolynomial:
    __slots__ = ("coeffs",)

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([self._coerce(a) for a in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @staticmethod
    def _coerce(a):
        raise NotImplementedError

    # -- container protocol -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int):
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _DensePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (Integral, Rational)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and a == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{a}*{mono}")
            else:
                terms.append(str(a))
        return " + ".join(terms)

    # -- arithmetic ----------------------------------------------------------
    def _result_type(self, other):
        if isinstance(self, RatPolynomial) or isinstance(other, RatPolynomial):
            return RatPolynomial
        if isinstance(other, Rational) and not isinstance(other, Integral):
            return RatPolynomial
        return IntPolynomial

    def _lift(self, other):
        if isinstance(other, _DensePolynomial):
            return other.coeffs
        if isinstance(other, Rational):
            return (other,)
        return None

    def __add__(self, other):
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        n = max(len(self.coeffs), len(oc))
        a, b = self.coeffs, oc
        out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        return self._result_type(other)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-a for a in self.coeffs)

    def __sub__(self, other):
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        return self + (-type(self)._from_any(other))

    def __rsub__(self, other):
        return (-self) + other

    @staticmethod
    def _from_any(other):
        if isinstance(other, _DensePolynomial):
            return other
        if isinstance(other, Integral):
            return IntPolynomial([other])
        return RatPolynomial([other])

    def __mul__(self, other):
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if not a or not b:
            return self._result_type(other)()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return self._result_type(other)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = type(self)([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def shift(self, k: int):
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return type(self)((0,) * k + self.coeffs)

    def derivative(self):
        return type(self)(i * a for i, a in enumerate(self.coeffs) if i)

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def to_json(self) -> list:
        return [a if isinstance(a, int) else str(a) for a in self.coeffs]


class IntPolynomial(_DensePolynomial):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(a):
        if isinstance(a, bool):
            return int(a)
        if isinstance(a, Integral):
            return int(a)
        if isinstance(a, Rational) and a.denominator == 1:
            return int(a.numerator)
        raise TypeError(f"non-integer coefficient {a!r}")

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "IntPolynomial":
        return cls(int(a) for a in data)

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(self.coeffs)


class RatPolynomial(_DensePolynomial):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(a):
        if isinstance(a, (Integral, Rational)):
            return Fraction(a)
        if isinstance(a, str):
            return Fraction(a)
        raise TypeError(f"non-rational coefficient {a!r}")

    @classmethod
    def from_json(cls, data) -> "RatPolynomial":
        return cls(Fraction(a) for a in data)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def to_int(self) -> IntPolynomial:
        if not self.is_integral():
            raise NonIntegralError(f"polynomial {self} has non-integer coefficients")
        return IntPolynomial(a.numerator for a in self.coeffs)

    def monic(self) -> "RatPolynomial":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return RatPolynomial(a / lead for a in self.coeffs)

    def __truediv__(self, c):
        if isinstance(c, _DensePolynomial):
            q, r = self.divmod(c)
            if r:
                raise ArithmeticError("inexact polynomial division")
            return q
        return RatPolynomial(a / c for a in self.coeffs)

    def divmod(self, other: _DensePolynomial) -> tuple["RatPolynomial", "RatPolynomial"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(a) for a in self.coeffs]
        div = [Fraction(a) for a in other.coeffs]
        lead = div[-1]
        out = [Fraction(0)] * max(len(rem) - len(div) + 1, 0)
        for k in range(len(rem) - len(div), -1, -1):
            c = rem[k + len(div) - 1] / lead
            out[k] = c
            if c:
                for j, dj in enumerate(div):
                    rem[k + j] -= c * dj
        return RatPolynomial(out), RatPolynomial(rem[: len(div) - 1])


def _as_rat(f: _DensePolynomial) -> RatPolynomial:
    return f if isinstance(f, RatPolynomial) else RatPolynomial(f.coeffs)


def poly_mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f * g


def binomial_power(k: int) -> IntPolynomial:
    """(1 + x)**k, built directly from binomial coefficients."""
    return IntPolynomial(comb(k, i) for i in range(k + 1))


# -- coefficient properties ---------------------------------------------------


def is_palindromic(f: _DensePolynomial, d: int) -> bool:
    """True iff ``f(x) == x**d * f(1/x)``, reading missing coefficients as 0."""
    if d < f.degree:
        raise InvalidDegreeError(f"d={d} is smaller than deg f={f.degree}")
    return all(f[i] == f[d - i] for i in range(d + 1))


def is_unimodal(f: _DensePolynomial) -> bool:
    c = f.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def has_internal_zeros(f: _DensePolynomial) -> bool:
    """A zero coefficient strictly between two nonzero ones."""
    nz = [i for i, a in enumerate(f.coeffs) if a]
    return any(not f.coeffs[i] for i in range(nz[0], nz[-1] + 1)) if nz else False


def is_log_concave(f: _DensePolynomial) -> bool:
    """``a_i**2 >= a_{i-1} a_{i+1}`` for every interior index.

    Only defined here for nonnegative coefficients.  Internal zeros are not
    excluded, so e.g. ``1 + x**3`` is log-concave but not unimodal.
    """
    c = f.coeffs
    if any(a < 0 for a in c):
        raise UnsupportedInputError("log-concavity is only checked for nonnegative coefficients")
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def gamma_decompose(f: _DensePolynomial, d: int) -> list:
    """Coefficients ``g_i`` with ``f = sum g_i x**i (1 + x)**(d - 2i)``.

    The system is unitriangular, so the vector is peeled off from the low end:
    the lowest surviving coefficient is the next ``g_i``.  Entries are ints for
    integer input and Fractions for rational input.
    """
    if not is_palindromic(f, d):
        raise UnsupportedInputError(f"{f} is not palindromic of degree {d}")
    rest = [f[i] for i in range(d + 1)]
    gammas = []
    for i in range(d // 2 + 1):
        g = rest[i]
        gammas.append(g)
        if g:
            for j in range(d - 2 * i + 1):
                rest[i + j] -= g * comb(d - 2 * i, j)
    if any(rest):
        raise AssertionError("gamma decomposition left a remainder")  # unreachable for palindromic f
    return gammas


def gamma_expand(g: _DensePolynomial, d: int) -> _DensePolynomial:
    """``(x + 1)**d * g(4x / (x + 1)**2)`` as a polynomial.

    Term ``g_i`` contributes ``g_i 4**i x**i (x + 1)**(d - 2i)``; the result has
    the same coefficient type as ``g``.
    """
    if 2 * g.degree > d:
        raise InvalidDegreeError(f"2*deg g = {2 * g.degree} exceeds d = {d}")
    out = [0] * (d + 1)
    for i, gi in enumerate(g.coeffs):
        if not gi:
            continue
        w = gi * 4**i
        for j in range(d - 2 * i + 1):
            out[i + j] += w * comb(d - 2 * i, j)
    return type(g)(out)


def is_gamma_positive(f: _DensePolynomial, d: int | None = None) -> bool:
    d = f.degree if d is None else d
    if d < 0:
        return False
    if not is_palindromic(f, d):
        return False
    return all(g >= 0 for g in gamma_decompose(f, d))


# -- real roots ---------------------------------------------------------------


def polynomial_gcd(f: _DensePolynomial, g: _DensePolynomial) -> RatPolynomial:
    """Monic gcd over the rationals (zero if both are zero)."""
    a, b = _as_rat(f), _as_rat(g)
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_decomposition(f: _DensePolynomial) -> list[tuple[RatPolynomial, int]]:
    """Yun's algorithm: pairs ``(a_k, k)`` with ``f = c * prod a_k**k``, each ``a_k``
    monic, squarefree, nonconstant and pairwise coprime."""
    f = _as_rat(f)
    if f.degree <= 0:
        return []
    out = []
    fp = f.derivative()
    a0 = polynomial_gcd(f, fp)
    b = f / a0
    c = fp / a0
    dd = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = polynomial_gcd(b, dd)
        b = b / a
        c = dd / a
        if a.degree > 0:
            out.append((a, k))
        k += 1
        dd = c - b.derivative()
    return out


def sturm_sequence(f: _DensePolynomial) -> list[RatPolynomial]:
    seq = [_as_rat(f), _as_rat(f).derivative()]
    while seq[-1]:
        r = seq[-2].divmod(seq[-1])[1]
        seq.append(-r)
    seq.pop()
    return seq


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _distinct_real_roots(f: RatPolynomial) -> int:
    seq = sturm_sequence(f)
    at_neg_inf = [p.leading * (-1) ** p.degree for p in seq]
    at_pos_inf = [p.leading for p in seq]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)


def real_root_count(f: _DensePolynomial) -> int:
    """Number of real roots of ``f`` counted with multiplicity."""
    if not f:
        raise UnsupportedInputError("the zero polynomial has no finite root count")
    return sum(k * _distinct_real_roots(a) for a, k in squarefree_decomposition(f))


def is_real_rooted(f: _DensePolynomial) -> bool:
    return real_root_count(f) == f.degree


def interpolate(points: Sequence[tuple]) -> RatPolynomial:
    """Lagrange interpolation through ``(x_k, y_k)`` pairs, exactly."""
    result = RatPolynomial()
    xs = [Fraction(x) for x, _ in points]
    for k, (_, yk) in enumerate(points):
        if yk == 0:
            continue
        basis = RatPolynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != k:
                basis = basis * RatPolynomial([-xj, 1])
                denom *= xs[k] - xj
        result = result + basis * (Fraction(yk) / denom)
    return result
