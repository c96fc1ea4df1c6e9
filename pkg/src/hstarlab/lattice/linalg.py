"""Exact integer linear algebra on small dense matrices (lists of int lists)."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from functools import reduce

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def primitive(v) -> tuple[int, ...]:
    g = reduce(gcd, v, 0)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def column_reduce(rows: Matrix, ncols: int) -> tuple[Matrix, Matrix, Matrix, int]:
    """Unimodular column reduction ``A = M U`` to lower echelon form.

    Returns ``(A, U, U_inv, rank)``.  Columns ``rank..ncols-1`` of ``A`` are zero,
    so the matching columns of ``U`` are a basis of the integer kernel of ``M``.
    """
    A = [list(r) for r in rows]
    U = identity(ncols)
    Uinv = identity(ncols)
    piv = 0
    for r in range(len(A)):
        if piv >= ncols:
            break
        row = A[r]
        for j in range(piv + 1, ncols):
            b = row[j]
            if b == 0:
                continue
            a = row[piv]
            g, s, t = xgcd(a, b)
            p, q = a // g, b // g
            for M in A:
                mp, mj = M[piv], M[j]
                M[piv], M[j] = s * mp + t * mj, p * mj - q * mp
            for M in U:
                mp, mj = M[piv], M[j]
                M[piv], M[j] = s * mp + t * mj, p * mj - q * mp
            rp, rj = Uinv[piv], Uinv[j]
            Uinv[piv] = [p * x + q * y for x, y in zip(rp, rj)]
            Uinv[j] = [s * y - t * x for x, y in zip(rp, rj)]
        if row[piv] != 0:
            piv += 1
    return A, U, Uinv, piv


def integer_kernel(rows: Matrix, ncols: int) -> Matrix:
    """Basis (as a list of column vectors) of ``{v in Z^ncols : M v = 0}``."""
    _, U, _, rank = column_reduce(rows, ncols)
    return [[U[i][j] for i in range(ncols)] for j in range(rank, ncols)]


def det(M: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(M: Matrix) -> int:
    if not M:
        return 0
    return column_reduce(M, len(M[0]))[3]


def solve_rational(M: Matrix, rhs: list) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(M, rhs)]
    for c in range(n):
        p = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [A[i][n] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def unimodular_inverse(M: Matrix) -> Matrix:
    n = len(M)
    cols = [solve_rational(M, [int(i == j) for i in range(n)]) for j in range(n)]
    out = [[cols[j][i] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def find_unimodular_coordinates(basis_cols: Matrix, d: int) -> tuple[int, ...] | None:
    """A coordinate subset ``J`` on which the lattice basis restricts to a
    unimodular square matrix, i.e. projection onto ``J`` is a lattice isomorphism."""
    r = len(basis_cols)
    for J in combinations(range(d), r):
        sub = [[basis_cols[c][j] for c in range(r)] for j in J]
        if abs(det(sub)) == 1:
            return J
    return None
