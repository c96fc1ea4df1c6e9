"""Slow, independent reference computations used to cross-check the package.

Nothing here imports the hull, counting or polynomial code under test; the
Ehrhart oracle finds facets by brute force over vertex subsets with sympy and
walks the dilated box in plain Python.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb

import sympy


def _affine_frame(points):
    """Coordinates ``J`` that parametrise the affine hull, and a map rebuilding
    a full point from its ``J`` coordinates and a base point of the hull
    (``None`` when the result is not integral)."""
    p0 = points[0]
    n = len(p0)
    D = sympy.Matrix([[a - b for a, b in zip(p, p0)] for p in points[1:]] or [[0] * n])
    R = D.rref()[0]
    r = D.rank()
    B = R[:r, :]
    J = []
    for k in range(n):
        if B[:, J + [k]].rank() > len(J):
            J.append(k)
        if len(J) == r:
            break
    inv = B[:, J].inv() if r else None

    def lift(zJ, base):
        if not r:
            return tuple(base)
        t = inv.T * sympy.Matrix([zJ[i] - base[J[i]] for i in range(r)])
        full = [base[k] + (t.T * B[:, k])[0] for k in range(n)]
        if any(not sympy.sympify(v).is_integer for v in full):
            return None
        return tuple(int(v) for v in full)

    return J, lift, r


def _facets_full(pts):
    """Facets ``a.x <= b`` of a full-dimensional point set in ``R^r``, by trying
    every ``r``-subset as a supporting hyperplane."""
    r = len(pts[0])
    if r == 1:
        xs = [p[0] for p in pts]
        return [((1,), max(xs)), ((-1,), -min(xs))]
    out = set()
    for S in combinations(range(len(pts)), r):
        q0 = pts[S[0]]
        M = sympy.Matrix([[a - b for a, b in zip(pts[k], q0)] for k in S[1:]])
        ns = M.nullspace()
        if len(ns) != 1:
            continue
        a = ns[0]
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in a])
        a = [int(x * den) for x in a]
        g = 0
        for x in a:
            g = sympy.igcd(g, x)
        a = [x // g for x in a]
        vals = [sum(x * y for x, y in zip(a, p)) for p in pts]
        if max(vals) == min(vals):
            continue
        b0 = sum(x * y for x, y in zip(a, q0))
        if b0 == max(vals):
            out.add((tuple(a), b0))
        elif b0 == min(vals):
            out.add((tuple(-x for x in a), -b0))
    return sorted(out)


class Oracle:
    """Brute-force lattice point counts of one lattice polytope (given by any
    finite point set, not necessarily just vertices)."""

    def __init__(self, points):
        self.points = [tuple(int(x) for x in p) for p in points]
        self.J, self._lift, self.dim = _affine_frame(self.points)
        proj = [tuple(p[j] for j in self.J) for p in self.points]
        self.facets = _facets_full(proj) if self.dim else []
        self.lo = [min(p[j] for p in self.points) for j in self.J]
        self.hi = [max(p[j] for p in self.points) for j in self.J]

    def points_in(self, m):
        base = tuple(m * x for x in self.points[0])
        if self.dim == 0:
            return [base]
        out = []
        ranges = [range(m * a, m * b + 1) for a, b in zip(self.lo, self.hi)]
        for zJ in product(*ranges):
            if all(sum(x * y for x, y in zip(a, zJ)) <= m * b for a, b in self.facets):
                full = self._lift(zJ, base)
                if full is not None:
                    out.append(full)
        return out

    def count(self, m):
        return len(self.points_in(m))

    def hstar(self):
        d = self.dim
        L = [1] + [self.count(m) for m in range(1, d + 1)]
        # (1-x)^{d+1} * sum L(m) x^m, truncated at degree d
        return [sum((-1) ** j * comb(d + 1, j) * L[i - j] for j in range(i + 1)) for i in range(d + 1)]


def oracle_hstar(points):
    return Oracle(points).hstar()


# -- combinatorics ------------------------------------------------------------------


def tutte_at_y1(n, edges):
    """``T_G(x, 1)`` by deletion-contraction, as a coefficient list."""
    edges = [tuple(e) for e in edges]

    def connected_parts(nv, es):
        parent = list(range(nv + 1))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for a, b in es:
            parent[find(a)] = find(b)
        return len({find(v) for v in range(1, nv + 1)})

    def rec(nv, es):
        if not es:
            return [1]
        (a, b), rest = es[0], es[1:]
        if a == b:
            return rec(nv, rest)  # loop contributes y = 1
        if connected_parts(nv, rest) > connected_parts(nv, es):
            # bridge: x * T(G/e)
            return [0] + rec(nv, _contract(rest, a, b))
        left = rec(nv, rest)
        right = rec(nv, _contract(rest, a, b))
        k = max(len(left), len(right))
        return [(left[i] if i < len(left) else 0) + (right[i] if i < len(right) else 0) for i in range(k)]

    return rec(n, edges)


def _contract(es, a, b):
    return [(a if u == b else u, a if v == b else v) for u, v in es]


def hypertrees_polymatroid(vertices, hyperedges):
    """Hypertrees via the rank condition: ``sum f = |V| - 1`` and for every
    nonempty set ``S`` of hyperedges, ``sum_{S} f <= |union S| - 1``."""
    k = len(hyperedges)
    out = set()
    for f in product(*[range(len(h)) for h in hyperedges]):
        if sum(f) != vertices - 1:
            continue
        ok = True
        for size in range(1, k + 1):
            for S in combinations(range(k), size):
                if sum(f[s] for s in S) > len(set().union(*[hyperedges[s] for s in S])) - 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(f)
    return out


def linear_extension_count(n, less):
    less = set(less)
    return sum(
        all(perm.index(a) < perm.index(b) for a, b in less) for perm in permutations(range(1, n + 1))
    )


def left_enriched_brute(n, less, m):
    """Every map into ``[-m, m]`` checked against the left enriched conditions."""
    total = 0
    for f in product(range(-m, m + 1), repeat=n):
        good = True
        for a, b in less:
            fa, fb = f[a - 1], f[b - 1]
            if abs(fa) > abs(fb) or (abs(fa) == abs(fb) and fb < 0):
                good = False
                break
        total += good
    return total


def gamma_vector_oracle(h, d):
    """Peel ``g x^i (1+x)^{d-2i}`` off from the low end with Fractions."""
    h = [Fraction(c) for c in h] + [Fraction(0)] * (d + 1 - len(h))
    out = []
    for i in range(d // 2 + 1):
        g = h[i]
        out.append(g)
        for k in range(d - 2 * i + 1):
            h[i + k] -= g * comb(d - 2 * i, k)
    if any(h):
        return None
    return out
