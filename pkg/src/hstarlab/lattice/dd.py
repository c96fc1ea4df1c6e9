"""Exact double description: facets of the convex hull of full-dimensional points.

The hull of ``y_1..y_N`` in ``R^n`` is the section of the cone generated by
``(1, y_k)``; its facets are the extreme rays of the dual cone
``{a : a . (1, y_k) >= 0}``, which are found by inserting the constraints one at
a time.  All arithmetic is on Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from hstarlab.lattice.linalg import primitive, solve_rational


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _independent_rows(gens: list[tuple[int, ...]], D: int) -> list[int]:
    """Greedy choice of ``D`` linearly independent generator indices."""
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    chosen = []
    for idx, g in enumerate(gens):
        v = [Fraction(x) for x in g]
        for b, p in zip(basis, pivots):
            if v[p]:
                f = v[p] / b[p]
                v = [x - f * y for x, y in zip(v, b)]
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            continue
        basis.append(v)
        pivots.append(p)
        chosen.append(idx)
        if len(chosen) == D:
            return chosen
    raise ValueError("points are not full-dimensional")


def dual_cone_rays(gens: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of ``{a : g . a >= 0 for g in gens}`` with their zero sets.

    ``gens`` must span ``R^D``.  Each ray is returned as ``(a, mask)`` where bit
    ``k`` of ``mask`` is set iff ``gens[k] . a == 0``.
    """
    D = len(gens[0])
    init = _independent_rows(gens, D)
    G0 = [gens[i] for i in init]
    rays: list[tuple[tuple[int, ...], int]] = []
    for k in range(D):
        sol = solve_rational(G0, [int(i == k) for i in range(D)])
        m = lcm(*(x.denominator for x in sol))
        a = primitive([int(x * m) for x in sol])
        mask = 0
        for j, i in enumerate(init):
            if j != k:
                mask |= 1 << i
        rays.append((a, mask))

    done = set(init)
    for i, g in enumerate(gens):
        if i in done:
            continue
        bit = 1 << i
        pos, zer, neg = [], [], []
        for a, mask in rays:
            v = _dot(g, a)
            if v > 0:
                pos.append((a, mask, v))
            elif v < 0:
                neg.append((a, mask, v))
            else:
                zer.append((a, mask | bit))
        if not neg:
            rays = [(a, m) for a, m, _ in pos] + zer
            continue
        masks = [m for _, m in rays]
        new = []
        need = D - 2
        for ap, mp, vp in pos:
            for aq, mq, vq in neg:
                common = mp & mq
                if common.bit_count() < need:
                    continue
                hits = 0
                for m in masks:
                    if m & common == common:
                        hits += 1
                        if hits > 2:
                            break
                if hits > 2:
                    continue
                r = primitive([vp * y - vq * x for x, y in zip(ap, aq)])
                new.append((r, common | bit))
        rays = [(a, m) for a, m, _ in pos] + zer + new
    return rays


def hull_facets(points: list[tuple[int, ...]]) -> tuple[list[tuple[tuple[int, ...], int]], list[int]]:
    """Facets and vertices of the hull of distinct full-dimensional points.

    Returns ``(facets, vertex_indices)``; each facet is ``((a0, a1..an), mask)``
    meaning ``a0 + a . y >= 0`` with ``mask`` the set of points on it.
    """
    gens = [(1,) + tuple(p) for p in points]
    facets = dual_cone_rays(gens)
    incidence = [0] * len(points)
    for f, (_, mask) in enumerate(facets):
        m = mask
        while m:
            low = m & -m
            incidence[low.bit_length() - 1] |= 1 << f
            m ^= low
    vertices = []
    for i, inc in enumerate(incidence):
        if not any(j != i and inc & other == inc for j, other in enumerate(incidence)):
            vertices.append(i)
    return facets, vertices
