"""Lattice polytopes in V- and H-representation, and the Ehrhart oracle.

Every polytope is handled in intrinsic lattice coordinates: the lattice points
of its affine hull are parametrised as ``base + B y`` with ``y`` in ``Z^n``, so
lower-dimensional polytopes (such as symmetric edge polytopes, which live in
``sum(x) = 0``) get their intrinsic Ehrhart data.  Where possible ``B`` is
chosen so that ``y`` is a plain coordinate projection, which keeps the
bounding box used for counting tight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm, prod
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from hstarlab.errors import DomainError, ResourceError
from hstarlab.lattice import linalg
from hstarlab.lattice.config import LIMITS
from hstarlab.lattice.dd import hull_facets
from hstarlab.polycore import IntPolynomial, RatPolynomial, interpolate

Point = tuple[int, ...]


@dataclass(frozen=True)
class VPolytope:
    """A lattice polytope given by its vertices, sorted lexicographically.

    Build instances with :func:`hull`; the constructor trusts that every listed
    point is a vertex and only canonicalises the order.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(sorted({tuple(int(x) for x in v) for v in self.vertices}))
        if not verts:
            raise DomainError("a polytope needs at least one vertex")
        if any(len(v) != self.ambient_dim for v in verts):
            raise DomainError("vertex length does not match ambient dimension")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return _geometry(self.vertices).dim

    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def to_json(self) -> dict:
        return {"dim": self.ambient_dim, "vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "VPolytope":
        return hull([tuple(v) for v in data["vertices"]], ambient_dim=data["dim"])

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class HPolytope:
    """``{x : a.x <= b for (a, b) in rows, c.x == c0 for (c, c0) in equalities}``.

    Each ``a`` is a primitive integer vector.  For lower-dimensional polytopes
    the inequality normals are only determined modulo the equalities.
    """

    ambient_dim: int
    rows: tuple[tuple[Point, Fraction], ...]
    equalities: tuple[tuple[Point, int], ...] = ()

    def to_json(self) -> dict:
        return {
            "dim": self.ambient_dim,
            "inequalities": [[list(a), str(b)] for a, b in self.rows],
            "equalities": [[list(c), c0] for c, c0 in self.equalities],
        }


@dataclass(frozen=True)
class EhrhartData:
    dim: int
    counts: tuple[int, ...]
    hstar: IntPolynomial
    ehrhart: RatPolynomial

    def to_json(self) -> dict:
        den = lcm(*(Fraction(c).denominator for c in self.ehrhart.coeffs)) if self.ehrhart else 1
        return {
            "dim": self.dim,
            "counts": list(self.counts),
            "hstar": list(self.hstar.coeffs),
            "ehrhart_num": [int(c * den) for c in self.ehrhart.coeffs],
            "ehrhart_den": den,
        }

    @classmethod
    def from_json(cls, data: dict) -> "EhrhartData":
        den = data["ehrhart_den"]
        return cls(
            dim=data["dim"],
            counts=tuple(data["counts"]),
            hstar=IntPolynomial(data["hstar"]),
            ehrhart=RatPolynomial(Fraction(c, den) for c in data["ehrhart_num"]),
        )


class _Geometry:
    """Intrinsic coordinates and facets of one vertex set (cached per polytope)."""

    __slots__ = ("ambient", "dim", "base", "basis", "to_local", "equalities", "local_vertices", "facets")

    def __init__(self, points: Sequence[Point], ambient: int):
        self.ambient = ambient
        v0 = points[0]
        diffs = [[a - b for a, b in zip(p, v0)] for p in points[1:]]
        normals = linalg.integer_kernel(diffs, ambient) if diffs else linalg.identity(ambient)
        self.dim = ambient - len(normals)
        self.equalities = tuple(
            (tuple(c), sum(x * y for x, y in zip(c, v0))) for c in normals
        )
        origin_in_hull = all(c0 == 0 for _, c0 in self.equalities)
        self.base = tuple([0] * ambient) if origin_in_hull else tuple(v0)
        if self.dim == ambient:
            self.basis = linalg.identity(ambient)
            self.to_local = linalg.identity(ambient)
        else:
            _, U, Uinv, r = linalg.column_reduce(normals, ambient)
            cols = [[U[i][j] for i in range(ambient)] for j in range(r, ambient)]
            J = linalg.find_unimodular_coordinates(cols, ambient)
            if J is not None:
                sub = [[cols[c][j] for c in range(self.dim)] for j in J]
                inv = linalg.unimodular_inverse(sub)
                B = linalg.matmul([[cols[c][i] for c in range(self.dim)] for i in range(ambient)], inv)
                self.basis = B
                self.to_local = [[int(i == j) for i in range(ambient)] for j in J]
            else:
                self.basis = [[cols[c][i] for c in range(self.dim)] for i in range(ambient)]
                self.to_local = [row[:] for row in Uinv[r:]]
        self.local_vertices = [self.local(p) for p in points]
        self.facets: list[tuple[Point, int]] = []

    def local(self, x: Sequence) -> tuple:
        return tuple(
            sum(t * (a - b) for t, a, b in zip(row, x, self.base)) for row in self.to_local
        )

    def compute_facets(self) -> list[int]:
        """Fill :attr:`facets` as ``(a, b)`` meaning ``a . y <= b``; return vertex indices."""
        if self.dim == 0:
            self.facets = []
            return [0]
        rays, vidx = hull_facets(self.local_vertices)
        facets = []
        for (ray, _) in rays:
            a0, a = ray[0], ray[1:]
            g = reduce(gcd, a, 0)
            facets.append((tuple(-x // g for x in a), a0 // g))
        self.facets = sorted(set(facets))
        return vidx


_GEOMETRY_CACHE: dict[tuple[Point, ...], _Geometry] = {}


def _geometry(vertices: tuple[Point, ...]) -> _Geometry:
    geo = _GEOMETRY_CACHE.get(vertices)
    if geo is None:
        _check_dim(len(vertices[0]))
        geo = _Geometry(vertices, len(vertices[0]))
        geo.compute_facets()
        _GEOMETRY_CACHE[vertices] = geo
    return geo


def _check_dim(d: int) -> None:
    if d > LIMITS.max_dim:
        raise ResourceError(f"ambient dimension {d} exceeds cap {LIMITS.max_dim}")


def hull(points: Iterable[Sequence[int]], ambient_dim: int | None = None) -> VPolytope:
    """Convex hull of integer points; non-vertices are pruned."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise DomainError("hull of an empty point set")
    d = len(pts[0]) if ambient_dim is None else ambient_dim
    if any(len(p) != d for p in pts):
        raise DomainError("points have mismatched dimensions")
    if d == 0:
        return VPolytope(0, ((),))
    _check_dim(d)
    geo = _Geometry(pts, d)
    vidx = geo.compute_facets()
    verts = tuple(pts[i] for i in vidx)
    if verts not in _GEOMETRY_CACHE:
        geo.local_vertices = [geo.local(v) for v in verts]
        _GEOMETRY_CACHE[verts] = geo
    return VPolytope(d, verts)


def vrep_to_hrep(P: VPolytope) -> HPolytope:
    _check_dim(P.ambient_dim)
    if P.ambient_dim == 0:
        return HPolytope(0, ())
    geo = _geometry(P.vertices)
    rows = []
    T = geo.to_local
    for a, b in geo.facets:
        w = [sum(a[k] * T[k][i] for k in range(geo.dim)) for i in range(P.ambient_dim)]
        rhs = b + sum(x * y for x, y in zip(w, geo.base))
        g = reduce(gcd, w, 0)
        rows.append((tuple(x // g for x in w), Fraction(rhs, g)))
    return HPolytope(P.ambient_dim, tuple(sorted(rows)), geo.equalities)


def membership(H: HPolytope, z: Sequence) -> bool:
    if len(z) != H.ambient_dim:
        raise DomainError("point dimension does not match polytope")
    zz = [Fraction(x) for x in z]
    return all(sum(c * x for c, x in zip(cv, zz)) == c0 for cv, c0 in H.equalities) and all(
        sum(a * x for a, x in zip(av, zz)) <= b for av, b in H.rows
    )


contains_point = membership


def local_facets(P: VPolytope) -> tuple[list[tuple[Point, int]], list[tuple]]:
    """Facets ``a.y <= b`` and vertices of ``P`` in its intrinsic lattice coordinates."""
    geo = _geometry(P.vertices)
    return list(geo.facets), list(geo.local_vertices)


def intrinsic(P: VPolytope) -> VPolytope:
    """A full-dimensional polytope lattice-equivalent to ``P``.

    The affine-hull lattice is identified with ``Z^dim``; when the origin lies in
    the affine hull it maps to the origin, so reflexivity is preserved."""
    geo = _geometry(P.vertices)
    if geo.dim == P.ambient_dim:
        return P
    return VPolytope(geo.dim, tuple(geo.local_vertices))


# -- counting -----------------------------------------------------------------

_CHUNK = 1 << 17


def _scan(A: np.ndarray, b: np.ndarray, lo: list[int], hi: list[int]) -> int:
    """Integer points of ``{A y <= b}`` in the box ``[lo, hi]``.

    The last coordinate is solved in closed form per prefix point, so only the
    first ``n-1`` box coordinates are enumerated.
    """
    n = A.shape[1]
    c = A[:, -1]
    pos, neg, zer = c > 0, c < 0, c == 0
    cp = c[pos][:, None]
    cn = -c[neg][:, None]
    Ap = A[:, :-1]
    ranges = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo[:-1], hi[:-1])]
    total = 0
    for chunk in _prefix_chunks(ranges):
        r = b[:, None] - Ap @ chunk.T if n > 1 else np.repeat(b[:, None], chunk.shape[0], axis=1)
        upper = np.full(chunk.shape[0], hi[-1], dtype=np.int64)
        lower = np.full(chunk.shape[0], lo[-1], dtype=np.int64)
        if pos.any():
            upper = np.minimum(upper, np.min(np.floor_divide(r[pos], cp), axis=0))
        if neg.any():
            lower = np.maximum(lower, -np.min(np.floor_divide(r[neg], cn), axis=0))
        width = upper - lower + 1
        if zer.any():
            width = np.where(np.all(r[zer] >= 0, axis=0), width, 0)
        total += int(np.sum(np.maximum(width, 0)))
    return total


def _prefix_chunks(ranges: list[np.ndarray]):
    if not ranges:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    sizes = [len(r) for r in ranges]
    # split on leading coordinates until the remaining grid fits in a chunk
    k = 0
    while k < len(sizes) and prod(sizes[k:]) > _CHUNK:
        k += 1
    tail = ranges[k:]
    if tail:
        tail_grid = np.stack(np.meshgrid(*tail, indexing="ij"), axis=-1).reshape(-1, len(tail))
    else:
        tail_grid = np.zeros((1, 0), dtype=np.int64)
    heads = ranges[:k]
    if not heads:
        yield tail_grid
        return
    head_grid = np.stack(np.meshgrid(*heads, indexing="ij"), axis=-1).reshape(-1, len(heads))
    for h in head_grid:
        yield np.hstack([np.broadcast_to(h, (tail_grid.shape[0], len(h))), tail_grid])


def _count(P: VPolytope, m: int, strict: bool) -> int:
    if m < 1:
        raise DomainError("dilation factor must be positive")
    geo = _geometry(P.vertices)
    n = geo.dim
    if n == 0:
        return 1
    ys = geo.local_vertices
    lo = [m * min(y[k] for y in ys) for k in range(n)]
    hi = [m * max(y[k] for y in ys) for k in range(n)]
    volume = prod(h - l + 1 for l, h in zip(lo, hi))
    if volume > LIMITS.max_box:
        raise ResourceError(f"bounding box of {m}P has {volume} points, cap is {LIMITS.max_box}")
    A = np.array([a for a, _ in geo.facets], dtype=np.int64)
    b = np.array([m * bb - (1 if strict else 0) for _, bb in geo.facets], dtype=np.int64)
    bound = int(np.abs(A).max()) * max(max(map(abs, lo)), max(map(abs, hi))) * n + int(np.abs(b).max())
    if bound >= 2**62:
        raise ResourceError("coordinates too large for exact int64 scanning")
    return _scan(A, b, lo, hi)


def count_lattice_points(P: VPolytope, m: int = 1) -> int:
    """``|mP ∩ Z^d|``."""
    return _count(P, m, strict=False)


def count_interior_lattice_points(P: VPolytope, m: int = 1) -> int:
    """Lattice points in the relative interior of ``mP``."""
    return _count(P, m, strict=True)


def lattice_points(P: VPolytope, m: int = 1) -> np.ndarray:
    """Lattice points of ``mP`` for full-dimensional ``P``, one per row, in
    lexicographic order."""
    if m < 1:
        raise DomainError("dilation factor must be positive")
    if not P.is_full_dimensional():
        raise DomainError("lattice_points needs a full-dimensional polytope")
    d = P.ambient_dim
    lo = [m * min(v[k] for v in P.vertices) for k in range(d)]
    hi = [m * max(v[k] for v in P.vertices) for k in range(d)]
    volume = prod(h - l + 1 for l, h in zip(lo, hi))
    if volume > LIMITS.max_box:
        raise ResourceError(f"bounding box of {m}P has {volume} points, cap is {LIMITS.max_box}")
    H = vrep_to_hrep(P)
    A = np.array([a for a, _ in H.rows], dtype=np.int64)
    b = np.array([(m * bb.numerator) // bb.denominator for _, bb in H.rows], dtype=np.int64)
    keep = []
    for chunk in _prefix_chunks([np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]):
        ok = np.all(A @ chunk.T <= b[:, None], axis=0)
        keep.append(chunk[ok])
    return np.concatenate(keep) if keep else np.zeros((0, d), dtype=np.int64)


def hstar_from_counts(counts: Sequence[int], n: int) -> IntPolynomial:
    """Numerator of ``sum L(m) x^m`` over ``(1 - x)^(n + 1)`` from ``L(0..n)``."""
    return IntPolynomial(
        sum((-1) ** j * comb(n + 1, j) * counts[i - j] for j in range(i + 1)) for i in range(n + 1)
    )


@lru_cache(maxsize=None)
def _ehrhart_cached(vertices: tuple[Point, ...]) -> EhrhartData:
    P = VPolytope(len(vertices[0]), vertices)
    n = P.dim
    counts = (1,) + tuple(count_lattice_points(P, m) for m in range(1, n + 1))
    return EhrhartData(
        dim=n,
        counts=counts,
        hstar=hstar_from_counts(counts, n),
        ehrhart=interpolate(list(enumerate(counts))),
    )


def ehrhart_data(P: VPolytope) -> EhrhartData:
    _check_dim(P.ambient_dim)
    return _ehrhart_cached(P.vertices)


def hstar(P: VPolytope) -> IntPolynomial:
    return ehrhart_data(P).hstar
