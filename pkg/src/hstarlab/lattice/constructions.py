"""Polytope constructors: sign closures, joins, projections, duals."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from hstarlab.errors import DomainError
from hstarlab.lattice.polytope import (
    VPolytope,
    hull,
    local_facets,
    membership,
    vrep_to_hrep,
)


def sign_vectors(d: int) -> list[tuple[int, ...]]:
    """All of ``{-1, 1}^d`` in a fixed order (``+1`` before ``-1`` per coordinate)."""
    return list(product((1, -1), repeat=d))


def reflect(eps: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(e * x for e, x in zip(eps, v))


def cube(d: int, lo: int = 0, hi: int = 1) -> VPolytope:
    return VPolytope(d, tuple(product((lo, hi), repeat=d)))


def cross_polytope(d: int) -> VPolytope:
    pts = []
    for i in range(d):
        for s in (1, -1):
            v = [0] * d
            v[i] = s
            pts.append(tuple(v))
    return VPolytope(d, tuple(pts))


def del_pezzo(m: int) -> VPolytope:
    """``conv(±e_1, ..., ±e_2m, ±(e_1 + ... + e_2m))``."""
    d = 2 * m
    pts = list(cross_polytope(d).vertices) + [(1,) * d, (-1,) * d]
    return hull(pts)


def pseudo_del_pezzo(m: int) -> VPolytope:
    """``conv(±e_1, ..., ±e_2m, -(e_1 + ... + e_2m))``."""
    d = 2 * m
    pts = list(cross_polytope(d).vertices) + [(-1,) * d]
    return hull(pts)


def is_anti_blocking(P: VPolytope) -> bool:
    """Full-dimensional, inside the nonnegative orthant, and closed under
    zeroing any coordinate of a vertex (which implies down-closure)."""
    if any(x < 0 for v in P.vertices for x in v):
        return False
    if not P.is_full_dimensional():
        return False
    H = vrep_to_hrep(P)
    for v in P.vertices:
        for i, x in enumerate(v):
            if x and not membership(H, v[:i] + (0,) + v[i + 1 :]):
                return False
    return True


def unconditional_closure(P: VPolytope) -> VPolytope:
    if not is_anti_blocking(P):
        raise DomainError("unconditional closure needs a full-dimensional anti-blocking polytope")
    d = P.ambient_dim
    return hull(reflect(e, v) for v in P.vertices for e in sign_vectors(d))


def _contains_origin(P: VPolytope) -> bool:
    return membership(vrep_to_hrep(P), (0,) * P.ambient_dim)


def free_sum(P: VPolytope, Q: VPolytope) -> VPolytope:
    if not (_contains_origin(P) and _contains_origin(Q)):
        raise DomainError("free sum needs both polytopes to contain the origin")
    zp, zq = (0,) * P.ambient_dim, (0,) * Q.ambient_dim
    pts = [v + zq for v in P.vertices] + [zp + w for w in Q.vertices]
    return hull(pts, ambient_dim=P.ambient_dim + Q.ambient_dim)


def _same_dim(P: VPolytope, Q: VPolytope) -> None:
    if P.ambient_dim != Q.ambient_dim:
        raise DomainError("polytopes live in different ambient dimensions")


def cayley_sum(P: VPolytope, Q: VPolytope) -> VPolytope:
    """``conv(P x {0} ∪ Q x {1})``."""
    _same_dim(P, Q)
    return hull([v + (0,) for v in P.vertices] + [w + (1,) for w in Q.vertices])


def gamma_join(P: VPolytope, Q: VPolytope) -> VPolytope:
    """``conv(P ∪ -Q)``."""
    _same_dim(P, Q)
    return hull(list(P.vertices) + [tuple(-x for x in w) for w in Q.vertices])


def omega_join(P: VPolytope, Q: VPolytope) -> VPolytope:
    """``conv(P x {1} ∪ -Q x {-1})``."""
    _same_dim(P, Q)
    return hull([v + (1,) for v in P.vertices] + [tuple(-x for x in w) + (-1,) for w in Q.vertices])


def project(P: VPolytope, J: Iterable[int]) -> VPolytope:
    """Coordinate projection onto ``J`` (0-based indices, kept in increasing order)."""
    J = sorted(set(J))
    if any(j < 0 or j >= P.ambient_dim for j in J):
        raise DomainError("projection index out of range")
    if not J:
        return VPolytope(0, ((),))
    return hull(tuple(v[j] for j in J) for v in P.vertices)


def is_reflexive(P: VPolytope) -> bool:
    """Every facet reads ``a.x <= 1`` with ``a`` integral (so 0 is interior and
    the dual is a lattice polytope)."""
    if not P.is_full_dimensional():
        raise DomainError("reflexivity is tested on full-dimensional polytopes")
    facets, _ = local_facets(P)
    return all(b == 1 for _, b in facets)


def dual(P: VPolytope) -> VPolytope:
    if not is_reflexive(P):
        raise DomainError("the dual of a non-reflexive polytope is not a lattice polytope")
    facets, _ = local_facets(P)
    return VPolytope(P.ambient_dim, tuple(a for a, _ in facets))
