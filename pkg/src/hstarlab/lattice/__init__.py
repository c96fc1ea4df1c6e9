"""Lattice polytopes, the brute-force Ehrhart oracle, and polytope constructors."""

from hstarlab.lattice.config import LIMITS, Limits, limits
from hstarlab.lattice.constructions import (
    cayley_sum,
    cross_polytope,
    cube,
    del_pezzo,
    dual,
    free_sum,
    gamma_join,
    is_anti_blocking,
    is_reflexive,
    omega_join,
    project,
    pseudo_del_pezzo,
    reflect,
    sign_vectors,
    unconditional_closure,
)
from hstarlab.lattice.polytope import (
    EhrhartData,
    HPolytope,
    VPolytope,
    contains_point,
    count_interior_lattice_points,
    count_lattice_points,
    ehrhart_data,
    hstar,
    hstar_from_counts,
    hull,
    intrinsic,
    lattice_points,
    local_facets,
    membership,
    vrep_to_hrep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
