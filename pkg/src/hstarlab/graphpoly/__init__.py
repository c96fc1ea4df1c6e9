"""Graphs, hypergraphs and symmetric edge polytopes."""

from hstarlab.graphpoly.edgepoly import (
    block_product,
    closed_form_complete,
    closed_form_complete_bipartite,
    closed_form_cycle,
    closed_form_delpezzo,
    closed_form_pseudo_delpezzo,
    complete_bipartite_interior,
    component_hstar,
    component_polytope,
    delete_edge_polytope,
    edge_polytope_B,
    hstar_A,
    hstar_A_suspension,
    hstar_B,
    pseudo_symmetric_hstar,
    suspension_gamma_polynomial,
    symmetric_edge_A,
    symmetric_edge_B,
    tilde_hypergraph,
)
from hstarlab.graphpoly.graphs import (
    Cut,
    Graph,
    all_graphs,
    complete_bipartite_graph,
    complete_bipartite_sides,
    complete_graph,
    connected_graphs,
    contract,
    cuts,
    cycle_graph,
    dominating_vertex,
    empty_graph,
    is_bridge,
    is_complete,
    is_cycle,
    path_graph,
    star_graph,
    suspension,
    tilde_extend,
    two_connected_components,
)
from hstarlab.graphpoly.hypergraph import (
    Hypergraph,
    Hypertree,
    hypertrees,
    interior_polynomial,
    internally_inactive,
    spanning_trees,
)

__all__ = [name for name in dir() if not name.startswith("_")]
