"""Two-distance representation numbers of graphs."""

from ._core import (
    Graph,
    TwodistError,
    analyze,
    beta_star,
    cm_polynomials,
    complement_components,
    complete_multipartite,
    dim_s_bounded,
    dims_via_join,
    disjoint_cliques,
    enumerate_graphs,
    is_primitive_srg,
    isomorphic,
    join,
    join_decompose,
    jspherical_embedding,
    kuperberg_decompose,
    min_enclosing_ball,
    multipartite_dims,
    phi,
    realize,
    solve_phi,
    tau1_mu,
    verify_profile,
)

__all__ = [
    "Graph",
    "TwodistError",
    "analyze",
    "beta_star",
    "cm_polynomials",
    "complement_components",
    "complete_multipartite",
    "dim_s_bounded",
    "dims_via_join",
    "disjoint_cliques",
    "enumerate_graphs",
    "is_primitive_srg",
    "isomorphic",
    "join",
    "join_decompose",
    "jspherical_embedding",
    "kuperberg_decompose",
    "min_enclosing_ball",
    "multipartite_dims",
    "phi",
    "realize",
    "solve_phi",
    "tau1_mu",
    "verify_profile",
]
