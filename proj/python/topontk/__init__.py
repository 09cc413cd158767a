"""Hodge-Laplacian neural tangent kernels on edge signals of simplicial complexes."""

from ._topontk import (
    Activation,
    HodgeBasis,
    HodgeLabel,
    InvalidArgument,
    KernelConfig,
    RidgeModel,
    SimplicialComplex,
    TopoNTKError,
    Variant,
    ZeroVariance,
    architecture_operator,
    average_precision,
    boundary_matrices,
    cycle_chord_skeleton,
    er_clique_complex,
    fill_candidates,
    finite_width_ntk,
    flip_triangles,
    gram_matrix,
    hodge_basis,
    kernel_gradient_flow,
    krr_fit,
    ntk_pair,
    propagator,
    read_complex_file,
    three_cliques,
    write_complex_file,
)

__version__ = "0.1.0"
