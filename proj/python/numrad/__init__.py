"""Numerical radius, zero-pattern clique numbers, and the sharp bounds relating them.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (
    BoundParams,
    BoundReport,
    EqualityCertificate,
    Matrix,
    MSResult,
    RadiusResult,
    check_equality_conditions,
    check_lemma1,
    check_theorem1,
    check_theorem2,
    check_turan_edge_bound,
    clique_plus_isolated,
    frobenius_norm_sq,
    general_simplex_max,
    has_zero_diagonal,
    is_hermitian,
    lemma1_bound,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    ms_bound_symmetric,
    numerical_radius,
    omega,
    pattern_mass,
    proposition_matrix,
    quadratic_form,
    replicator_max,
    saturate,
    save_matrix,
    scale,
    simplex_grid_max,
    spectral_radius_hermitian,
    symmetrize_support,
    turan_partite_filled,
)

__version__ = "0.1.0"

__all__ = [
    "BoundParams",
    "BoundReport",
    "EqualityCertificate",
    "Matrix",
    "MSResult",
    "RadiusResult",
    "check_equality_conditions",
    "check_lemma1",
    "check_theorem1",
    "check_theorem2",
    "check_turan_edge_bound",
    "clique_plus_isolated",
    "frobenius_norm_sq",
    "general_simplex_max",
    "has_zero_diagonal",
    "is_hermitian",
    "lemma1_bound",
    "load_matrix",
    "matrix_from_json",
    "matrix_to_json",
    "ms_bound_symmetric",
    "numerical_radius",
    "omega",
    "pattern_mass",
    "proposition_matrix",
    "quadratic_form",
    "replicator_max",
    "saturate",
    "save_matrix",
    "scale",
    "simplex_grid_max",
    "spectral_radius_hermitian",
    "symmetrize_support",
    "turan_partite_filled",
]
