"""Hyperball packing densities in regular truncated tetrahedra of hyperbolic 3-space.

A regular tetrahedron with outer vertices, truncated by the polar planes of
those vertices, carries a packing by four congruent hyperballs (hyperspheres)
whose common height ``h(p)`` depends on the dihedral parameter ``p > 6``.
This library computes the geometry (heights, orthoscheme volumes via the
Kellerhals formula, truncation triangles), the resulting packing density
``delta(p)``, and its maximum near ``p = 6.135`` where the density exceeds
the classical ball/horoball bound.

All computation happens in the projective (Lorentz) model through Gram
matrices; distances are in natural units (curvature constant k = 1).
"""

from .density import (
    VERMES_LIMIT,
    DensityRow,
    hyperball_piece_volume,
    simplex_density,
    vermes_hexagon_density,
)
from .errors import (
    ConvergenceError,
    DegenerateTriangleError,
    DomainError,
    HyperballError,
    InvalidInputError,
    NotTruncatableError,
    SingularMatrixError,
)
from .lobachevsky import lob, lob_quadrature_oracle
from .lorentz import (
    IDEAL_TOL,
    PointClass,
    bilinear_form,
    classify_point,
    gram_distance,
    invert_sym4,
    project_to_polar,
)
from .optimize import OptimizationResult, find_optimal_p, maximize_unimodal
from .orthoscheme import (
    OrthoschemeAngles,
    TruncatedTetraGeometry,
    TruncationTriangle,
    coxeter_matrix,
    frustum_angles,
    hyperball_height,
    kellerhals_theta,
    orthoscheme_volume,
    tetra_geometry,
    truncation_triangle,
    vertex_gram_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "VERMES_LIMIT",
    "IDEAL_TOL",
    "DensityRow",
    "OptimizationResult",
    "OrthoschemeAngles",
    "PointClass",
    "TruncatedTetraGeometry",
    "TruncationTriangle",
    "bilinear_form",
    "classify_point",
    "coxeter_matrix",
    "find_optimal_p",
    "frustum_angles",
    "gram_distance",
    "hyperball_height",
    "hyperball_piece_volume",
    "invert_sym4",
    "kellerhals_theta",
    "lob",
    "lob_quadrature_oracle",
    "maximize_unimodal",
    "orthoscheme_volume",
    "project_to_polar",
    "simplex_density",
    "tetra_geometry",
    "truncation_triangle",
    "vermes_hexagon_density",
    "vertex_gram_matrix",
    "ConvergenceError",
    "DegenerateTriangleError",
    "DomainError",
    "HyperballError",
    "InvalidInputError",
    "NotTruncatableError",
    "SingularMatrixError",
]
