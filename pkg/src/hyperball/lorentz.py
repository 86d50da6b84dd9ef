"""Metric kernel for the projective (Lorentz) model of hyperbolic 3-space.

Points and plane forms are homogeneous 4-vectors carrying the signature-(1,3)
bilinear form ``<x, y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3``.  Everything
downstream (distances, hyperball heights, truncation geometry) is computed
from Gram matrices of such vectors; no explicit vertex coordinates are ever
constructed.  The curvature unit is fixed to k = 1, so distances come out in
natural length units.
"""

import enum
import math

import numpy as np

from .errors import (
    DomainError,
    InvalidInputError,
    NotTruncatableError,
    SingularMatrixError,
)

#: Relative tolerance below which <x,x> is treated as zero (ideal point).
IDEAL_TOL = 1e-10

#: |det| at or below this refuses 4x4 inversion.
SINGULAR_DET_TOL = 1e-12

#: Slack allowed before a cosh argument slightly below 1 becomes an error.
_COSH_ARG_TOL = 1e-12


class PointClass(enum.Enum):
    """Position of a projective point relative to the absolute quadric."""

    PROPER = "proper"  # interior: <x,x> < 0
    IDEAL = "ideal"    # on the quadric: <x,x> = 0
    OUTER = "outer"    # exterior: <x,x> > 0


def bilinear_form(x, y) -> float:
    """Signature-(1,3) inner product of two homogeneous 4-vectors.

    Symmetric and bilinear; negative on interior (proper) points, zero on
    the absolute quadric, positive outside it.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(-x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3])


def classify_point(x, tol: float = IDEAL_TOL) -> PointClass:
    """Classify a homogeneous point as proper, ideal, or outer.

    ``|<x,x>| <= tol * sum(x_i^2)`` maps to IDEAL, so the result is invariant
    under rescaling of ``x``.  Raises :class:`InvalidInputError` for the zero
    vector, which represents no projective point.
    """
    if tol < 0:
        raise InvalidInputError(f"tolerance must be nonnegative, got {tol}")
    x = np.asarray(x, dtype=float)
    euclid2 = float(np.dot(x, x))
    if euclid2 == 0.0:
        raise InvalidInputError("cannot classify the zero vector")
    q = bilinear_form(x, x)
    if abs(q) <= tol * euclid2:
        return PointClass.IDEAL
    return PointClass.PROPER if q < 0.0 else PointClass.OUTER


def _det3(m) -> float:
    """Determinant of a 3x3 matrix by cofactor expansion along the first row."""
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def invert_sym4(C, det_tol: float = SINGULAR_DET_TOL) -> np.ndarray:
    """Invert a symmetric 4x4 matrix by the cofactor/adjugate rule.

    The adjugate of a symmetric matrix is symmetric, so only the upper
    triangle of cofactors is computed and mirrored; the result is therefore
    exactly symmetric.  Raises :class:`SingularMatrixError` (carrying the
    determinant) when ``|det| <= det_tol``.
    """
    C = np.asarray(C, dtype=float)
    if C.shape != (4, 4):
        raise InvalidInputError(f"expected a 4x4 matrix, got shape {C.shape}")
    if not np.array_equal(C, C.T):
        raise InvalidInputError("matrix is not symmetric")

    cof = np.empty((4, 4))
    for i in range(4):
        for j in range(i, 4):
            minor = np.delete(np.delete(C, i, axis=0), j, axis=1)
            cof[i, j] = cof[j, i] = (-1.0) ** (i + j) * _det3(minor)
    det = float(np.dot(C[0], cof[0]))
    if abs(det) <= det_tol:
        raise SingularMatrixError(
            f"matrix is numerically singular (det = {det:.3e})", det=det
        )
    return cof / det


def gram_distance(g_xx: float, g_yy: float, g_xy: float) -> float:
    """Hyperbolic distance between two proper points from Gram data.

    ``cosh d = |g_xy| / sqrt(g_xx * g_yy)`` with both self inner products
    negative.  The absolute value makes the result independent of the sign
    chosen for each homogeneous lift (points are defined up to a nonzero
    factor); for lifts in a common cone ``-g_xy`` is itself positive and the
    two readings agree.  Arguments within ``1e-12`` below 1 are clamped to 1
    (distance 0); anything lower can only come from inconsistent Gram data
    and raises :class:`DomainError`, as do non-proper inputs.
    """
    if g_xx >= 0.0 or g_yy >= 0.0:
        raise DomainError(
            "both points must be proper: need g_xx < 0 and g_yy < 0, "
            f"got g_xx = {g_xx}, g_yy = {g_yy}"
        )
    arg = abs(g_xy) / math.sqrt(g_xx * g_yy)
    if arg < 1.0 - _COSH_ARG_TOL:
        raise DomainError(f"cosh argument {arg} is below 1: no real distance")
    return math.acosh(max(arg, 1.0))


def project_to_polar(H, j: int, u: int) -> tuple[float, float]:
    """Gram data of the projection of vertex ``j`` onto the polar plane of ``u``.

    ``H`` is the vertex Gram matrix (inverse of a Coxeter-Schlafli matrix)
    and ``u`` an outer vertex (``H[u,u] > 0``).  The projected point is
    ``q_j ~ a_j * H[u,u] - a_u * H[j,u]``, which lies on the polar plane of
    ``a_u`` by construction.  Returns, expanded purely in Gram entries,

    * ``g_qq = <q_j, q_j> = H[u,u] * (H[j,j] * H[u,u] - H[j,u]**2)``
    * ``g_qa = <q_j, a_j> = H[j,j] * H[u,u] - H[j,u]**2``

    Raises :class:`NotTruncatableError` when ``H[u,u] <= 0``.
    """
    H = np.asarray(H, dtype=float)
    if j == u:
        raise InvalidInputError("projection indices j and u must differ")
    h_uu = H[u, u]
    if h_uu <= 0.0:
        raise NotTruncatableError(
            f"vertex {u} is not an outer point (H[{u},{u}] = {h_uu}); "
            "its polar plane does not cut the simplex"
        )
    g_qa = H[j, j] * h_uu - H[j, u] ** 2
    g_qq = h_uu * g_qa
    return g_qq, g_qa
