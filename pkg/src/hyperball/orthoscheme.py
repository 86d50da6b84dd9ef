"""Frustum orthoscheme geometry of the regular truncated tetrahedron.

For a truncation parameter ``p > 6`` the regular truncated tetrahedron splits
into 24 congruent simple frustum orthoschemes with essential angles
``(pi/p, pi/3, pi/3)``.  This module builds the Coxeter-Schlafli matrix of
that orthoscheme, evaluates its volume by the Kellerhals closed form, derives
the hyperball height ``h(p)`` from the inverse (vertex Gram) matrix, and
computes the truncation triangle cut off by the polar plane of the outer
vertex.  All lengths are in natural units (k = 1).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateTriangleError, DomainError, NotTruncatableError
from .lobachevsky import lob
from .lorentz import gram_distance, invert_sym4, project_to_polar

#: Index of the outer principal vertex in the Coxeter-Schlafli matrix.
OUTER_VERTEX = 3

#: Sides shorter than this cannot carry angle information.
_MIN_SIDE = 1e-12


@dataclass(frozen=True)
class OrthoschemeAngles:
    """Essential dihedral angles of a 3-dimensional orthoscheme, in radians."""

    alpha01: float
    alpha12: float
    alpha23: float

    def __post_init__(self):
        for name, value in (
            ("alpha01", self.alpha01),
            ("alpha12", self.alpha12),
            ("alpha23", self.alpha23),
        ):
            if not 0.0 <= value <= 0.5 * math.pi:
                raise DomainError(
                    f"{name} must lie in [0, pi/2], got {value}"
                )


@dataclass(frozen=True)
class TruncatedTetraGeometry:
    """Geometric report for one regular truncated tetrahedron.

    ``tri_area`` is the truncation triangle of a single orthoscheme (one
    sixth of a triangle face); ``omega`` is the sum of the six dihedral
    angles along the truncated (hexagon-hexagon) edges.
    """

    p: float
    h: float
    vol_orthoscheme: float
    vol_tetra: float
    tri_area: float
    hexagon_area: float
    surface_area: float
    omega: float


class TruncationTriangle(NamedTuple):
    """Area and angles of the triangle cut off by the outer vertex's polar plane."""

    area: float
    angle_q0: float
    angle_q1: float
    angle_q2: float


def frustum_angles(p: float) -> OrthoschemeAngles:
    """Essential angles ``(pi/p, pi/3, pi/3)`` of the characteristic orthoscheme."""
    return OrthoschemeAngles(math.pi / p, math.pi / 3.0, math.pi / 3.0)


def coxeter_matrix(p: float) -> np.ndarray:
    """Coxeter-Schlafli matrix of the frustum orthoscheme with parameter ``p``.

    Symmetric 4x4 with unit diagonal; off-diagonal entries are the negated
    cosines of the essential angles: ``-cos(pi/p)`` between vertices 0 and 1,
    ``-cos(pi/3) = -1/2`` along the rest of the orthogonal edge-path.
    Requires ``p > 2``; truncation additionally needs ``p > 6``.
    """
    if p <= 2.0:
        raise DomainError(f"p must exceed 2, got {p}")
    a = math.cos(math.pi / p)
    return np.array(
        [
            [1.0, -a, 0.0, 0.0],
            [-a, 1.0, -0.5, 0.0],
            [0.0, -0.5, 1.0, -0.5],
            [0.0, 0.0, -0.5, 1.0],
        ]
    )


def vertex_gram_matrix(p: float) -> np.ndarray:
    """Inverse of the Coxeter-Schlafli matrix: Gram matrix of the vertex poles.

    For ``p <= 6`` the principal vertex is not an outer point and no polar
    truncation exists, so :class:`NotTruncatableError` is raised.
    """
    if p <= 6.0:
        raise NotTruncatableError(
            f"truncation requires p > 6, got {p} (principal vertex not outer)"
        )
    return invert_sym4(coxeter_matrix(p))


def kellerhals_theta(angles: OrthoschemeAngles) -> float:
    """Auxiliary angle of the orthoscheme volume formula.

    ``theta = arctan( sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23) )``
    in ``[0, pi/2)``.  A negative radicand means the orthoscheme is not
    hyperbolic in this family and raises :class:`DomainError`, as does a
    vanishing denominator.
    """
    a01, a12, a23 = angles.alpha01, angles.alpha12, angles.alpha23
    radicand = math.cos(a12) ** 2 - math.sin(a01) ** 2 * math.sin(a23) ** 2
    if radicand < 0.0:
        raise DomainError(
            "cos^2(alpha12) < sin^2(alpha01) * sin^2(alpha23): "
            f"no real theta for angles {angles}"
        )
    denom = math.cos(a01) * math.cos(a23)
    if denom <= 0.0:
        raise DomainError(
            f"cos(alpha01) * cos(alpha23) must be positive, got {denom}"
        )
    return math.atan(math.sqrt(radicand) / denom)


def orthoscheme_volume(angles: OrthoschemeAngles) -> float:
    """Volume of a complete 3-dimensional hyperbolic orthoscheme.

    Kellerhals closed form in the essential angles:

    ``Vol = 1/4 * ( L(a01+t) - L(a01-t) + L(pi/2+a12-t) + L(pi/2-a12-t)
    + L(a23+t) - L(a23-t) + 2*L(pi/2-t) )``

    with ``t = kellerhals_theta(angles)`` and ``L`` the Lobachevsky function.
    """
    t = kellerhals_theta(angles)
    a01, a12, a23 = angles.alpha01, angles.alpha12, angles.alpha23
    half_pi = 0.5 * math.pi
    return 0.25 * (
        lob(a01 + t)
        - lob(a01 - t)
        + lob(half_pi + a12 - t)
        + lob(half_pi - a12 - t)
        + lob(a23 + t)
        - lob(a23 - t)
        + 2.0 * lob(half_pi - t)
    )


def hyperball_height(p: float) -> float:
    """Maximal hyperball height ``h(p)``, half the distance between base planes.

    Distance from the proper vertex at index 2 to its projection onto the
    polar plane of the outer vertex, computed entirely from Gram data:
    ``cosh h = sqrt((H22*H33 - H23^2) / (H22*H33))`` with ``H`` the vertex
    Gram matrix.  Strictly decreasing in ``p``; requires ``p > 6``.
    """
    H = vertex_gram_matrix(p)
    g_qq, g_qa = project_to_polar(H, 2, OUTER_VERTEX)
    return gram_distance(H[2, 2], g_qq, g_qa)


def _angle_between(b: float, c: float, a: float) -> float:
    """Hyperbolic law of cosines: angle enclosed by sides b, c, opposite a."""
    if min(a, b, c) < _MIN_SIDE:
        raise DegenerateTriangleError(
            f"triangle sides ({a}, {b}, {c}) below {_MIN_SIDE}"
        )
    cos_gamma = (math.cosh(b) * math.cosh(c) - math.cosh(a)) / (
        math.sinh(b) * math.sinh(c)
    )
    return math.acos(min(1.0, max(-1.0, cos_gamma)))


def truncation_triangle(p: float) -> TruncationTriangle:
    """Truncation triangle of one orthoscheme: area and interior angles.

    The three proper vertices project onto the polar plane of the outer
    vertex; their pairwise Gram entries give the side lengths, the law of
    cosines the angles, and the angle defect the area.  The angles sit at
    the projected images of the face centre (q0), an edge midpoint (q1), and
    a face vertex (q2): numerically ``(pi/3, pi/2, pi/p)``, so the area is
    ``pi/6 - pi/p``; both facts are verified, not assumed, by the test suite.
    """
    H = vertex_gram_matrix(p)
    u = OUTER_VERTEX
    h_uu = H[u, u]
    if h_uu <= 0.0:
        raise NotTruncatableError(
            f"vertex {u} is not outer (H[{u},{u}] = {h_uu})"
        )
    # Gram matrix of the projected points q_i ~ a_i*H[u,u] - a_u*H[i,u].
    G = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            G[i, j] = h_uu * (H[i, j] * h_uu - H[i, u] * H[j, u])
    s01 = gram_distance(G[0, 0], G[1, 1], G[0, 1])
    s02 = gram_distance(G[0, 0], G[2, 2], G[0, 2])
    s12 = gram_distance(G[1, 1], G[2, 2], G[1, 2])
    angle_q0 = _angle_between(s01, s02, s12)
    angle_q1 = _angle_between(s01, s12, s02)
    angle_q2 = _angle_between(s02, s12, s01)
    area = math.pi - (angle_q0 + angle_q1 + angle_q2)
    return TruncationTriangle(area, angle_q0, angle_q1, angle_q2)


def tetra_geometry(p: float) -> TruncatedTetraGeometry:
    """Full geometric report for the regular truncated tetrahedron at ``p``.

    Aggregates the hyperball height, orthoscheme volume (x24 for the solid),
    truncation triangle area, the constant hexagon face area ``pi``, the
    dihedral angle sum ``omega = 12*pi/p`` along the six truncated edges
    (each contributing twice the essential angle ``pi/p``), and the surface
    area assembled from four hexagon and four triangle faces.  The latter
    must agree with ``8*pi - 2*omega``.
    """
    h = hyperball_height(p)
    vol_o = orthoscheme_volume(frustum_angles(p))
    tri = truncation_triangle(p)
    hexagon_area = math.pi
    triangle_face_area = 6.0 * tri.area
    return TruncatedTetraGeometry(
        p=p,
        h=h,
        vol_orthoscheme=vol_o,
        vol_tetra=24.0 * vol_o,
        tri_area=tri.area,
        hexagon_area=hexagon_area,
        surface_area=4.0 * hexagon_area + 4.0 * triangle_face_area,
        omega=12.0 * math.pi / p,
    )
