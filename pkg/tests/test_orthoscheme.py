"""Orthoscheme geometry: Coxeter matrix, Kellerhals volume, heights, triangle.

Table targets (columns h and Vol at p = 7, 8, 9, 20, 50, 100) carry a 1e-4
absolute tolerance; they were published rounded to five decimals.  Values
tagged as frozen below came from independent derivations noted inline.
"""

import math

import pytest
from numpy.testing import assert_allclose

from hyperball import (
    DegenerateTriangleError,
    DomainError,
    NotTruncatableError,
    OrthoschemeAngles,
    coxeter_matrix,
    frustum_angles,
    hyperball_height,
    kellerhals_theta,
    orthoscheme_volume,
    tetra_geometry,
    truncation_triangle,
)

# frozen: direct evaluation of arctan(sqrt(0.25 - 0.75*sin^2(pi/7)) / (0.5*cos(pi/7)))
THETA_7 = 0.6320358615464216

# Table targets: p -> (h, Vol)
TABLE_H_VOL = {
    7.0: (0.78871, 0.08856),
    8.0: (0.56419, 0.10721),
    9.0: (0.45320, 0.11825),
    20.0: (0.16397, 0.14636),
    50.0: (0.06325, 0.15167),
    100.0: (0.03147, 0.15241),
}

MONO_GRID = [6.01, 6.5, 7.0, 8.0, 10.0, 20.0, 50.0, 100.0, 1.0e3, 1.0e5]


def test_coxeter_matrix_entries_p7():
    C = coxeter_matrix(7.0)
    assert_allclose(C[0, 1], -math.cos(math.pi / 7.0), atol=0)
    assert_allclose(C[0, 1], -0.90097, atol=1e-5)
    assert C[1, 2] == -0.5
    assert C[2, 3] == -0.5
    assert C[0, 2] == 0.0 and C[0, 3] == 0.0 and C[1, 3] == 0.0


def test_coxeter_matrix_symmetric_unit_diagonal():
    for p in (3.0, 7.0, 100.0):
        C = coxeter_matrix(p)
        assert (C == C.T).all()
        assert (C.diagonal() == 1.0).all()


def test_coxeter_matrix_determinant_p7():
    import numpy as np

    # tridiagonal recurrence gives d4 = 0.5 - 0.75*cos^2(pi/p)
    d4 = 0.5 - 0.75 * math.cos(math.pi / 7.0) ** 2
    assert_allclose(d4, -0.1088086756970251, atol=1e-15)
    assert_allclose(np.linalg.det(coxeter_matrix(7.0)), d4, atol=1e-12)


def test_coxeter_matrix_rejects_small_p():
    with pytest.raises(DomainError):
        coxeter_matrix(2.0)


def test_angles_validate_range():
    with pytest.raises(DomainError):
        OrthoschemeAngles(-0.1, 1.0, 1.0)
    with pytest.raises(DomainError):
        OrthoschemeAngles(0.1, 1.7, 1.0)


def test_kellerhals_theta_family_p7():
    assert_allclose(kellerhals_theta(frustum_angles(7.0)), THETA_7, atol=1e-14)


def test_kellerhals_theta_degenerate_alpha01():
    # radicand cos^2(pi/3) = 1/4, denominator cos(0)*cos(pi/3) = 1/2
    theta = kellerhals_theta(OrthoschemeAngles(0.0, math.pi / 3.0, math.pi / 3.0))
    assert_allclose(theta, math.pi / 4.0, atol=1e-15)


def test_kellerhals_theta_negative_radicand():
    # equilateral angles: 0.25 < 0.5625
    with pytest.raises(DomainError):
        kellerhals_theta(
            OrthoschemeAngles(math.pi / 3.0, math.pi / 3.0, math.pi / 3.0)
        )


def test_orthoscheme_volume_table():
    for p, (_, vol) in TABLE_H_VOL.items():
        assert_allclose(orthoscheme_volume(frustum_angles(p)), vol, atol=1e-4)


def test_orthoscheme_volume_limit_row():
    # alpha01 = 0 is the p -> infinity limit
    vol = orthoscheme_volume(OrthoschemeAngles(0.0, math.pi / 3.0, math.pi / 3.0))
    assert_allclose(vol, 0.15266, atol=1e-4)


def test_hyperball_height_table():
    for p, (h, _) in TABLE_H_VOL.items():
        assert_allclose(hyperball_height(p), h, atol=1e-4)


def test_hyperball_height_rejects_nontruncatable():
    for p in (6.0, 5.0, 3.0):
        with pytest.raises(NotTruncatableError):
            hyperball_height(p)


def test_height_decreasing_volume_increasing():
    hs = [hyperball_height(p) for p in MONO_GRID]
    vols = [orthoscheme_volume(frustum_angles(p)) for p in MONO_GRID]
    assert all(a > b for a, b in zip(hs, hs[1:]))
    assert all(a < b for a, b in zip(vols, vols[1:]))


def test_limits_large_p():
    assert hyperball_height(1.0e5) < 1e-4
    assert_allclose(orthoscheme_volume(frustum_angles(1.0e5)), 0.15266, atol=1e-3)


def test_truncation_triangle_p7_area_against_table():
    # Table round-trip oracle: invert the prism volume formula with the
    # published 5-decimal values, Area = 4*0.07284/(sinh(2*0.78871) + 2*0.78871).
    # Frozen: 0.07479611503262862.  Table rounding caps agreement near 4e-6.
    tri = truncation_triangle(7.0)
    assert_allclose(tri.area, 0.07479611503262862, atol=1e-4)


def test_truncation_triangle_p7_angles():
    tri = truncation_triangle(7.0)
    assert_allclose(tri.angle_q0, math.pi / 3.0, atol=1e-9)
    assert_allclose(tri.angle_q1, math.pi / 2.0, atol=1e-9)
    assert_allclose(tri.angle_q2, math.pi / 7.0, atol=1e-9)


def test_truncation_triangle_angle_invariants_on_grid():
    for p in MONO_GRID:
        tri = truncation_triangle(p)
        assert abs(tri.angle_q0 - math.pi / 3.0) <= 1e-9
        assert abs(tri.angle_q1 - math.pi / 2.0) <= 1e-9
        assert abs(tri.angle_q2 - math.pi / p) <= 1e-9
        assert abs(tri.area - (math.pi / 6.0 - math.pi / p)) <= 1e-9
        assert 0.0 < tri.area < math.pi / 6.0


def test_degenerate_triangle_guard():
    from hyperball.orthoscheme import _angle_between

    with pytest.raises(DegenerateTriangleError):
        _angle_between(1e-13, 1.0, 1.0)


def test_tetra_geometry_p7():
    geo = tetra_geometry(7.0)
    assert_allclose(geo.surface_area, 32.0 * math.pi / 7.0, atol=1e-9)
    assert_allclose(geo.vol_tetra, 24.0 * 0.08856, atol=24.0e-4)
    assert geo.vol_tetra == 24.0 * geo.vol_orthoscheme
    assert geo.hexagon_area == math.pi
    assert_allclose(geo.omega, 12.0 * math.pi / 7.0, atol=0)


def test_tetra_geometry_surface_identity_on_grid():
    # four hexagons + four triangle faces must add up to 8*pi - 2*omega
    for p in MONO_GRID:
        geo = tetra_geometry(p)
        assert abs(geo.surface_area - (8.0 * math.pi - 2.0 * geo.omega)) <= 1e-9


def test_tetra_geometry_limit():
    geo = tetra_geometry(1.0e5)
    assert_allclose(geo.omega, 0.0, atol=1e-3)
    assert_allclose(geo.surface_area, 8.0 * math.pi, atol=1e-3)
