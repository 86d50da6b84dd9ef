"""Hyperball packing densities in the regular truncated tetrahedron.

Combines the Bolyai volume of a hyperball piece over the truncation triangle
with the orthoscheme volume to form the local density ``delta(p)``; also
provides the two-dimensional hexagon hypercycle density of Vermes, whose
supremum ``3/pi`` bounds the planar picture.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, NotTruncatableError
from .orthoscheme import (
    frustum_angles,
    hyperball_height,
    orthoscheme_volume,
    truncation_triangle,
)

#: Supremum of the hexagon hypercycle density as the height grows.
VERMES_LIMIT = 3.0 / math.pi


@dataclass(frozen=True)
class DensityRow:
    """One packing-density record: per-orthoscheme volumes and their ratio."""

    p: float
    h: float
    vol_orthoscheme: float
    vol_piece: float
    delta: float

    @property
    def vol_tetra(self) -> float:
        """Volume of the whole truncated tetrahedron (24 orthoschemes)."""
        return 24.0 * self.vol_orthoscheme

    @property
    def vol_piece_tetra(self) -> float:
        """Hyperball volume inside the whole tetrahedron (24 pieces)."""
        return 24.0 * self.vol_piece


def hyperball_piece_volume(area: float, h: float) -> float:
    """Bolyai volume of a hyperball piece over a base polygon.

    ``Vol = 1/4 * area * (sinh(2h) + 2h)`` in natural units: the volume
    between a polygon of the given area in the base plane and the equidistant
    surface at height ``h``, taken over the orthogonal prism.
    """
    if area < 0.0 or h < 0.0:
        raise DomainError(f"area and h must be nonnegative, got ({area}, {h})")
    return 0.25 * area * (math.sinh(2.0 * h) + 2.0 * h)


def simplex_density(p: float) -> DensityRow:
    """Local hyperball packing density of the regular truncated tetrahedron.

    Assembles ``h(p)``, the orthoscheme volume, and the hyperball piece over
    the truncation triangle; ``delta`` is their ratio.  The ratio is the same
    per orthoscheme and per tetrahedron (both scale by 24).  Requires
    ``p > 6``.
    """
    if p <= 6.0:
        raise NotTruncatableError(f"density is defined for p > 6, got {p}")
    h = hyperball_height(p)
    vol_o = orthoscheme_volume(frustum_angles(p))
    piece = hyperball_piece_volume(truncation_triangle(p).area, h)
    return DensityRow(
        p=p, h=h, vol_orthoscheme=vol_o, vol_piece=piece, delta=piece / vol_o
    )


def vermes_hexagon_density(h: float) -> float:
    """Hypercycle packing density in a right-angled hexagon at height ``h``.

    ``6 sinh(h) arcsinh(1 / (2 sinh h)) / pi``: strictly increasing in ``h``
    and approaching ``3/pi`` from below.  Requires ``h > 0``.
    """
    if h <= 0.0:
        raise DomainError(f"height must be positive, got {h}")
    s = math.sinh(h)
    return 6.0 * s * math.asinh(1.0 / (2.0 * s)) / math.pi
