"""Golden-section maximization of the packing density over ``p``.

The density ``delta(p)`` is smooth and strictly unimodal on ``(6, inf)``:
increasing up to a single interior maximum and decreasing beyond it.
Golden-section search needs nothing but that, which keeps the optimizer
robust near the ill-conditioned left boundary where the truncation
degenerates.
"""

import math
from dataclasses import dataclass
from typing import Callable

from .density import simplex_density
from .errors import ConvergenceError, InvalidInputError

#: Golden-section shrink factor, 1/phi.
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

#: Left edge offset: p = 6 itself is the singular (ideal-vertex) limit.
_LEFT_MARGIN = 1e-6


@dataclass(frozen=True)
class OptimizationResult:
    """Maximizer report: location, value, effort, and the final bracket."""

    p_opt: float
    delta_opt: float
    iterations: int
    bracket: tuple[float, float]
    tol: float


def maximize_unimodal(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_iter: int = 200,
) -> OptimizationResult:
    """Golden-section search for the maximum of a strictly unimodal function.

    Shrinks ``[lo, hi]`` by the golden ratio per iteration until the bracket
    is narrower than ``tol``; the reported maximizer is the bracket midpoint
    and the reported value a single evaluation there.  The iteration count
    never exceeds ``ceil(log((hi-lo)/tol) / log(1/INV_PHI)) + 2`` for any
    admissible input.  Raises :class:`ConvergenceError` (carrying the current
    bracket) if ``max_iter`` runs out first.
    """
    if not lo < hi:
        raise InvalidInputError(f"need lo < hi, got [{lo}, {hi}]")
    if not tol > 0.0:
        raise InvalidInputError(f"tolerance must be positive, got {tol}")
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc = f(c)
    fd = f(d)
    iterations = 0
    while (b - a) > tol:
        if iterations >= max_iter:
            raise ConvergenceError(
                f"bracket still {b - a:.3e} wide after {max_iter} iterations",
                bracket=(a, b),
            )
        if fc < fd:
            a = c
            c, fc = d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        else:
            b = d
            d, fd = c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        iterations += 1
    x = 0.5 * (a + b)
    return OptimizationResult(
        p_opt=x,
        delta_opt=f(x),
        iterations=iterations,
        bracket=(a, b),
        tol=tol,
    )


def find_optimal_p(tol: float = 1e-7, max_iter: int = 200) -> OptimizationResult:
    """Locate the parameter of maximal packing density.

    Starts from the bracket ``[6 + 1e-6, 12]`` and doubles the right edge as
    long as the density is still rising there (it never is for this family,
    but the check keeps the bracket honest), then runs the golden-section
    search.  The optimum sits near ``p = 6.135`` with density about
    ``0.8634``.
    """
    if not tol > 0.0:
        raise InvalidInputError(f"tolerance must be positive, got {tol}")
    lo = 6.0 + _LEFT_MARGIN
    hi = 12.0

    def f(p: float) -> float:
        return simplex_density(p).delta

    for _ in range(50):
        if f(hi) <= f(hi - 1e-3 * (hi - lo)):
            break
        hi = lo + 2.0 * (hi - lo)
    else:
        raise ConvergenceError(
            "density still increasing after 50 bracket expansions",
            bracket=(lo, hi),
        )
    return maximize_unimodal(f, lo, hi, tol, max_iter)
