#!/usr/bin/env python3
"""Locate the truncation parameter with the densest hyperball packing.

The density delta(p) rises steeply as p leaves the degenerate configuration
at p = 6, peaks just above p = 6.13, and decays towards zero afterwards.
Because it is strictly unimodal, a golden-section search needs no
derivatives and cannot be fooled by the ill-conditioned left boundary.
"""

from hyperball import find_optimal_p, simplex_density

# Reference constant: the classical upper bound for ball and horoball
# packings of hyperbolic 3-space.  The truncated-tetrahedron value beats it,
# which is the point of the whole construction.
BALL_PACKING_BOUND = 0.85328

# 1) A coarse bracket scan first, to see the shape of the curve.
print("coarse scan:")
for p in (6.01, 6.05, 6.10, 6.13, 6.14, 6.20, 6.5, 7.0, 8.0):
    print(f"  delta({p:<5}) = {simplex_density(p).delta:.6f}")

# 2) The golden-section search proper.
result = find_optimal_p(tol=1e-7)
print()
print(f"p_opt      = {result.p_opt:.6f}")
print(f"delta_opt  = {result.delta_opt:.6f}")
print(f"iterations = {result.iterations}")
print(f"bracket    = [{result.bracket[0]:.9f}, {result.bracket[1]:.9f}]")

# 3) How much denser than any ball or horoball packing can be:
margin = result.delta_opt - BALL_PACKING_BOUND
print()
print(f"ball/horoball packing bound : {BALL_PACKING_BOUND}")
print(f"optimal hyperball density   : {result.delta_opt:.5f}")
print(f"margin above the bound      : {margin:.5f}")

# 4) Tolerance scaling: the iteration count grows logarithmically.
print()
print(f"{'tol':>8}  {'p_opt':>12}  {'iterations':>10}")
for tol in (1e-2, 1e-4, 1e-6, 1e-8):
    r = find_optimal_p(tol=tol)
    print(f"{tol:>8.0e}  {r.p_opt:>12.8f}  {r.iterations:>10}")
