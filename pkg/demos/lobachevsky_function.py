#!/usr/bin/env python3
"""Tour of the Lobachevsky function, the workhorse of hyperbolic volumes.

L(x) = -integral_0^x log|2 sin t| dt.  Odd, pi-periodic, maximal at pi/6.
Every orthoscheme volume in this package is a signed sum of eight L values,
so the function's accuracy budget (1e-12 absolute) is what ultimately backs
the five printed decimals of the packing table.
"""

import math

import numpy as np

from hyperball import lob, lob_quadrature_oracle

# 1) Values at the classical points.
print(f"L(0)     = {lob(0.0):.15f}")
print(f"L(pi/6)  = {lob(math.pi / 6):.15f}   (the global maximum)")
print(f"L(pi/4)  = {lob(math.pi / 4):.15f}   (half the Catalan constant pair)")
print(f"L(pi/3)  = {lob(math.pi / 3):.15f}")
print(f"L(pi/2)  = {lob(math.pi / 2):.2e}  (zero by symmetry)")

# 2) The defining symmetries, sampled at arbitrary points.
rng = np.random.default_rng(20250819)
xs = rng.uniform(-8.0 * math.pi, 8.0 * math.pi, size=5)
print()
print(f"{'x':>12}  {'|L(-x)+L(x)|':>14}  {'|L(x+pi)-L(x)|':>15}")
for x in xs:
    odd = abs(lob(-x) + lob(x))
    per = abs(lob(x + math.pi) - lob(x))
    print(f"{x:>12.6f}  {odd:>14.2e}  {per:>15.2e}")

# 3) The duplication identity L(2x) = 2 L(x) + 2 L(x + pi/2), one of the
#    many Clausen-type multiplication rules.
print()
x = 0.37
lhs = lob(2 * x)
rhs = 2 * lob(x) + 2 * lob(x + math.pi / 2)
print(f"L(2x)              = {lhs:.15f}  at x = {x}")
print(f"2 L(x) + 2 L(x+.5pi) = {rhs:.15f}")
print(f"difference         = {abs(lhs - rhs):.2e}")

# 4) Series evaluator vs. the independent quadrature oracle.  The oracle
#    strips the log singularity at t = 0 analytically and integrates the
#    smooth remainder, sharing no code with the series path.
print()
worst = 0.0
for x in np.linspace(0.0, math.pi, 21):
    worst = max(worst, abs(lob(x) - lob_quadrature_oracle(x, 1e-12)))
print(f"series vs quadrature on [0, pi], 21 points: max diff = {worst:.2e}")

# 5) A small text plot of one period; the maximum at pi/6 and the odd
#    symmetry about pi/2 are visible even at this resolution.
print()
n_rows, width = 17, 56
grid = np.linspace(0.0, math.pi, n_rows)
vmax = lob(math.pi / 6)
for x in grid:
    v = lob(x)
    bar = "#" * int(round(abs(v) / vmax * width))
    sign = " " if v >= 0 else "-"
    print(f"x = {x:5.3f}  {sign}{bar}")
