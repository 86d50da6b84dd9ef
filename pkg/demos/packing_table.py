#!/usr/bin/env python3
"""Rebuild the packing table for the regular truncated tetrahedron.

For each truncation parameter p the table lists the maximal hyperball
height h(p), the volume of one characteristic orthoscheme, the hyperball
piece contained in it, and their ratio: the local packing density.
Published reference values exist for p in {7, 8, 9, 20, 50, 100}; the
density column peaks between p = 6 and p = 7 and decays like 1/p after.
"""

from hyperball import simplex_density

P_VALUES = [7, 8, 9, 20, 50, 100]

header = f"{'p':>6}  {'h(p)':>10}  {'Vol(O)':>10}  {'Vol(piece)':>10}  {'density':>10}"
print(header)
print("-" * len(header))
for p in P_VALUES:
    row = simplex_density(float(p))
    print(
        f"{p:>6}  {row.h:>10.5f}  {row.vol_orthoscheme:>10.5f}"
        f"  {row.vol_piece:>10.5f}  {row.delta:>10.5f}"
    )

# The same quantities at the tetrahedron level: every entry scales by the
# 24-fold orthoscheme decomposition, so the density is unchanged.
row7 = simplex_density(7.0)
print()
print(f"tetrahedron volume at p=7 : {row7.vol_tetra:.5f} (= 24 x {row7.vol_orthoscheme:.5f})")
print(f"hyperball part at p=7     : {row7.vol_piece_tetra:.5f}")
print(f"density, either level     : {row7.delta:.5f}")

# Pushing p far beyond the published range: the hyperball flattens out
# (h -> 0) while the orthoscheme volume saturates near 0.15266, so the
# density goes to zero like 1/p.
print()
for p in (1e3, 1e4, 1e5):
    row = simplex_density(p)
    print(f"p = {p:>8.0f}   h = {row.h:.2e}   Vol(O) = {row.vol_orthoscheme:.5f}   density = {row.delta:.2e}")
