#!/usr/bin/env python3
"""Geometry of the regular truncated tetrahedron, from Gram data alone.

No vertex ever gets coordinates here.  The Coxeter-Schlafli matrix of the
characteristic orthoscheme is inverted to the vertex Gram matrix; distances,
the truncation triangle, and all areas follow from inner products.  Along
the way the script rediscovers two closed forms numerically: the triangle
angles (pi/3, pi/2, pi/p) and the surface identity 8*pi - 2*Omega.
"""

import math

from hyperball import (
    coxeter_matrix,
    hyperball_height,
    tetra_geometry,
    truncation_triangle,
    vertex_gram_matrix,
)

P = 7.0

# 1) The two matrices.  The vertex at index 3 is outer (positive self
#    inner product), which is exactly what makes the truncation possible.
C = coxeter_matrix(P)
H = vertex_gram_matrix(P)
print(f"Coxeter-Schlafli matrix at p = {P:g}:")
for row in C:
    print("   " + "  ".join(f"{v:+8.5f}" for v in row))
print("vertex Gram matrix (its inverse):")
for row in H:
    print("   " + "  ".join(f"{v:+8.5f}" for v in row))
print(f"signs of the diagonal: {['+' if d > 0 else '-' for d in H.diagonal()]}")

# 2) The hyperball height: distance from the last proper vertex to the
#    polar (truncation) plane of the outer one.
print()
print(f"h({P:g}) = {hyperball_height(P):.5f}")

# 3) The truncation triangle.  Its angles are not assumed anywhere in the
#    package; they come out of the law of cosines on Gram distances.
tri = truncation_triangle(P)
print()
print(f"triangle angles : {tri.angle_q0:.9f}  {tri.angle_q1:.9f}  {tri.angle_q2:.9f}")
print(f"compare         : {math.pi/3:.9f}  {math.pi/2:.9f}  {math.pi/P:.9f}  (pi/3, pi/2, pi/p)")
print(f"area by defect  : {tri.area:.9f}")
print(f"pi/6 - pi/p     : {math.pi/6 - math.pi/P:.9f}")

# 4) The full report, including the surface-area identity.  Four hexagon
#    faces of area pi each plus four triangle faces add up to
#    8*pi - 2*Omega, where Omega collects the dihedral angles along the
#    six truncated edges.
print()
for p in (6.5, 7.0, 10.0, 100.0):
    geo = tetra_geometry(p)
    lhs = geo.surface_area
    rhs = 8.0 * math.pi - 2.0 * geo.omega
    print(
        f"p = {p:>6.1f}   surface = {lhs:.9f}   8pi - 2*Omega = {rhs:.9f}"
        f"   |diff| = {abs(lhs - rhs):.1e}"
    )

# 5) Degeneration towards p = 6: the outer vertex approaches the absolute,
#    the truncation triangle collapses, and the height blows up.
print()
print(f"{'p':>10}  {'h(p)':>10}  {'tri area':>12}  {'H[3,3]':>10}")
for p in (6.5, 6.1, 6.01, 6.001, 6.0001):
    H = vertex_gram_matrix(p)
    print(
        f"{p:>10}  {hyperball_height(p):>10.5f}"
        f"  {truncation_triangle(p).area:>12.3e}  {H[3, 3]:>10.3e}"
    )
