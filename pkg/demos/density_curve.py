#!/usr/bin/env python3
"""Plot the packing density as a function of the truncation parameter.

Writes density_curve.csv and density_curve.png next to this script.  The
curve rises almost vertically out of p = 6, peaks at p_opt = 6.13499 with
density 0.86338, and decays like 1/p; both the peak and the reference bound
for ball/horoball packings are marked.
"""

import pathlib

import numpy as np

from hyperball import find_optimal_p, simplex_density

HERE = pathlib.Path(__file__).resolve().parent
BALL_PACKING_BOUND = 0.85328

# 1) Sample the curve.  A plain linear grid is fine to the right of the
#    peak; near p = 6 a few extra points resolve the steep rise.
p_dense = np.linspace(6.0005, 6.5, 220)
p_tail = np.linspace(6.5, 30.0, 280)
ps = np.concatenate([p_dense, p_tail[1:]])
deltas = np.array([simplex_density(float(p)).delta for p in ps])

# 2) The optimum, for the marker.
opt = find_optimal_p(tol=1e-7)
print(f"peak: p = {opt.p_opt:.5f}, density = {opt.delta_opt:.5f}")

# 3) CSV artifact.
csv_path = HERE / "density_curve.csv"
with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
    fh.write("p,density\n")
    for p, d in zip(ps, deltas):
        fh.write(f"{p:.6f},{d:.6f}\n")
print(f"wrote {csv_path} ({len(ps)} rows)")

# 4) PNG artifact.
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

fig, ax = plt.subplots(figsize=(7.0, 4.2), dpi=150)
ax.plot(ps, deltas, lw=1.6, label="hyperball packing density")
ax.axhline(
    BALL_PACKING_BOUND,
    color="tab:red",
    ls="--",
    lw=1.0,
    label=f"ball/horoball bound {BALL_PACKING_BOUND}",
)
ax.plot([opt.p_opt], [opt.delta_opt], "o", ms=5, color="tab:orange")
ax.annotate(
    f"({opt.p_opt:.5f}, {opt.delta_opt:.5f})",
    xy=(opt.p_opt, opt.delta_opt),
    xytext=(opt.p_opt + 1.0, opt.delta_opt - 0.02),
    fontsize=9,
)
ax.set_xlabel("truncation parameter p")
ax.set_ylabel("density")
ax.set_xlim(6.0, 30.0)
ax.set_ylim(0.0, 1.0)
ax.grid(alpha=0.3)
ax.legend(loc="upper right", fontsize=9)
fig.tight_layout()
png_path = HERE / "density_curve.png"
fig.savefig(png_path)
print(f"wrote {png_path}")
