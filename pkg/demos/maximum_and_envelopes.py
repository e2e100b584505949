"""
The maximum of a weighted Hermite polynomial
============================================

Locate the peak of H_k(x)^2 exp(-x^2), scale it into M_k and compare it
with the two-sided bound 27/61 C_k < M_k < (2/3) C_k exp(...).
"""

import math

import numpy as np

from hermite_bounds import envelope, hermite

# The peak sits just right of the largest zero, where t(x) = H_k'/H_k
# meets the line t = x for the last time.
k = 40
report = envelope.compute_Mk(k)
print(f"k={k}: largest zero {report.x_kk:.10f}, peak at omega={report.omega:.10f}")
print(f"        omega bound {report.omega_upper:.10f}")

# M_k itself overflows a double for k around 140, so everything is kept as
# logs; the ratio to C_k is always a modest number.
print(f"ln M_k = {report.ln_Mk:.6f}, M_k/C_k = {report.ratio_Mk_Ck:.6f}")
lo, hi = envelope.theorem1_bounds(k, scaled=True)
print(f"bounds on M_k/C_k: {lo:.6f} < {report.ratio_Mk_Ck:.6f} < {hi:.3f}")

# The ratio creeps towards 0.715452 as k grows.
for kk in (10, 100, 1000, 10_000, 100_000):
    print(f"  k={kk:>6}  M_k/C_k = {envelope.compute_Mk(kk).ratio_Mk_Ck:.7f}")

# Pointwise: the weighted square stays under C_k F_k(y) G_k(y) with y = 2k - x^2.
ys = np.linspace(2.0, 2 * k - 1.5, 200)
xs = np.sqrt(2 * k - ys)
lw = hermite.log_weighted_square_grid(k, xs)
gap = [envelope.log_upper_envelope(k, float(yv)) - v for yv, v in zip(ys, lw)]
print(f"smallest log gap to the upper envelope on 200 points: {min(gap):.4f}")

# The lower envelope C_k F/G is touched near the last local maximum before
# the largest zero.
p = envelope.sharpness_point(k)
print(f"sharpness point tau={p.tau:.6f}, log margin "
      f"{p.ln_function_value - p.ln_lower_envelope:.4f}")
print(f"y(tau) = {hermite.y_of(k, p.tau):.3f} > 3 (2k)^(1/3) = {3 * (2 * k) ** (1 / 3):.3f}")
assert math.isfinite(p.tau)
