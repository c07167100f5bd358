"""Real-index Bessel zeros rho(m, n) and their gradient."""
import math

import numpy as np

from disktrace import bessel_zeros as bz

# integer indices are the classical zeros of J_n
print("first zeros of J_0:", bz.rho_many(np.arange(1, 6), 0))
print("rho(1/2, 0) = first zero of Y_0:", bz.rho(0.5, 0))

# but m and n can be any reals in the quadrant m >= 1/2, n >= -1/4
for m, n in [(0.5, -0.25), (1.25, 0.3), (7.75, 12.6), (100, 1000)]:
    z = bz.zero_point(m, n)
    g = bz.rho_grad(m, n)
    print(f"m={m:7} n={n:7} rho={z.rho:11.6f} beta={z.beta:.4f} alpha={z.alpha:.4f}"
          f"  grad=({g.d_m:.5f}, {g.d_n:.5f})")

# along m = n the gradient approaches (pi/sin a, a/sin a) at rate 1/(m+n)
for m in (50, 200, 800):
    g = bz.rho_grad(m, m)
    a = bz.asymptotic_grad(bz.alpha_of(m, m))
    print(f"m=n={m:4}: (m+n)|d_m - pi/sin a| = {2 * m * abs(g.d_m - a.d_m):.4f}")

# near the turning point: d_n rho - 1 ~ beta^2 / 6
for m in (1, 2, 5):
    r = bz.rho(m, 2000)
    beta = math.acos(2000 / r)
    print(f"m={m}: 6 (d_n rho - 1) / beta^2 = {(bz.rho_grad(m, 2000).d_n - 1) * 6 / beta ** 2:.4f}")

for region in ("SECTOR", "TRANSITION"):
    grid = {"m": [1, 2, 4, 8, 16], "n": [0, 1, 2, 4, 8, 16]} if region == "SECTOR" \
        else {"m": [1, 2, 4], "n": [160, 320, 640, 1280]}
    print(bz.symbol_check(1, 1, region, grid).summary())
