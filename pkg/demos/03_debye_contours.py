"""Steepest-descent contours through z = i beta and the amplitudes a, b."""
import cmath
import math

import numpy as np

from disktrace import debye_contours as dc
from disktrace import special_functions as sf

beta = 0.3
for r in (1e-6, 1e-4, beta ** 3, 0.5, 5.0):
    s = dc.contour_sample(r, beta)
    print(f"r={r:8.2e}  zeta1={s.zeta1:.5f}  zeta2={s.zeta2:.5f}  |zeta2-Z2|={abs(s.zeta2 - s.Z2):.2e}")

# H_nu(nu sec beta) = exp(i nu (tan b - b)) a(nu, beta), with a from quadrature
for nu, b in [(10, 0.5), (50, 0.3), (200, 0.1)]:
    h = sf.hankel_eval(nu, nu / math.cos(b)).value
    a = dc.amplitude_a(nu, b)
    err = abs(h - cmath.exp(1j * nu * (math.tan(b) - b)) * a) / abs(h)
    print(f"nu={nu:4} beta={b}: relative mismatch {err:.1e}")

# the Airy model: a is close to b / (pi i)
for nu in (10, 40, 160, 640):
    p = dc.amplitude_pair(nu, 0.3)
    print(f"nu={nu:4}  |a|={abs(p.a_val):.5f}  |b/(pi i)|={abs(p.b_val) / math.pi:.5f}  diff={p.diff:.2e}")

for bid, grid in [("A_MINUS_B", {"nu": [10 * 2 ** i for i in range(7)], "beta": 0.3}),
                  ("ZETA_MINUS_Z", {"r": np.geomspace(1e-4, 0.027, 12), "beta": 0.3}),
                  ("DR_ZETA", {"r": np.geomspace(1e-7, 1e-3, 13), "beta": 0.3}),
                  ("DR_DIFF", {"r": np.geomspace(1e-3, 10, 13), "beta": 0.2})]:
    print(dc.bound_report(bid, grid).summary())

# at beta = 0.1 the nu^-1 rate only sets in once nu beta^3 is of order one
print(dc.bound_report("A_MINUS_B", {"nu": [10 * 2 ** i for i in range(7)], "beta": 0.1}).summary())
