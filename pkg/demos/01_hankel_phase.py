"""Continuous phase of H_n(x) and the Airy-type function A(y)."""
import math

import numpy as np

from disktrace import special_functions as sf

# H_n(x) starts out pointing at -i and winds counterclockwise
for n in (0, 2.5, 10):
    for x in (1e-3, 1.0, 10.0, 30.0):
        p = sf.theta_phase(n, x)
        print(f"n={n:5}  x={x:7}  theta={p.theta:+.6f}  theta'={p.dtheta_dx:.3e}")

# half-integer order: |H_{1/2}|^2 = 2/(pi x), so the phase moves at unit speed
print("theta'(1/2, x):", [sf.theta_x_derivative(0.5, x) for x in (0.3, 3.0, 30.0)])

# the Airy-type function: Wronskian 2 pi, slow algebraic decay of |A|
for y in (0, 1, 5, 20, 50, 100):
    a = sf.airy_A(y)
    print(f"y={y:4}  |A|={abs(a.a_val):.5f}  |A|(1+y)^(1/4)={abs(a.a_val) * (1 + y) ** 0.25:.4f}"
          f"  B/sqrt(1+y)={a.b_val / math.sqrt(1 + y):.4f}  W-2pi={a.wronskian - 2 * math.pi:+.1e}")

ys = np.linspace(-5, 5, 11)
vals, _ = sf.airy_values(ys)
print("A on [-5, 5]:", np.round(vals, 3))
