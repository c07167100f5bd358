"""Mollified wave trace, its Poisson terms and the right side of 2 pi.

Builds the rho lattice for the Poisson integrals once (roughly 15 s).
"""
import math

import numpy as np

from disktrace import wave_trace as wt
from disktrace.length_spectrum import length

# spikes at orbit lengths, quiet in between
for t in (length(3, 1), 5.5, length(4, 1), 7.0):
    s = wt.trace_mollified(t, 0.02, 400)
    print(f"t={t:.4f}  |h_eps|={abs(s.value):9.3f}  ({s.terms_used} terms)")

t = 2 * math.pi + 0.05
ks = np.arange(-8, 9)
vals, errs, nodes = wt.poisson_table(ks, ks, [t])
tr = wt.trace_mollified(t, 0.05).value
print(f"{nodes} quadrature nodes; max est. error {errs.max():.1e}")
print(f"sum of |k|,|l| <= 8 terms: {vals[0].sum():.5f}   trace: {tr:.5f}")

rep = wt.decay_scan(t, range(4, 13), 1)
print(rep.summary())
print("|h_{k,1}|:", np.round(rep.measured, 5))

rep = wt.smoothness_probe((2 * math.pi + 0.02, 7.9), [0.1, 0.05, 0.025])
print("max |h_eps'| right of 2 pi:", np.round(rep.maxima, 1), "ratios", np.round(rep.ratios, 2))
print("max |h_eps'| around L_{4,1}:", np.round(rep.control_maxima, 1), "ratios",
      np.round(rep.control_ratios, 2))

for k in (5, 6, 8):
    m, n, a = wt.stationary_point(k)
    print(f"k={k}: stationary point (m, n)=({m:.2f}, {n:.1f}), alpha - pi/k = {a - math.pi / k:+.1e}")
