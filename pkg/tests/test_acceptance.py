"""Acceptance criteria 1-13, each recomputed here against its own oracle.

Every test prints one line "CRITERION <n> PASS|FAIL <detail>"; the lines are
also collected into the pytest terminal summary.

    pytest -v tests/test_acceptance.py
"""

import cmath
import math
import time

import mpmath as mp
import numpy as np
import pytest

from disktrace import bessel_zeros as bz
from disktrace import debye_contours as dc
from disktrace import length_spectrum as ls
from disktrace import special_functions as sf
from disktrace import wave_trace as wt

import conftest
import oracles

TWO_PI = 2 * math.pi


def report(n, ok, detail):
    line = f"CRITERION {n:2d} {'PASS' if ok else 'FAIL'}  {detail}"
    conftest.CRITERIA[n] = line
    print(line)
    assert ok, line


def slope(x, y):
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def test_c01_zero_oracle():
    t0 = time.perf_counter()
    zeros = {n: bz.rho_many(np.arange(1, 51), n) for n in range(21)}
    elapsed = time.perf_counter() - t0
    worst = 0.0
    for n, rs in zeros.items():
        for r in rs:
            worst = max(worst, abs(float(oracles.besselj_series(n, r))))
    report(1, worst <= 1e-9 and elapsed <= 60,
           f"max |J_n(rho)| = {worst:.2e} (<= 1e-9), zeros in {elapsed:.2f}s (<= 60s)")


def test_c02_phase_residual():
    pts = [(m, n) for n in range(21) for m in range(1, 51)]
    pts += [(m, n) for m in (0.5, 1.25, 7.75) for n in (-0.25, 0.3, 12.6)]
    worst = max(abs(sf.theta_phase(n, bz.rho(m, n)).theta - (m * math.pi - math.pi / 2))
                for m, n in pts)
    report(2, worst <= 1e-10, f"max phase residual = {worst:.2e} (<= 1e-10)")


def test_c03_wronskian():
    worst = 0.0
    for y in (0, 0.5, 1, 2, 5, 10, 20, 50):
        a = sf.airy_A(y)
        u, v = a.a_val.real, a.a_val.imag
        du, dv = a.a_deriv.real, a.a_deriv.imag
        worst = max(worst, abs(u * dv - du * v - 2 * math.pi))
    report(3, worst <= 1e-8, f"max |W - 2 pi| = {worst:.2e} (<= 1e-8)")


def test_c04_amplitude_identity():
    worst = 0.0
    for nu in (10, 50, 200):
        for beta in (0.1, 0.3, 0.5, 0.7):
            with mp.workdps(30):
                h = complex(mp.hankel1(nu, nu / mp.cos(beta)))
            a = dc.amplitude_a(nu, beta)
            worst = max(worst, abs(h - cmath.exp(1j * nu * (math.tan(beta) - beta)) * a) / abs(h))
    report(4, worst <= 1e-6, f"max relative error = {worst:.2e} (<= 1e-6)")


def test_c05_a_minus_b_decay():
    t0 = time.perf_counter()
    nus = np.array([10 * 2 ** i for i in range(7)], dtype=float)
    slopes = {}
    for beta in (0.1, 0.3):
        diffs = [abs(dc.amplitude_a(nu, beta) - dc.amplitude_b(nu, beta) / (math.pi * 1j))
                 for nu in nus]
        slopes[beta] = slope(nus, diffs)
    elapsed = time.perf_counter() - t0
    ok = all(abs(s + 1) <= 0.15 for s in slopes.values()) and elapsed <= 300
    report(5, ok, "slopes " + ", ".join(f"beta={b}: {s:+.3f}" for b, s in slopes.items())
           + f" (-1 +/- 0.15), {elapsed:.1f}s")


def test_c06_contour_comparison():
    beta = 0.3
    rs = np.geomspace(1e-4, beta ** 3, 12)
    gaps = [max(abs(dc.solve_zeta(j, r, beta) - dc.solve_Z(j, r, beta)) for j in (1, 2))
            for r in rs]
    s = slope(rs, gaps)
    report(6, abs(s - 1.5) <= 0.15, f"exponent in r = {s:.3f} (1.5 +/- 0.15)")


def test_c07_gradient_law():
    ms = np.array([50, 100, 200, 400, 800, 1600], dtype=float)
    defects = []
    for m in ms:
        g = bz.rho_grad(m, m)
        alpha = oracles.alpha_bisect(1, 1)  # tan a - a = pi on the diagonal
        s = math.sin(alpha)
        defects.append(2 * m * max(abs(g.d_m - math.pi / s), abs(g.d_n - alpha / s)))
    s = slope(2 * ms, defects)
    report(7, s <= 0.15, f"growth exponent of (m+n)|grad - asymptotic| = {s:+.3f} (<= 0.15), "
           f"max = {max(defects):.3f}")


def test_c08_transition():
    law = []
    for m in (1, 2, 5):
        n = 2000
        r = bz.rho(m, n)
        beta = math.acos(n / r)
        h = 1e-3
        dn = (bz.rho(m, n + h) - bz.rho(m, n - h)) / (2 * h)
        law.append((dn - 1) * 6 / beta ** 2)
    low = min((bz.rho_grad(m, n).d_n - 1) * n ** (2 / 3) * m ** (-2 / 3)
              for n in (50, 100, 200, 500, 1000, 2000)
              for m in np.geomspace(0.75, n / 10, 8))
    ok = all(0.75 <= v <= 1.25 for v in law) and low >= 0.05
    report(8, ok, "6(d_n rho - 1)/beta^2 = " + ", ".join(f"{v:.3f}" for v in law)
           + f" (in [0.75, 1.25]); min lower-bound ratio = {low:.3f} (>= 0.05)")


def test_c09_symbol_envelopes():
    grids = {
        "SECTOR": {"m": [1, 2, 4, 8, 16, 32, 64, 128], "n": [0, 1, 2, 4, 8, 16, 32, 64, 128]},
        "TRANSITION": {"m": [1, 2, 4, 8, 16], "n": [160, 320, 640, 1280, 2560]},
    }
    bad, worst = [], -math.inf
    for region, grid in grids.items():
        for j in range(3):
            for k in range(3 - j):
                rep = bz.symbol_check(j, k, region, grid)
                worst = max(worst, rep.fitted_exponent)
                if not (rep.passed and math.isfinite(rep.fitted_constant)):
                    bad.append(f"{region}({j},{k})")
    report(9, not bad, f"12 envelope checks, worst growth exponent {worst:+.3f} (<= 0.15)"
           + (f"; failing {bad}" if bad else ""))


def test_c10_poisson_identity():
    t0 = time.perf_counter()
    ts = (TWO_PI + 0.05, TWO_PI + 0.09)
    ks = np.arange(-8, 9)
    vals, errs, _ = wt.poisson_table(ks, ks, ts, wt.QuadSpec(epsilon=0.05))
    rels = []
    for i, t in enumerate(ts):
        tr = wt.trace_mollified(t, 0.05).value
        rels.append(abs(vals[i].sum() - tr) / abs(tr))
    elapsed = time.perf_counter() - t0
    ok = all(r <= 0.05 for r in rels) and elapsed <= 600
    report(10, ok, "relative discrepancy " + ", ".join(f"{r:.3f}" for r in rels)
           + f" (<= 0.05), {elapsed:.0f}s")


def test_c11_poisson_decay():
    ks = np.arange(4, 13)
    vals, errs, _ = wt.poisson_table(ks, [1], [TWO_PI + 0.05], wt.QuadSpec(nodes_per_unit=64))
    mags = np.abs(vals[0, :, 0])
    n2 = -slope(1 + ks, mags)
    report(11, n2 >= 3, f"fitted decay exponent N2 = {n2:.3f} (>= 3), "
           f"max quadrature error {errs.max():.1e}")


def test_c12_smoothness():
    t0 = time.perf_counter()
    rep = wt.smoothness_probe((TWO_PI + 0.02, 7.9), [0.1, 0.05, 0.025])
    elapsed = time.perf_counter() - t0
    ok = (all(r <= 1.5 for r in rep.ratios) and all(r >= 2 for r in rep.control_ratios)
          and elapsed <= 600)
    report(12, ok, "window ratios " + ", ".join(f"{r:.2f}" for r in rep.ratios)
           + " (<= 1.5); control ratios " + ", ".join(f"{r:.2f}" for r in rep.control_ratios)
           + f" (>= 2), {elapsed:.0f}s")


def test_c13_length_spectrum():
    entries = ls.enumerate_lengths(8, 10 ** 4)
    inside = [e for e in entries if TWO_PI < e.length < 8]
    mismatched = [e for e in entries if e.l == 1 and e.length != 2 * e.k * math.sin(math.pi / e.k)]
    k_seen = sorted(e.k for e in entries if e.l == 1)
    ok = not inside and not mismatched and k_seen == list(range(2, 10 ** 4 + 1))
    report(13, ok, f"{len(inside)} lengths in (2 pi, 8); {len(mismatched)} formula mismatches "
           f"over {len(k_seen)} orbits L_(k,1)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
