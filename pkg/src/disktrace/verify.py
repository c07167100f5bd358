"""Verification suites behind ``disktrace verify``.

Each check is one numbered acceptance row; suites group them:

    contours    3 Wronskian, 4 amplitude identity, 5 a - b decay, 6 contour comparison
    symbols     1 zero oracle, 2 phase residual, 7 gradient law, 8 transition bound,
                9 symbol envelopes
    decay       10 Poisson identity, 11 Poisson term decay
    smoothness  12 smoothness proxy, 13 length spectrum gap
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from . import bessel_zeros as bz
from . import debye_contours as dc
from . import length_spectrum as ls
from . import special_functions as sf
from . import wave_trace as wt

SUITES = ("contours", "symbols", "decay", "smoothness")

ZERO_M = range(1, 51)
ZERO_N = range(0, 21)
FRACTIONAL_M = (0.5, 1.25, 7.75)
FRACTIONAL_N = (-0.25, 0.3, 12.6)
WRONSKIAN_Y = (0, 0.5, 1, 2, 5, 10, 20, 50)
AMPLITUDE_NU = (10, 50, 200)
AMPLITUDE_BETA = (0.1, 0.3, 0.5, 0.7)
DECAY_NU = tuple(10 * 2 ** i for i in range(7))
RAY_M = (50, 100, 200, 400, 800, 1600)
SYMBOL_GRIDS = {
    "SECTOR": {"m": [1, 2, 4, 8, 16, 32, 64, 128], "n": [0, 1, 2, 4, 8, 16, 32, 64, 128]},
    "TRANSITION": {"m": [1, 2, 4, 8, 16], "n": [160, 320, 640, 1280, 2560]},
}
TRANSITION_N = (50, 100, 200, 500, 1000, 2000)
POISSON_T = (2 * math.pi + 0.05, 2 * math.pi + 0.09)
POISSON_EPS = 0.05
DECAY_T = 2 * math.pi + 0.05
DECAY_K = range(4, 13)
DECAY_NODES = 64
SMOOTH_WINDOW = (2 * math.pi + 0.02, 7.9)
SMOOTH_EPS = (0.1, 0.05, 0.025)


@dataclass(frozen=True)
class Check:
    suite: str
    check_id: str
    measured: float
    threshold: float
    passed: bool

    def __post_init__(self):
        object.__setattr__(self, "measured", float(self.measured))
        object.__setattr__(self, "passed", bool(self.passed))


# --- contours ---------------------------------------------------------------

def check_wronskian():
    err = max(abs(sf.airy_A(y).wronskian - sf.AIRY_WRONSKIAN) for y in WRONSKIAN_Y)
    return [Check("contours", "C3_wronskian", err, 1e-8, err <= 1e-8)]


def check_amplitude_identity():
    worst = 0.0
    for nu in AMPLITUDE_NU:
        for beta in AMPLITUDE_BETA:
            h = sf.hankel_eval(nu, nu / math.cos(beta)).value
            a = dc.amplitude_a(nu, beta)
            worst = max(worst, abs(h - cmath.exp(1j * nu * (math.tan(beta) - beta)) * a) / abs(h))
    return [Check("contours", "C4_amplitude_identity", worst, 1e-6, worst <= 1e-6)]


def check_a_minus_b():
    out = []
    for beta in (0.1, 0.3):
        rep = dc.bound_report("A_MINUS_B", {"nu": DECAY_NU, "beta": beta})
        out.append(Check("contours", f"C5_a_minus_b_beta{beta}", rep.fitted_exponent,
                         -1.0, rep.passed))
    return out


def check_contour_comparison():
    beta = 0.3
    rep = dc.bound_report("ZETA_MINUS_Z", {"r": np.geomspace(1e-4, beta ** 3, 12),
                                           "beta": beta})
    return [Check("contours", "C6_zeta_minus_Z", rep.fitted_exponent, 1.5, rep.passed)]


# --- symbols -----------------------------------------------------------------

def check_zero_oracle():
    worst = 0.0
    for n in ZERO_N:
        r = bz.rho_many(np.array(ZERO_M, dtype=float), n)
        worst = max(worst, float(np.max(np.abs(special.jv(n, r)))))
    return [Check("symbols", "C1_zero_oracle", worst, 1e-9, worst <= 1e-9)]


def phase_residual(m, n):
    r = bz.rho(m, n)
    return abs(sf.theta_phase(n, r).theta - (m * math.pi - math.pi / 2))


def check_phase_residual():
    pts = [(m, n) for n in ZERO_N for m in ZERO_M]
    pts += [(m, n) for m in FRACTIONAL_M for n in FRACTIONAL_N]
    worst = max(phase_residual(m, n) for m, n in pts)
    return [Check("symbols", "C2_phase_residual", worst, 1e-10, worst <= 1e-10)]


def gradient_defect(m, n):
    g = bz.rho_grad(m, n)
    a = bz.asymptotic_grad(bz.alpha_of(m, n))
    return (m + n) * max(abs(g.d_m - a.d_m), abs(g.d_n - a.d_n))


def check_gradient_law():
    x = np.array([2.0 * m for m in RAY_M])
    y = np.array([gradient_defect(m, m) for m in RAY_M])
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return [Check("symbols", "C7_gradient_law_growth", float(slope), 0.15, slope <= 0.15)]


def check_transition():
    law = []
    for m in (1, 2, 5):
        n = 2000
        r = bz.rho(m, n)
        beta = math.acos(n / r)
        law.append((bz.rho_grad(m, n).d_n - 1) * 6 / beta ** 2)
    dev = max(abs(v - 1) for v in law)
    low = math.inf
    for n in TRANSITION_N:
        for m in np.geomspace(0.75, n / 10, 6):
            low = min(low, (bz.rho_grad(m, n).d_n - 1) * n ** (2 / 3) * m ** (-2 / 3))
    return [Check("symbols", "C8_beta2_law", dev, 0.25, dev <= 0.25),
            Check("symbols", "C8_lower_bound", low, 0.05, low >= 0.05)]


def check_symbols():
    out = []
    for region, grid in SYMBOL_GRIDS.items():
        for j in range(3):
            for k in range(3 - j):
                rep = bz.symbol_check(j, k, region, grid)
                out.append(Check("symbols", f"C9_{region.lower()}_{j}{k}",
                                 rep.fitted_exponent, 0.15, rep.passed))
    return out


# --- decay -------------------------------------------------------------------

def check_poisson_identity():
    ks = np.arange(-8, 9)
    vals, _, _ = wt.poisson_table(ks, ks, POISSON_T, wt.QuadSpec(epsilon=POISSON_EPS))
    out = []
    for i, t in enumerate(POISSON_T):
        tr = wt.trace_mollified(t, POISSON_EPS).value
        rel = abs(vals[i].sum() - tr) / abs(tr)
        out.append(Check("decay", f"C10_poisson_identity_t{t - 2 * math.pi:.2f}",
                         rel, 0.05, rel <= 0.05))
    return out


def check_poisson_decay():
    rep = wt.decay_scan(DECAY_T, DECAY_K, 1, wt.QuadSpec(nodes_per_unit=DECAY_NODES))
    n2 = rep.notes["N2_eff"]
    return [Check("decay", "C11_poisson_decay", n2, 3.0, rep.passed)]


# --- smoothness --------------------------------------------------------------

def check_smoothness():
    rep = wt.smoothness_probe(SMOOTH_WINDOW, SMOOTH_EPS)
    out = [Check("smoothness", f"C12_window_ratio_{i}", r, 1.5, r <= 1.5)
           for i, r in enumerate(rep.ratios)]
    out += [Check("smoothness", f"C12_control_ratio_{i}", r, 2.0, r >= 2.0)
            for i, r in enumerate(rep.control_ratios)]
    return out


def check_length_gap():
    entries = ls.enumerate_lengths(8, 10 ** 4)
    inside = sum(2 * math.pi < e.length < 8 for e in entries)
    mismatch = sum(e.length != 2 * e.k * math.sin(math.pi / e.k)
                   for e in entries if e.l == 1)
    return [Check("smoothness", "C13_gap_count", inside, 0, inside == 0),
            Check("smoothness", "C13_formula_mismatch", mismatch, 0, mismatch == 0)]


_SUITE_CHECKS = {
    "contours": (check_wronskian, check_amplitude_identity, check_a_minus_b,
                 check_contour_comparison),
    "symbols": (check_zero_oracle, check_phase_residual, check_gradient_law,
                check_transition, check_symbols),
    "decay": (check_poisson_identity, check_poisson_decay),
    "smoothness": (check_smoothness, check_length_gap),
}


def run_suite(name):
    if name == "all":
        return [c for s in SUITES for c in run_suite(s)]
    return [c for fn in _SUITE_CHECKS[name] for c in fn()]
