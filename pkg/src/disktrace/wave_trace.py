"""Mollified wave trace of the unit disk and its Poisson decomposition.

The trace h(t) = sum_j exp(i t sqrt(lambda_j)) over Dirichlet eigenvalues is
a distribution; everything here works with the Gaussian-damped version

    h_eps(t) = sum_{m >= 1, n >= 0} mult(n) exp(i t rho(m, n) - eps^2 rho^2 / 2),

with mult(0) = 1 and mult(n) = 2 otherwise.  Writing mult(n) = psi1(m) psi2(n)
on the integer lattice and applying Poisson summation splits h_eps into the
oscillatory integrals

    h_{k,l}(t) = int psi1(m) psi2(n) exp(i t rho - 2 pi i (k m + l n)
                                         - eps^2 rho^2 / 2) dm dn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import optimize

from . import bessel_zeros as bz
from .bounds import BoundReport, fit_power
from .errors import BudgetError, ConvergenceError, DomainError
from .length_spectrum import length

__all__ = [
    "CutoffSpec",
    "TraceSample",
    "PoissonTerm",
    "QuadSpec",
    "SmoothnessReport",
    "cutoff_eval",
    "smooth_step",
    "trace_mollified",
    "trace_values",
    "truncation_bound",
    "poisson_term",
    "poisson_table",
    "decay_scan",
    "smoothness_probe",
    "stationary_point",
]

TWO_PI = 2 * math.pi


# --- cutoffs -------------------------------------------------------------------

@dataclass(frozen=True)
class CutoffSpec:
    psi1_ramp: tuple = (0.75, 0.875)
    psi2_ramps: tuple = ((-0.25, -0.125), (0.125, 0.75))
    profile: str = "exp(-1/x) smooth step"


CUTOFFS = CutoffSpec()


def _s(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1.0 / x[pos])
    return out


def smooth_step(u):
    """C-infinity step: 0 for u <= 0, 1 for u >= 1, all derivatives flat at both ends."""
    u = np.asarray(u, dtype=float)
    a, b = _s(u), _s(1.0 - u)
    return a / (a + b)


def _ramp(x, lo, hi):
    return smooth_step((np.asarray(x, dtype=float) - lo) / (hi - lo))


def cutoff_eval(which: str, arg):
    """psi1 (0 -> 1 on [3/4, 7/8]) or psi2 (0 -> 1 on [-1/4, -1/8], 1 -> 2 on [1/8, 3/4])."""
    which = which.upper()
    if which == "PSI1":
        out = _ramp(arg, *CUTOFFS.psi1_ramp)
    elif which == "PSI2":
        (a0, a1), (b0, b1) = CUTOFFS.psi2_ramps
        out = _ramp(arg, a0, a1) + _ramp(arg, b0, b1)
    else:
        raise DomainError(f"unknown cutoff {which!r}")
    return float(out) if np.ndim(out) == 0 else out


# --- mollified trace ---------------------------------------------------------------

@dataclass(frozen=True)
class TraceSample:
    t: float
    epsilon: float
    lambda_cut: float
    value: complex
    terms_used: int
    truncation_bound: float


def truncation_bound(epsilon, lambda_cut):
    """Bound on the discarded tail sum over rho > lambda_cut.

    Weyl's law gives at most about rho/2 (+ a boundary term) eigenvalues per
    unit of rho, so the tail is below 2 e^{-eps^2 L^2/2} (1/(2 eps^2) + L).
    """
    return 2.0 * math.exp(-0.5 * (epsilon * lambda_cut) ** 2) * (
        0.5 / epsilon ** 2 + lambda_cut)


def default_cut(epsilon, budget=1e-10):
    lam = 1.0 / epsilon
    while truncation_bound(epsilon, lam) > budget:
        lam *= 1.05
    return lam


def _spectrum(lambda_cut):
    m, n, r = bz.disk_zeros(lambda_cut)
    mult = np.where(n == 0, 1.0, 2.0)
    return r, mult


def trace_values(ts, epsilon, lambda_cut=None, derivative=0, budget=1e-6):
    """h_eps (or its t-derivatives) at many t; returns (values, terms, bound)."""
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    lam = default_cut(epsilon) if lambda_cut is None else float(lambda_cut)
    bound = truncation_bound(epsilon, lam) * lam ** derivative
    if budget is not None and bound > budget:
        raise BudgetError(f"tail bound {bound:.3g} exceeds budget {budget:.3g}; "
                          f"raise lambda_cut above {lam}")
    r, mult = _spectrum(lam)
    amp = mult * np.exp(-0.5 * (epsilon * r) ** 2) * (1j * r) ** derivative
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    out = np.empty(ts.size, dtype=complex)
    for i in range(0, ts.size, 256):
        chunk = ts[i:i + 256]
        out[i:i + 256] = np.exp(1j * np.outer(chunk, r)) @ amp
    return out, int(mult.sum()), bound


def trace_mollified(t: float, epsilon: float = 0.05, lambda_cut=None,
                    budget: float | None = 1e-6) -> TraceSample:
    """Gaussian-damped trace at one t.

    >>> s = trace_mollified(0.0, 0.5)
    >>> s.value.imag == 0 and s.value.real > 0
    True
    """
    lam = default_cut(epsilon) if lambda_cut is None else float(lambda_cut)
    val, terms, bound = trace_values([t], epsilon, lam, budget=budget)
    return TraceSample(float(t), float(epsilon), lam, complex(val[0]), terms, bound)


# --- Poisson terms -----------------------------------------------------------------

@dataclass(frozen=True)
class QuadSpec:
    """Uniform tensor grid for the Poisson integrals.

    The integrand vanishes to all orders at m = 3/4 and n = -1/4 and is
    damped at large rho, so the trapezoid rule with step 1/nodes_per_unit
    is spectrally accurate; its error is the aliased far terms
    h_{k + q j, l + q j'}, estimated by comparing with the half grid.
    """

    nodes_per_unit: int = 32
    epsilon: float = 0.05
    damp_tol: float = 1e-10
    max_error: float | None = None

    @property
    def lambda_damp(self) -> float:
        return math.sqrt(2 * math.log(1 / self.damp_tol)) / self.epsilon


@dataclass(frozen=True)
class PoissonTerm:
    k: int
    l: int
    t: float
    value: complex
    est_error: float
    quad_nodes: int


@lru_cache(maxsize=4)
def _lattice(q, lam):
    """rho on the grid m = 3/4 + i/q, n = -1/4 + j/q, out to rho <= lam."""
    if q % 8:
        raise DomainError("nodes_per_unit must be a multiple of 8")
    m_all = 0.75 + np.arange(int((lam / math.pi + 2) * q)) / q
    cols = int(m_all.size)
    rows = []
    n = -0.25
    j = 0
    while True:
        n = -0.25 + j / q
        r = bz.rho_many(m_all[:cols], n)
        inside = r <= lam
        if not inside[0]:
            break
        # rho grows with n, so the m-range can only shrink
        cols = int(np.nonzero(inside)[0][-1]) + 2
        rows.append(np.where(inside, r, np.inf)[:cols])
        j += 1
    R = np.full((len(rows), m_all.size), np.inf)
    for i, row in enumerate(rows):
        R[i, :row.size] = row
    last = int(np.max(np.nonzero(np.isfinite(R).any(axis=0))[0])) + 1
    R = R[:, :last]
    m = m_all[:last]
    n = -0.25 + np.arange(len(rows)) / q
    for a in (m, n, R):
        a.setflags(write=False)
    return m, n, R


def _weights(spec):
    q = spec.nodes_per_unit
    m, n, R = _lattice(q, round(spec.lambda_damp, 9))
    ok = np.isfinite(R)
    W = np.zeros(R.shape)
    W[ok] = np.exp(-0.5 * (spec.epsilon * R[ok]) ** 2)
    W *= np.outer(cutoff_eval("PSI2", n), cutoff_eval("PSI1", m)) / q ** 2
    return m, n, np.where(ok, R, 0.0), W, int(ok.sum())


def poisson_table(ks, ls, ts, spec: QuadSpec | None = None):
    """h_{k,l}(t) for all combinations; returns (values, est_errors, nodes).

    Arrays are indexed [t, k, l].  The same grid serves every (k, l, t):
    for each t the lattice sum is E_l G E_k^T with E_k = exp(-2 pi i k m).
    """
    spec = spec or QuadSpec()
    ks = np.atleast_1d(np.asarray(ks, dtype=int))
    ls = np.atleast_1d(np.asarray(ls, dtype=int))
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    if np.any(np.abs(ts) > 7.9):
        raise DomainError("t must satisfy |t| <= 7.9")
    m, n, R, W, nodes = _weights(spec)
    Ek = np.exp(-2j * math.pi * np.outer(ks, m))
    El = np.exp(-2j * math.pi * np.outer(ls, n))
    fine = np.empty((ts.size, ks.size, ls.size), dtype=complex)
    coarse = np.empty_like(fine)
    for i, t in enumerate(ts):
        G = W * np.exp(1j * t * R)
        fine[i] = (El @ G @ Ek.T).T
        coarse[i] = 4 * (El[:, ::2] @ G[::2, ::2] @ Ek[:, ::2].T).T
    err = np.abs(fine - coarse)
    if spec.max_error is not None and np.any(err > spec.max_error):
        raise ConvergenceError("Poisson quadrature not resolved",
                               worst=float(err.max()), nodes_per_unit=spec.nodes_per_unit)
    return fine, err, nodes


def poisson_term(k: int, l: int, t: float, quad_spec: QuadSpec | None = None) -> PoissonTerm:
    vals, errs, nodes = poisson_table([k], [l], [t], quad_spec)
    return PoissonTerm(int(k), int(l), float(t), complex(vals[0, 0, 0]),
                       float(errs[0, 0, 0]), nodes)


def decay_scan(t: float, k_range, l: int = 1, quad_spec: QuadSpec | None = None,
               threshold: float = 3.0) -> BoundReport:
    """Fit |h_{k,l}(t)| ~ C (1 + k)^(-N2) and pass if N2 >= threshold."""
    ks = np.asarray(list(k_range), dtype=int)
    vals, errs, _ = poisson_table(ks, [l], [t], quad_spec)
    mags = np.abs(vals[0, :, 0])
    x = 1.0 + np.abs(ks)
    p, c = fit_power(x, mags)
    return BoundReport(
        bound_id="POISSON_DECAY", grid=x.tolist(), measured=mags.tolist(),
        fitted_exponent=p, fitted_constant=c, expected_exponent=-threshold,
        tolerance=0.0, one_sided=True,
        passed=bool(math.isfinite(c) and -p >= threshold),
        notes={"t": t, "l": l, "N2_eff": -p, "est_error": errs[0, :, 0].tolist()})


# --- smoothness -----------------------------------------------------------------

@dataclass
class SmoothnessReport:
    window: tuple
    eps_list: list
    maxima: list
    ratios: list
    control_window: tuple | None = None
    control_maxima: list = field(default_factory=list)
    control_ratios: list = field(default_factory=list)
    passed: bool | None = None


def _max_derivative(window, eps, step):
    ts = np.arange(window[0], window[1] + 0.5 * step, step)
    d, _, _ = trace_values(ts, eps, derivative=1)
    return float(np.max(np.abs(d)))


def smoothness_probe(window, eps_list, control_window="L41", smooth_ratio=1.5,
                     singular_ratio=2.0) -> SmoothnessReport:
    """max |h_eps'| over a window for each eps, smooth vs singular.

    A window free of lengths keeps these maxima bounded as eps shrinks
    (ratio <= ``smooth_ratio`` per step); a window around a length makes them
    blow up (ratio >= ``singular_ratio``).  The derivative is the exact
    term-by-term derivative of the damped sum, sampled at eps/8.
    """
    lo, hi = map(float, window)
    if not (2 * math.pi <= lo < hi <= 7.9 + 1e-12):
        raise DomainError("window must satisfy 2 pi <= t_lo < t_hi <= 7.9")
    eps_list = sorted((float(e) for e in eps_list), reverse=True)
    if control_window == "L41":
        c = length(4, 1)
        control_window = (c - 0.1, c + 0.1)
    step = min(eps_list) / 8
    maxima = [_max_derivative((lo, hi), e, step) for e in eps_list]
    ratios = [b / a for a, b in zip(maxima[:-1], maxima[1:])]
    report = SmoothnessReport((lo, hi), eps_list, maxima, ratios)
    if control_window is not None:
        report.control_window = tuple(control_window)
        report.control_maxima = [_max_derivative(control_window, e, step) for e in eps_list]
        report.control_ratios = [b / a for a, b in zip(report.control_maxima[:-1],
                                                       report.control_maxima[1:])]
    if len(eps_list) > 1:
        ok = all(r <= smooth_ratio for r in ratios)
        if control_window is not None:
            ok = ok and all(r >= singular_ratio for r in report.control_ratios)
        report.passed = ok
    return report


# --- critical points ------------------------------------------------------------

def stationary_point(k: int, l: int = 1, scale: float = 8000.0):
    """Point on m + n = scale where grad rho is parallel to (k, l).

    There the phase t rho - 2 pi (k m + l n) is stationary for t = L_{k,l}
    to leading order.  Returns (m, n, alpha_of(m, n)).
    """
    if not 1 <= l < k:
        raise DomainError("need 1 <= l < k")

    def f(frac):
        n = frac * scale
        g = bz.rho_grad(scale - n, n)
        return g.d_n * k - g.d_m * l

    frac = optimize.brentq(f, 1e-3, 1 - 1 / scale, xtol=1e-12)
    n = frac * scale
    m = scale - n
    return m, n, bz.alpha_of(m, n)
