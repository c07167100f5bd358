"""Real-index Bessel zeros rho(m, n) defined by theta(rho, n) = m pi - pi/2.

For integer m >= 1 and n >= 0 this is the m-th positive zero of J_n; the
same equation extends rho to the real quadrant m >= 1/2, n >= -1/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize

from . import special_functions as sf
from .bounds import BoundReport, check_grid, fit_power, judge
from .errors import ConvergenceError, DomainError

__all__ = [
    "ZeroPoint",
    "GradPair",
    "rho",
    "rho_many",
    "zero_point",
    "rho_grad",
    "alpha_of",
    "asymptotic_grad",
    "symbol_check",
    "disk_zeros",
    "SECTOR_SPLIT",
]

# c0 in the sector/transition split m >= c0 n vs m <= c0 n.
SECTOR_SPLIT = 0.1

_PHASE_STEP = 0.25
_RESIDUAL = 1e-13


@dataclass(frozen=True)
class ZeroPoint:
    m: float
    n: float
    rho: float
    beta: float
    alpha: float


@dataclass(frozen=True)
class GradPair:
    d_m: float
    d_n: float


def _check(m, n):
    m = np.asarray(m, dtype=float)
    if np.any(m < 0.5) or n < -0.25 or np.any(m + n <= 0):
        raise DomainError(f"rho needs m >= 1/2, n >= -1/4, m + n > 0 "
                          f"(got m={m!r}, n={n!r})")


def _seed(m, n):
    return n + 2.0 * (m + m ** (2 / 3) * max(n, 1.0) ** (1 / 3)) + 2.0


def _solve_targets(n, targets):
    """x with theta(x, n) = targets, for one order and sorted targets."""
    targets = np.asarray(targets, dtype=float)
    t_max = float(targets.max())
    tol = _RESIDUAL * np.maximum(1.0, np.abs(targets))
    x_stop = _seed(t_max / math.pi + 0.5, n)
    while True:
        xs, theta, raw, rate = sf.phase_track(n, x_stop, _PHASE_STEP)
        if theta[-1] > t_max:
            break
        x_stop *= 1.5
    i = np.searchsorted(theta, targets)
    if np.any(i == 0):
        raise ConvergenceError("target phase below anchor", order=n)
    lo, hi = xs[i - 1], xs[i]
    th_lo, raw_lo = theta[i - 1], raw[i - 1]
    th_hi = theta[i]
    x = lo + (hi - lo) * (targets - th_lo) / (th_hi - th_lo)
    done = np.zeros(x.shape, dtype=bool)
    for _ in range(60):
        j, y = sf.hankel_arrays(n, x)
        th = th_lo + np.mod(np.arctan2(y, j) - raw_lo, sf.TWO_PI)
        f = th - targets
        below = f < 0
        lo = np.where(below, x, lo)
        th_lo = np.where(below, th, th_lo)
        raw_lo = np.where(below, np.arctan2(y, j), raw_lo)
        hi = np.where(below, hi, x)
        done |= np.abs(f) <= tol
        if np.all(done):
            break
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            rate = 2.0 / (np.pi * x * (j * j + y * y))
            step = np.where(rate > 0, f / rate, np.inf)
        newton = x - step
        inside = (newton > lo) & (newton < hi)
        x = np.where(done, x, np.where(inside, newton, 0.5 * (lo + hi)))
        # a collapsed bracket means the root is pinned to machine precision
        done |= (hi - lo) <= 4 * np.spacing(hi)
    else:
        raise ConvergenceError("rho iteration did not settle", order=n)
    return x


def rho(m: float, n: float) -> float:
    """rho(m, n): the root of theta(x, n) = m pi - pi/2.

    >>> round(rho(1, 0), 12)
    2.404825557696
    """
    _check(m, n)
    return float(_solve_targets(float(n), [math.pi * (m - 0.5)])[0])


def rho_many(ms, n: float):
    """rho(m, n) for an array of m at one n (one phase table for all)."""
    ms = np.asarray(ms, dtype=float)
    _check(ms, n)
    order = np.argsort(ms)
    out = np.empty_like(ms)
    out[order] = _solve_targets(float(n), math.pi * (ms[order] - 0.5))
    return out


def alpha_of(m: float, n: float) -> float:
    """alpha in (0, pi) with cos a / (sin a - a cos a) = n / (pi m).

    For n > 0 this is tan a - a = pi m / n with a < pi/2; it passes
    continuously through a = pi/2 at n = 0.
    """
    if m <= 0 or n < -0.25 or m + n <= 0:
        raise DomainError(f"alpha_of needs m > 0, n >= -1/4 (got {m}, {n})")
    if n == 0:
        return math.pi / 2

    def s(a):  # sin a - a cos a, without cancellation near 0
        if a < 0.1:
            a2 = a * a
            return a * a2 * (1 / 3 - a2 * (1 / 30 - a2 * (1 / 840 - a2 / 45360)))
        return math.sin(a) - a * math.cos(a)

    f = lambda a: math.pi * m * math.cos(a) - n * s(a)
    lo = 1e-300
    if n > 0:
        # tan a - a >= a^3/3 brackets the root from above
        hi = min(math.pi / 2, (3 * math.pi * m / n) ** (1 / 3))
    else:
        lo, hi = math.pi / 2, math.pi
    if f(hi) == 0:
        return hi
    return optimize.brentq(f, lo, hi, xtol=1e-16, rtol=4 * np.finfo(float).eps)


def asymptotic_grad(alpha: float) -> GradPair:
    s = math.sin(alpha)
    return GradPair(math.pi / s, alpha / s)


def zero_point(m: float, n: float) -> ZeroPoint:
    r = rho(m, n)
    return ZeroPoint(float(m), float(n), r, math.acos(n / r), alpha_of(m, n))


def _theta_n(x, n):
    h = 1e-4 * (1.0 + abs(n))
    d = sf.raw_phase(n + h, x) - sf.raw_phase(n - h, x)
    return float(sf.wrap_angle(d)) / (2 * h)


def rho_grad(m: float, n: float) -> GradPair:
    """(d rho/dm, d rho/dn) by implicit differentiation of the phase equation."""
    r = rho(m, n)
    rate = float(sf.phase_rate(n, r))
    return GradPair(math.pi / rate, -_theta_n(r, n) / rate)


# --- symbol envelopes --------------------------------------------------------

def _fd(f, m, n, j, k):
    """Central finite difference of f at (m, n), order (j, k) with j + k <= 2."""
    hm = 0.01 * m
    hn = min(0.01 * (m + n), 0.5 * (n + 0.25)) if k else 0.0
    if (j, k) == (0, 0):
        return f(m, n)
    if (j, k) == (1, 0):
        return (f(m + hm, n) - f(m - hm, n)) / (2 * hm)
    if (j, k) == (0, 1):
        return (f(m, n + hn) - f(m, n - hn)) / (2 * hn)
    if (j, k) == (2, 0):
        return (f(m + hm, n) - 2 * f(m, n) + f(m - hm, n)) / hm ** 2
    if (j, k) == (0, 2):
        return (f(m, n + hn) - 2 * f(m, n) + f(m, n - hn)) / hn ** 2
    if (j, k) == (1, 1):
        return (f(m + hm, n + hn) - f(m + hm, n - hn)
                - f(m - hm, n + hn) + f(m - hm, n - hn)) / (4 * hm * hn)
    raise DomainError(f"derivative order ({j}, {k}) not supported")


def symbol_check(j: int, k: int, region: str, grid_spec: dict,
                 tolerance: float = 0.15) -> BoundReport:
    """Bound |d_m^j d_n^k f| by its symbol envelope on a grid.

    SECTOR (m >= c0 n): f = rho, envelope (m + n)^(1-j-k).
    TRANSITION (m <= c0 n): f = rho - n, envelope m^(2/3-j) (m + n)^(1/3-k).
    The ratio |derivative| / envelope must not grow: along every ray
    m/n = const of the grid with three or more points its log-log slope
    against m + n is held to <= ``tolerance`` (worst ray reported).
    """
    if j + k > 2 or j < 0 or k < 0:
        raise DomainError("only derivative orders j + k <= 2 are checked")
    region = region.upper()
    pts = [(float(m), float(n)) for m in grid_spec["m"] for n in grid_spec["n"]
           if m >= 0.75 and n >= -0.25]
    if region == "SECTOR":
        pts = [(m, n) for m, n in pts if m >= SECTOR_SPLIT * n]
        f = rho
        env = lambda m, n: (m + n) ** (1 - j - k)
    elif region == "TRANSITION":
        pts = [(m, n) for m, n in pts if m <= SECTOR_SPLIT * n]
        f = lambda m, n: rho(m, n) - n
        env = lambda m, n: m ** (2 / 3 - j) * (m + n) ** (1 / 3 - k)
    else:
        raise DomainError(f"unknown region {region!r}")
    scale = np.array([m + n for m, n in pts])
    check_grid(np.unique(scale))
    ratio = np.array([abs(_fd(f, m, n, j, k)) / env(m, n) for m, n in pts])
    # growth is measured along rays m/n = const; near-zero derivative values
    # say nothing about an upper envelope and are dropped
    keep = ratio >= 1e-2 * ratio.max()
    rays = {}
    for (m, n), s, q, ok in zip(pts, scale, ratio, keep):
        if ok:
            rays.setdefault(round(math.log2(m / n), 6) if n else math.inf, []).append((s, q))
    slopes = [fit_power(*zip(*ray))[0] for ray in rays.values() if len(ray) >= 3]
    slope = max(slopes) if slopes else 0.0
    const = float(ratio.max())
    return BoundReport(
        bound_id=f"SYMBOL_{region}_{j}{k}", grid=pts, measured=ratio.tolist(),
        fitted_exponent=slope, fitted_constant=const, expected_exponent=0.0,
        tolerance=tolerance, one_sided=True,
        passed=judge(slope, 0.0, tolerance, True, const))


# --- the Dirichlet spectrum of the unit disk --------------------------------

@lru_cache(maxsize=8)
def _disk_zeros(rho_max: float):
    ms, ns, rs = [], [], []
    n = 0
    while True:
        first = rho(1, n)
        if first > rho_max:
            break
        # zeros of J_n sit at theta = m pi - pi/2 and theta' < 1 + o(1)
        top = int((rho_max - n) / math.pi * 1.5) + 2
        m = np.arange(1, top + 1, dtype=float)
        r = rho_many(m, n)
        keep = r <= rho_max
        ms.append(m[keep])
        ns.append(np.full(keep.sum(), n, dtype=float))
        rs.append(r[keep])
        n += 1
    m = np.concatenate(ms)
    n = np.concatenate(ns)
    r = np.concatenate(rs)
    for a in (m, n, r):
        a.setflags(write=False)
    return m, n, r


def disk_zeros(rho_max: float):
    """All (m, n, rho(m, n)) with integer m >= 1, n >= 0 and rho <= rho_max.

    Arrays are ordered by n, then m, and are read-only (shared cache).
    """
    if rho_max <= 0:
        raise DomainError("rho_max must be positive")
    return _disk_zeros(float(rho_max))
