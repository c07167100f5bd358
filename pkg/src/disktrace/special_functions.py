"""Hankel functions of real order, their continuous phase, and the Airy-type
function A(y) solving A'' + 2yA = 0.

J_n and Y_n come from the AMOS routines behind ``scipy.special.hankel1``.
The phase theta(x, n) = arg H_n(x) is the branch that starts in the fourth
quadrant as x -> 0+ and increases with x at the rate 2 / (pi x |H_n(x)|^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from .errors import ConvergenceError, DomainError

__all__ = [
    "HankelValue",
    "PhasePoint",
    "AiryValue",
    "hankel_eval",
    "theta_phase",
    "theta_x_derivative",
    "airy_A",
    "airy_B",
    "airy_values",
    "hankel_arrays",
    "raw_phase",
    "phase_rate",
    "phase_anchor",
    "phase_track",
    "wrap_angle",
    "AIRY_A0",
    "AIRY_DA0",
    "AIRY_WRONSKIAN",
]

TWO_PI = 2.0 * math.pi

# Below this argument (or below x = n for n >= 1) H_n(x) is in the open fourth
# quadrant, so the principal argument already is the continuous phase.
ANCHOR_X = 1e-3

AIRY_A0 = complex(math.gamma(1 / 3) * 6 ** (-2 / 3) * (3 + 1j * math.sqrt(3)))
AIRY_DA0 = complex(math.gamma(2 / 3) * 6 ** (-1 / 3) * (-3 + 1j * math.sqrt(3)))
AIRY_WRONSKIAN = TWO_PI
AIRY_RANGE = (-5.0, 100.0)


@dataclass(frozen=True)
class HankelValue:
    order: float
    argument: float
    j: float
    y: float
    modulus: float
    raw_arg: float

    @property
    def value(self) -> complex:
        return complex(self.j, self.y)


@dataclass(frozen=True)
class PhasePoint:
    order: float
    argument: float
    theta: float
    dtheta_dx: float


@dataclass(frozen=True)
class AiryValue:
    y: float
    a_val: complex
    a_deriv: complex
    b_val: float
    wronskian: float


def _check_domain(order, x):
    if not np.all(np.isfinite(order)) or np.any(np.asarray(order) < -0.5):
        raise DomainError(f"order must be >= -1/2, got {order!r}")
    if not np.all(np.isfinite(x)) or np.any(np.asarray(x) <= 0):
        raise DomainError(f"argument must be > 0, got {x!r}")


def wrap_angle(a):
    """Reduce angles to (-pi, pi]."""
    return np.pi - np.mod(np.pi - np.asarray(a, dtype=float), TWO_PI)


def hankel_arrays(order, x):
    """Vectorised (J_n(x), Y_n(x)).

    Where Y_n overflows (x far below the turning point x = n) the pair
    (0, -inf) is returned; that limit has the correct argument -pi/2.
    """
    order = np.asarray(order, dtype=float)
    x = np.asarray(x, dtype=float)
    h = special.hankel1(order, x)
    j = np.real(h)
    y = np.imag(h)
    bad = ~(np.isfinite(j) & np.isfinite(y))
    if np.any(bad):
        ob, xb = np.broadcast_arrays(order, x)
        if np.any(xb[bad] >= ob[bad]):
            raise ConvergenceError("Hankel evaluation failed", order=order, x=x)
        j = np.where(bad, 0.0, j)
        y = np.where(bad, -np.inf, y)
    return j, y


def raw_phase(order, x):
    """Principal argument atan2(Y_n, J_n)."""
    j, y = hankel_arrays(order, x)
    return np.arctan2(y, j)


def phase_rate(order, x):
    """d theta / dx = 2 / (pi x |H_n(x)|^2), vectorised."""
    j, y = hankel_arrays(order, x)
    x = np.asarray(x, dtype=float)
    # divide by |H| twice: |H|^2 overflows long before the rate underflows
    mod = np.hypot(j, y)
    return 2.0 / (np.pi * x) / mod / mod


def hankel_eval(order: float, x: float) -> HankelValue:
    """J, Y, |H| and the principal argument of H_order(x) at one point."""
    _check_domain(order, x)
    h = complex(special.hankel1(float(order), float(x)))
    if not (math.isfinite(h.real) and math.isfinite(h.imag)):
        raise ConvergenceError("H_n(x) not representable in double precision",
                               order=order, x=x)
    return HankelValue(float(order), float(x), h.real, h.imag, abs(h),
                       math.atan2(h.imag, h.real))


def theta_x_derivative(order: float, x: float) -> float:
    _check_domain(order, x)
    return float(phase_rate(float(order), float(x)))


def phase_anchor(order: float) -> float:
    """Point at which theta equals the principal argument.

    For n > 0 the first zero y_n of Y_n exceeds n, so H_n(n) is still in the
    fourth quadrant.
    """
    return float(order) if order >= 1.0 else ANCHOR_X


def _theta_scalar(n: float, x: float) -> float:
    xa = phase_anchor(n)
    raw = float(raw_phase(n, x))
    if x <= xa:
        return raw
    rate = lambda s: float(phase_rate(n, s))
    pts = None
    bump = xa + 3.0 * max(n, 1.0) ** (1 / 3)
    if bump < x:
        pts = [bump]
    inc, err = integrate.quad(rate, xa, x, points=pts, limit=1000,
                              epsabs=1e-7, epsrel=1e-9)
    approx = float(raw_phase(n, xa)) + inc
    theta = raw + TWO_PI * round((approx - raw) / TWO_PI)
    if abs(theta - approx) > 0.5:
        raise ConvergenceError("phase branch ambiguous", order=n, x=x,
                               integral=approx, principal=raw)
    return theta


def theta_phase(order: float, x: float) -> PhasePoint:
    """Continuous phase theta(x, n) and its x-derivative.

    >>> round(theta_phase(0.5, 1.0).theta, 12)   # H_{1/2}(x) ~ -i e^{ix}
    -0.570796326795
    """
    _check_domain(order, x)
    n, x = float(order), float(x)
    return PhasePoint(n, x, _theta_scalar(n, x), float(phase_rate(n, x)))


def phase_track(order: float, x_stop: float, step: float = 0.25):
    """Tabulate theta from the anchor up to ``x_stop`` (step ``step``, with a
    geometric head on (anchor, 1) when the anchor is near 0).

    Returns ``(x, theta, raw, rate)``.  Successive increments are read off
    the principal argument modulo 2 pi and cross-checked against the
    trapezoid of the exact rate, so a missed turn raises instead of
    silently shifting the branch.
    """
    n = float(order)
    xa = phase_anchor(n)
    start = xa
    head = np.empty(0)
    if xa < 1.0:
        # the rate behaves like 1/(x log^2 x) near 0: grade geometrically
        head = np.geomspace(xa, 1.0, 25)[:-1]
        start = 1.0
    count = max(2, int(math.ceil((x_stop - start) / step)) + 1)
    xs = np.concatenate((head, start + step * np.arange(count)))
    j, y = hankel_arrays(n, xs)
    raw = np.arctan2(y, j)
    with np.errstate(over="ignore"):
        rate = 2.0 / (np.pi * xs * (j * j + y * y))
    inc = np.mod(np.diff(raw), TWO_PI)
    trap = 0.5 * np.diff(xs) * (rate[1:] + rate[:-1])
    if np.any(np.abs(inc - trap) > 0.5):
        bad = int(np.argmax(np.abs(inc - trap)))
        raise ConvergenceError("phase grid too coarse", order=n, x=float(xs[bad]))
    theta = np.concatenate(([raw[0]], raw[0] + np.cumsum(inc)))
    return xs, theta, raw, rate


# --- Airy-type function -----------------------------------------------------

def _airy_rhs(y, s):
    return np.array([s[2], s[3], -2.0 * y * s[0], -2.0 * y * s[1]])


def _airy_branch(ys):
    """Integrate from 0 outward to the (same-sign, sorted by |y|) points."""
    s0 = np.array([AIRY_A0.real, AIRY_A0.imag, AIRY_DA0.real, AIRY_DA0.imag])
    end = ys[np.argmax(np.abs(ys))]
    order = np.argsort(np.abs(ys))
    sol = integrate.solve_ivp(_airy_rhs, (0.0, end), s0, method="DOP853",
                              t_eval=ys[order], rtol=1e-13, atol=1e-14)
    if not sol.success:
        raise ConvergenceError("Airy integration failed", message=sol.message)
    out = np.empty((4, ys.size))
    out[:, order] = sol.y
    return out


def airy_values(y):
    """Vectorised (A(y), A'(y)) for y in the supported range."""
    y = np.atleast_1d(np.asarray(y, dtype=float))
    lo, hi = AIRY_RANGE
    if np.any(~np.isfinite(y)) or np.any(y < lo) or np.any(y > hi):
        raise DomainError(f"y must lie in [{lo}, {hi}]")
    state = np.empty((4, y.size))
    state[:, y == 0] = np.array([AIRY_A0.real, AIRY_A0.imag,
                                 AIRY_DA0.real, AIRY_DA0.imag])[:, None]
    for mask in (y > 0, y < 0):
        if np.any(mask):
            state[:, mask] = _airy_branch(y[mask])
    a = state[0] + 1j * state[1]
    da = state[2] + 1j * state[3]
    return a, da


def airy_A(y: float) -> AiryValue:
    """A(y) from the ODE with A(0) = G(1/3) 6^(-2/3) (3 + i sqrt 3) and
    A'(0) = G(2/3) 6^(-1/3) (-3 + i sqrt 3)."""
    a, da = airy_values(float(y))
    a, da = complex(a[0]), complex(da[0])
    w = a.real * da.imag - da.real * a.imag
    return AiryValue(float(y), a, da, (da / a).imag, w)


def airy_B(y: float) -> float:
    """Phase derivative B(y) = Im A'(y)/A(y)."""
    a, da = airy_values(float(y))
    a, da = complex(a[0]), complex(da[0])
    if abs(a) < 1e-290:
        raise ConvergenceError("|A(y)| underflows", y=y)
    return (da / a).imag
