"""Steepest-descent contours through the saddle z = i beta of the Hankel
integral, their cubic model, and the amplitudes a(nu, beta), b(nu, beta).

Along the contour, zeta = z - i beta solves

    i tan(beta) (cosh zeta - 1) + (sinh zeta - zeta) = -r,      r > 0,

and the cubic model Z solves  i tan(beta) Z^2 / 2 + Z^3 / 6 = -r.  Branch 1
leaves the saddle into Re < 0, branch 2 into Re > 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bounds import BoundReport, check_grid, fit_power, judge
from .errors import ConvergenceError, DomainError
from .special_functions import airy_values

__all__ = [
    "ContourSample",
    "AmplitudePair",
    "solve_zeta",
    "solve_Z",
    "zeta_path",
    "Z_path",
    "dzeta_dr",
    "dZ_dr",
    "contour_sample",
    "amplitude_a",
    "amplitude_b",
    "amplitude_pair",
    "bound_report",
    "BOUND_IDS",
]

BOUND_IDS = ("A_MINUS_B", "ZETA_MINUS_Z", "DR_ZETA", "DR_DIFF")

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)


@dataclass(frozen=True)
class ContourSample:
    r: float
    beta: float
    zeta1: complex
    zeta2: complex
    Z1: complex
    Z2: complex


@dataclass(frozen=True)
class AmplitudePair:
    nu: float
    beta: float
    a_val: complex
    b_val: complex
    diff: float


def _check(branch, beta):
    if branch not in (1, 2):
        raise DomainError(f"branch must be 1 or 2, got {branch!r}")
    if not 0 < beta <= math.pi / 4 + 1e-15:
        raise DomainError(f"beta must lie in (0, pi/4], got {beta!r}")


# --- exact phase ---------------------------------------------------------------

def _sinh_minus(z):
    """sinh z - z without cancellation for small |z|."""
    if abs(z) > 0.5:
        return cmath.sinh(z) - z
    z2 = z * z
    term = z * z2 / 6
    total = term
    for k in range(2, 10):
        term *= z2 / ((2 * k) * (2 * k + 1))
        total += term
    return total


def _phi(z, t):
    s = cmath.sinh(z / 2)
    return 2j * t * s * s + _sinh_minus(z)


def _dphi(z, t):
    s = cmath.sinh(z / 2)
    return 1j * t * cmath.sinh(z) + 2 * s * s


def dzeta_dr(zeta, beta):
    """d zeta / dr = -cos(beta) / (2 sinh(zeta/2) sinh(zeta/2 + i beta))."""
    return -math.cos(beta) / (2 * cmath.sinh(zeta / 2) * cmath.sinh(zeta / 2 + 1j * beta))


def _newton(f, df, z, r, tol=1e-15, maxit=40):
    for _ in range(maxit):
        d = (f(z) + r) / df(z)
        z -= d
        if abs(d) <= tol * (1 + abs(z)):
            return z, True
    return z, False


# --- cubic model ---------------------------------------------------------------

def _Phi(z, t):
    return 0.5j * t * z * z + z ** 3 / 6


def _dPhi(z, t):
    return 1j * t * z + 0.5 * z * z


def dZ_dr(Z, beta):
    return -1 / _dPhi(Z, math.tan(beta))


def _cubic_root(branch, r, t):
    roots = np.roots([1 / 6, 0.5j * t, 0.0, r])
    first = roots[np.argmin(roots.real)]
    if branch == 1:
        z = complex(first)
    else:
        rest = [q for q in roots if q is not first and q != first]
        z = complex(max(rest, key=lambda q: q.imag))
    z, _ = _newton(lambda q: _Phi(q, t), lambda q: _dPhi(q, t), z, r)
    return z


def solve_Z(branch: int, r: float, beta: float) -> complex:
    """Root of the cubic model on the requested steepest-descent branch."""
    _check(branch, beta)
    if r < 0:
        raise DomainError("r must be >= 0")
    if r == 0:
        return 0j
    t = math.tan(beta)
    z = _cubic_root(branch, r, t)
    res = abs(_Phi(z, t) + r)
    if res > 1e-12 * (1 + r):
        raise ConvergenceError("cubic root residual too large", r=r, beta=beta,
                               residual=res)
    return z


def Z_path(branch, rs, beta):
    return np.array([solve_Z(branch, float(r), beta) for r in rs])


# --- exact contour by continuation -------------------------------------------------

def zeta_path(branch: int, rs, beta: float):
    """zeta_branch(r, beta) at every r in ``rs`` (any order, all > 0).

    Newton continuation in r from a point deep inside r << beta^3, seeded by
    the cubic model; each step is checked for continuity
    |zeta_new - zeta_old| <= 2 |dr| |d zeta/dr| before it is accepted.
    """
    _check(branch, beta)
    rs = np.asarray(rs, dtype=float)
    if np.any(rs <= 0):
        raise DomainError("r must be > 0 (zeta = 0 at r = 0)")
    t = math.tan(beta)
    f = lambda z: _phi(z, t)
    df = lambda z: _dphi(z, t)
    order = np.argsort(rs)
    out = np.empty(rs.size, dtype=complex)
    r_cur = min(rs[order[0]], beta ** 3) * 1e-3
    z_cur, ok = _newton(f, df, _cubic_root(branch, r_cur, t), r_cur)
    if not ok:
        raise ConvergenceError("seed failed", branch=branch, beta=beta)
    sign = 1 if branch == 2 else -1
    for idx in order:
        target = rs[idx]
        while r_cur < target:
            r_next = min(target, 2 * r_cur)
            while True:
                dr = r_next - r_cur
                slope = dzeta_dr(z_cur, beta)
                z_new, ok = _newton(f, df, z_cur + slope * dr, r_next)
                jump = abs(z_new - z_cur)
                if (ok and jump <= 2 * dr * abs(slope) + 1e-13
                        and sign * z_new.real >= -1e-14):
                    break
                r_next = r_cur + dr / 2
                if dr < 1e-15 * (1 + r_cur):
                    raise ConvergenceError("lost the contour branch", branch=branch,
                                           beta=beta, r=r_cur, zeta=z_cur)
            r_cur, z_cur = r_next, z_new
        res = abs(f(z_cur) + target)
        if res > 1e-12 * (1 + target):
            raise ConvergenceError("contour residual too large", branch=branch,
                                   beta=beta, r=target, residual=res)
        out[idx] = z_cur
    return out


def solve_zeta(branch: int, r: float, beta: float) -> complex:
    """Point zeta_branch(r, beta) of the steepest-descent contour."""
    if r == 0:
        _check(branch, beta)
        return 0j
    return complex(zeta_path(branch, [r], beta)[0])


def contour_sample(r: float, beta: float) -> ContourSample:
    return ContourSample(r, beta, solve_zeta(1, r, beta), solve_zeta(2, r, beta),
                         solve_Z(1, r, beta), solve_Z(2, r, beta))


# --- amplitudes ----------------------------------------------------------------

def _panel_edges(nu, beta):
    s_max = math.sqrt(45.0 / nu)
    s_b = beta ** 1.5  # r = beta^3 separates the sqrt(r) and r^(1/3) regimes
    edges = [0.0]
    s = s_b / 8
    while s < s_max:
        edges.append(s)
        s *= 2
    edges.append(s_max)
    width = 0.5 / math.sqrt(nu)
    fine = [0.0]
    for a, b in zip(edges[:-1], edges[1:]):
        k = max(1, math.ceil((b - a) / width))
        fine.extend(a + (b - a) * np.arange(1, k + 1) / k)
    return np.array(fine)


def _a_quadrature(nu, beta, edges):
    a, b = edges[:-1, None], edges[1:, None]
    s = (0.5 * (b - a) * _GL_NODES + 0.5 * (a + b)).ravel()
    w = (0.5 * (b - a) * _GL_WEIGHTS).ravel()
    r = s * s
    z1 = zeta_path(1, r, beta)
    z2 = zeta_path(2, r, beta)
    d = np.array([dzeta_dr(q2, beta) - dzeta_dr(q1, beta) for q1, q2 in zip(z1, z2)])
    total = np.sum(w * np.exp(-nu * r) * 2 * s * d)
    return total / (math.pi * 1j)


def amplitude_a(nu: float, beta: float, rtol: float = 1e-8) -> complex:
    """a(nu, beta) = (1/pi i) int_0^inf e^{-nu r} (zeta_2' - zeta_1') dr.

    The substitution r = s^2 removes the r^(-1/2) endpoint singularity;
    composite Gauss-Legendre panels are halved until two levels agree.
    """
    if nu < 0.5:
        raise DomainError("nu must be >= 1/2")
    _check(1, beta)
    edges = _panel_edges(nu, beta)
    prev = _a_quadrature(nu, beta, edges)
    for _ in range(4):
        mid = 0.5 * (edges[:-1] + edges[1:])
        edges = np.sort(np.concatenate((edges, mid)))
        val = _a_quadrature(nu, beta, edges)
        if abs(val - prev) <= rtol * abs(val):
            return complex(val)
        prev = val
    raise ConvergenceError("a(nu, beta) quadrature did not converge", nu=nu,
                           beta=beta, change=abs(val - prev) / abs(val))


def amplitude_b(nu: float, beta: float) -> complex:
    """b(nu, beta) = exp(-i nu tan^3(beta)/3) nu^(-1/3) A(nu^(2/3) tan^2(beta) / 2).

    Note the normalisation: a(nu, beta) is close to b(nu, beta) / (pi i).
    """
    if nu <= 0:
        raise DomainError("nu must be positive")
    t = math.tan(beta)
    y = 0.5 * nu ** (2 / 3) * t * t
    a_y, _ = airy_values(y)
    return complex(cmath.exp(-1j * nu * t ** 3 / 3) * nu ** (-1 / 3) * a_y[0])


def amplitude_pair(nu: float, beta: float) -> AmplitudePair:
    a = amplitude_a(nu, beta)
    b = amplitude_b(nu, beta)
    return AmplitudePair(nu, beta, a, b, abs(a - b / (math.pi * 1j)))


# --- bound harness ---------------------------------------------------------------

def _contour_pairs(rs, beta):
    z = [zeta_path(j, rs, beta) for j in (1, 2)]
    Z = [Z_path(j, rs, beta) for j in (1, 2)]
    return z, Z


def bound_report(bound_id: str, grid_spec: dict, tolerance: float = 0.15) -> BoundReport:
    """Measure one contour/amplitude bound and fit its log-log exponent.

    ``grid_spec`` holds ``beta`` and either ``nu`` (A_MINUS_B) or ``r``
    (the contour bounds).  Contour quantities are maximised over both
    branches.
    """
    if bound_id not in BOUND_IDS:
        raise DomainError(f"unknown bound {bound_id!r}")
    beta = float(grid_spec["beta"])
    one_sided = False
    notes = {}
    if bound_id == "A_MINUS_B":
        x = np.asarray(grid_spec["nu"], dtype=float)
        check_grid(x)
        measured = np.array([amplitude_pair(nu, beta).diff for nu in x])
        expected = -1.0
    else:
        x = np.asarray(grid_spec["r"], dtype=float)
        check_grid(x)
        z, Z = _contour_pairs(x, beta)
        if bound_id == "ZETA_MINUS_Z":
            measured = np.maximum(abs(z[0] - Z[0]), abs(z[1] - Z[1]))
            expected = 1.5
        elif bound_id == "DR_ZETA":
            measured = np.array([max(abs(dzeta_dr(p, beta)), abs(dzeta_dr(q, beta)))
                                 for p, q in zip(z[0], z[1])])
            expected = -0.5
        else:
            measured = np.array([
                max(abs(dzeta_dr(z[j][i], beta) - dZ_dr(Z[j][i], beta)) for j in (0, 1))
                for i in range(x.size)])
            expected = 0.0
            one_sided = True
            notes["sup"] = float(measured.max())
    p, c = fit_power(x, measured)
    passed = judge(p, expected, tolerance, one_sided, c)
    if bound_id == "DR_DIFF":
        # the bound is an absolute constant: every sample must sit below
        # the fitted level's envelope and no growth may be visible
        passed = passed and notes["sup"] <= max(c * x.max() ** max(p, 0), 1.0)
    return BoundReport(bound_id, [float(v) for v in x], measured.tolist(), p, c,
                       expected, tolerance, one_sided, passed, notes)
