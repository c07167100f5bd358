"""Log-log fitting harness used by every numerical bound check."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GridError

MIN_POINTS = 5
MIN_PER_DECADE = 3.0


@dataclass
class BoundReport:
    """Outcome of measuring one quantity against a power-law envelope.

    ``one_sided`` reports only test ``fitted_exponent <= expected + tolerance``
    (an upper bound that the measured quantity may beat); two-sided reports
    require the exponent to match within ``tolerance``.
    """

    bound_id: str
    grid: list
    measured: list
    fitted_exponent: float
    fitted_constant: float
    expected_exponent: float
    tolerance: float
    one_sided: bool = False
    passed: bool = False
    notes: dict = field(default_factory=dict)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        rel = "<=" if self.one_sided else "=="
        return (f"{self.bound_id}: exponent {self.fitted_exponent:+.3f} "
                f"{rel} {self.expected_exponent:+.3f} +/- {self.tolerance} "
                f"(C = {self.fitted_constant:.3g}) {verdict}")


def check_grid(x, min_points=MIN_POINTS, min_per_decade=MIN_PER_DECADE):
    x = np.asarray(x, dtype=float)
    if x.size < min_points:
        raise GridError(f"need at least {min_points} grid points, got {x.size}")
    if np.any(x <= 0):
        raise GridError("log-log grid needs positive abscissae")
    decades = math.log10(x.max() / x.min())
    if decades > 0 and x.size / decades < min_per_decade:
        raise GridError(f"{x.size / decades:.2f} points per decade "
                        f"(< {min_per_decade})")


def fit_power(x, y):
    """Least-squares fit y ~ C x^p in log-log coordinates; returns (p, C)."""
    lx = np.log(np.asarray(x, dtype=float))
    ly = np.log(np.asarray(y, dtype=float))
    p, c = np.polyfit(lx, ly, 1)
    return float(p), float(math.exp(c))


def judge(fitted, expected, tol, one_sided, constant):
    if not math.isfinite(constant) or not math.isfinite(fitted):
        return False
    if one_sided:
        return fitted <= expected + tol
    return abs(fitted - expected) <= tol
