"""Lengths of the periodic billiard orbits in the unit disk.

An orbit with k reflections winding l times around the centre is an
inscribed k-gon (star polygon when l > 1) of length L = 2k sin(pi l / k).
For fixed l these lengths increase in k and accumulate at 2 pi l.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["LengthEntry", "length", "enumerate_lengths", "critical_point",
           "cluster_gap", "DEFAULT_K_CAP", "CLUSTER_TOL"]

DEFAULT_K_CAP = 10 ** 4
CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class LengthEntry:
    k: int
    l: int
    length: float
    is_near_cluster: bool = False


def _check(k, l):
    if int(k) != k or int(l) != l:
        raise DomainError(f"k and l must be integers, got ({k!r}, {l!r})")
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if l == 0:
        raise DomainError("winding l must be nonzero")


def length(k: int, l: int) -> float:
    """L_{k,l} = 2k sin(pi l / k); negative windings fold onto |l|."""
    _check(k, l)
    l = abs(l)
    return 2 * k * math.sin(math.pi * l / k)


def cluster_gap(k: int) -> float:
    """2 pi - L_{k,1}."""
    return 2 * math.pi - length(k, 1)


def enumerate_lengths(t_max: float, k_cap: int = DEFAULT_K_CAP) -> list[LengthEntry]:
    """All L_{k,l} <= t_max with 1 <= l <= k/2 and k <= k_cap, ascending.

    Ties are broken by (l, k).  Since L_{k,l} >= 4l on that range, only
    l <= t_max / 4 can contribute, and for each l the lengths grow in k, so
    the loop stops at the first overshoot or at ``k_cap``.
    """
    if not t_max > 0:
        raise DomainError("t_max must be positive")
    if k_cap < 2:
        raise DomainError("k_cap must be >= 2")
    out = []
    for l in range(1, int(t_max // 4) + 1):
        for k in range(2 * l, k_cap + 1):
            L = length(k, l)
            if L > t_max:
                break
            out.append(LengthEntry(k, l, L, abs(L - 2 * math.pi * l) <= CLUSTER_TOL))
    out.sort(key=lambda e: (e.length, e.l, e.k))
    return out


def critical_point(k: int, l: int) -> tuple[float, float]:
    """(alpha, t) = (pi l / k, L_{k,l}) where the Poisson phase is stationary."""
    _check(k, l)
    if not 1 <= l < k:
        raise DomainError(f"need 1 <= l < k, got ({k}, {l})")
    return math.pi * l / k, length(k, l)
