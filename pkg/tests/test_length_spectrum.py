import math

import pytest

from disktrace import length_spectrum as ls
from disktrace.errors import DomainError


def test_basic_lengths():
    assert ls.length(2, 1) == 4
    assert ls.length(4, 2) == 8
    assert ls.length(6, 3) == pytest.approx(12)
    assert ls.length(3, 1) == pytest.approx(3 * math.sqrt(3))
    assert ls.length(5, -2) == ls.length(5, 2)


def test_domain():
    with pytest.raises(DomainError):
        ls.length(1, 1)
    with pytest.raises(DomainError):
        ls.length(4, 0)
    with pytest.raises(DomainError):
        ls.critical_point(3, 3)


def test_monotone_below_cluster():
    prev = 0
    for k in range(2, 3000):
        L = ls.length(k, 1)
        assert prev < L < 2 * math.pi
        prev = L


def test_cluster_rate():
    for k in (10, 37, 100, 1000):
        assert 2 * math.pi - ls.length(k, 1) <= math.pi ** 3 / (3 * k * k) * 1.01


def test_enumerate_short_list():
    e = ls.enumerate_lengths(6.2)
    assert [(x.k, x.l) for x in e[:3]] == [(2, 1), (3, 1), (4, 1)]
    assert e[2].length == pytest.approx(4 * math.sqrt(2))


def test_enumerate_up_to_eight():
    e = ls.enumerate_lengths(8, k_cap=100)
    pairs = {(x.k, x.l) for x in e}
    assert (4, 2) in pairs and all((k, 1) in pairs for k in range(2, 101))
    lengths = [x.length for x in e]
    assert lengths == sorted(lengths)


def test_enumerate_matches_brute_force():
    t_max, cap = 13.0, 300
    brute = sorted(((2 * k * math.sin(math.pi * l / k), l, k)
                    for l in range(1, int(t_max / 4) + 1)
                    for k in range(2, cap + 1)
                    if 2 * l <= k and 2 * k * math.sin(math.pi * l / k) <= t_max))
    got = [(x.length, x.l, x.k) for x in ls.enumerate_lengths(t_max, cap)]
    assert got == brute


def test_near_cluster_flag():
    e = ls.enumerate_lengths(7, k_cap=10 ** 4)
    flagged = [x for x in e if x.is_near_cluster]
    assert flagged and all(abs(x.length - 2 * math.pi) <= 1e-6 for x in flagged)


def test_gap_below_eight():
    e = ls.enumerate_lengths(8, 10 ** 4)
    assert not [x for x in e if 2 * math.pi + 1e-9 < x.length < 8 - 1e-9]


def test_critical_point():
    a, t = ls.critical_point(3, 1)
    assert a == pytest.approx(math.pi / 3) and t == pytest.approx(3 * math.sqrt(3))
    assert ls.critical_point(2, 1) == (math.pi / 2, 4.0)
    assert ls.critical_point(10 ** 6, 1)[1] == pytest.approx(2 * math.pi, abs=1e-10)
