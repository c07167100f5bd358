"""Periodic billiard orbits of the disk and the gap (2 pi, 8)."""
import math

from disktrace import length_spectrum as ls

for e in ls.enumerate_lengths(6.2)[:8]:
    print(f"k={e.k:3} l={e.l}  L={e.length:.6f}")

# L_{k,1} -> 2 pi from below like pi^3 / (3 k^2)
for k in (10, 100, 1000):
    print(f"k={k:5}: 2 pi - L = {ls.cluster_gap(k):.3e}  vs  pi^3/(3k^2) = {math.pi ** 3 / (3 * k * k):.3e}")

entries = ls.enumerate_lengths(8, k_cap=10 ** 4)
inside = [e for e in entries if 2 * math.pi < e.length < 8]
print(f"{len(entries)} lengths up to 8, {len(inside)} of them in (2 pi, 8)")
print("first length past the cluster:", [e for e in entries if e.length > 2 * math.pi][0])

for k, l in [(3, 1), (5, 2), (8, 1)]:
    a, t = ls.critical_point(k, l)
    print(f"(k, l)=({k}, {l}): alpha = {a:.5f}, t = {t:.5f}")
