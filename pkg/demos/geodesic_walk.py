"""Interpolation is an honest geodesic, numerically.

Between any two barcodes at finite distance eps there is a family U_t
with U_0 = F, U_eps = G, moving at unit speed: d(U_s, U_t) <= |s - t|,
and in particular d(F, U_t) <= t.  This script builds a random pair,
walks the path, and prints the measured distances next to their bounds.
"""

import random

from sheafdist import Barcode, GradedInterval, Interval, distance_with_matching, interpolate

rng = random.Random(20)


def jitter(g: GradedInterval) -> GradedInterval:
    iv = g.interval
    d1, d2 = rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)
    return GradedInterval(Interval(iv.lo + d1, max(iv.lo + d1 + 0.25, iv.hi + d2),
                                   iv.lo_closed, iv.hi_closed), g.degree)


F = Barcode((
    GradedInterval(Interval.closed(0, 2), 0),
    GradedInterval(Interval.open(1, 4), 0),
    GradedInterval(Interval.right_open(0, 1.5), 0),
    GradedInterval(Interval.left_open(3, 6), 1),
))
G = Barcode(tuple(jitter(g) for g in F) + (GradedInterval(Interval.right_open(5, 5.75), 0),))

eps, matching = distance_with_matching(F, G)
print(f"d(F, G) = {eps:.4f}\n")
print(f"{'t':>6} {'d(F,U_t)':>10} {'bound':>7} {'d(U_t,G)':>10} {'bound':>7}")
steps = [eps * k / 8 for k in range(9)]
points = [interpolate(F, G, matching, t) for t in steps]
for t, U in zip(steps, points):
    df = distance_with_matching(F, U)[0]
    dg = distance_with_matching(U, G)[0]
    print(f"{t:6.3f} {df:10.4f} {t:7.3f} {dg:10.4f} {eps - t:7.3f}")

print("\nunit speed between consecutive samples:")
for (s, Us), (t, Ut) in zip(zip(steps, points), list(zip(steps, points))[1:]):
    d = distance_with_matching(Us, Ut)[0]
    print(f"  d(U_{s:.3f}, U_{t:.3f}) = {d:.4f}  <=  {t - s:.4f}")

print("\nendpoints are recovered exactly:",
      interpolate(F, G, matching, 0) == F and interpolate(F, G, matching, eps) == G)
