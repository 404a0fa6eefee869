"""Crossover thresholds for the auxiliary inequalities, and the series
approximation of the prime-counting function versus exact counts.
"""

from primegaps import bounds, panaitopol as pt

print("== crossover thresholds on [2, 10^4] ==")
for pid in sorted(bounds.PREDICATES):
    r = bounds.crossover_scan(pid, 2, 10**4)
    pred = bounds.PREDICATES[pid]
    print(f"{pred.description:32s} holds from n = {r.threshold}"
          + (f" (last failure at {r.pre_threshold_failure})"
             if r.pre_threshold_failure else ""))

v = bounds.monotone_scan("sqrt-over-log-squared", 190, 10**5)
print(f"\nsqrt(n)/(ln n)^2 strictly increasing on [190, 1e5]: "
      f"{v.status.value} (worst step {v.margin:.2e})")

print("\n== exact expansion coefficients ==")
print(list(pt.coefficients(8).k))

print("\n== pi(x) approximation vs exact counts ==")
print(f"{'x':>12} {'terms':>5} {'approx':>14} {'exact':>10} {'rel_error':>10}")
for row in pt.error_table([10**5, 10**6, 10**7], [0, 2, 4]):
    print(f"{row.x:>12} {row.terms:>5} {row.approx:>14.1f} "
          f"{row.exact:>10} {row.rel_error:>10.2e}")
