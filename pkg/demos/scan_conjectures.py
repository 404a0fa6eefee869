"""Walk through the headline conjecture scans at desk scale.

Every check here reports over a finite range only: a green result means
"no violation below the limit", never a proof.
"""

from primegaps import conjectures as cj

LIMIT = 10**6

print("== interval conjectures ==")
for name, rep in [
    ("Legendre", cj.check_legendre(10**3)),
    ("Oppermann", cj.check_oppermann(10**3)),
    ("Brocard", cj.check_brocard(500)),
]:
    print(f"{name:10s} {rep.status.value:14s} checked={rep.checked_count} "
          f"({rep.duration:.2f} s)")

print(f"\n== gap bounds for p < {LIMIT} ==")
rep = cj.check_gap_bounds(LIMIT)
print(f"status {rep.status.value}, {rep.checked_count} instances, "
      f"{rep.skipped_count} below the p=29 validity floor")
rec = rep.extremes["max_cramer_ratio"]
print(f"largest gap/(ln p)^2 ratio: {rec.cramer_ratio:.4f} at p={rec.p} "
      f"(gap {rec.gap}) -- stays below 1")
rec = rep.extremes["max_andrica"]
print(f"largest sqrt(q)-sqrt(p): {rec.andrica:.4f} at ({rec.p}, {rec.q})")

print(f"\n== Smarandache family for p < {LIMIT} ==")
print("ratio q/p <= 5/3:", cj.check_smarandache_ratio(LIMIT).status.value,
      "(max exactly 5/3 at (3,5))")
print("q^0.5 - p^0.5 < 1:", cj.check_smarandache_B(LIMIT, 0.5).status.value)
for k in (2, 3, 10):
    print(f"q^(1/{k}) - p^(1/{k}) < 2/{k}:",
          cj.check_smarandache_C(LIMIT, k).status.value)

w = cj.find_smarandache_D_counterexample(0.4, 1)
print(f"\nthe 1/n variant fails for constant a=0.4 already at n={w.n}: "
      f"pair ({w.p}, {w.q}), value {w.value:.4f} >= 1/{w.n}")
