"""Inequality evaluators, a tri-state comparison engine, and integer scanners.

Every comparison goes through the same policy: evaluate the signed margin in
binary64; if the relative margin is below FAST_REL_TOL, re-evaluate at 30
significant digits with mpmath; if even that leaves a relative margin below
STRICT_REL_TOL the verdict is Uncertain rather than a coin flip on rounding.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

import mpmath as mp
import numpy as np

FAST_REL_TOL = 1e-9
STRICT_DPS = 30
STRICT_REL_TOL = 1e-25

# Decimal literals printed in the source material for the second Smarandache
# margin function; recompute_smarandache9_constants() rebuilds them from the
# solved exponent and reports the discrepancy.
SM9_COEFF = 1.76320819   # 1 / a0
SM9_EXPONENT = 0.432852  # 1 - a0
SM9_LOG_POWER = 2.3095
SM9_RHS = 9.33


class Status(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNCERTAIN = "Uncertain"


class Precision(enum.Enum):
    FAST = "fast"
    STRICT = "strict"


@dataclass(frozen=True)
class Verdict:
    """Tri-state outcome of one inequality instance.

    margin is the signed distance from the boundary (positive = holds).
    witness is present whenever status is Fails.
    """

    status: Status
    margin: float
    precision_used: Precision
    witness: Optional[tuple] = None

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS


def decide(
    fast_margin: float,
    strict_margin_fn: Callable[[], "mp.mpf"],
    scale: float = 1.0,
    witness: Optional[tuple] = None,
) -> Verdict:
    """Turn a signed margin into a Verdict, escalating precision when needed.

    scale sets the magnitude the margin is judged relative to (use the size
    of the compared quantities when they are large).
    """
    scale = max(abs(scale), 1.0)
    if abs(fast_margin) >= FAST_REL_TOL * scale:
        status = Status.HOLDS if fast_margin > 0 else Status.FAILS
        return Verdict(status, fast_margin,
                       Precision.FAST, witness if fast_margin <= 0 else None)
    with mp.workdps(STRICT_DPS):
        strict = strict_margin_fn()
        if strict == 0:
            # an exactly-zero margin means the sides coincide, which a
            # strict inequality definitely fails
            return Verdict(Status.FAILS, 0.0, Precision.STRICT, witness)
        if abs(strict) < STRICT_REL_TOL * scale:
            return Verdict(Status.UNCERTAIN, float(strict),
                           Precision.STRICT, witness)
        status = Status.HOLDS if strict > 0 else Status.FAILS
        return Verdict(status, float(strict),
                       Precision.STRICT, witness if strict <= 0 else None)


# ---------------------------------------------------------------------------
# pointwise evaluators


def kourbatov_bound(p: float) -> float:
    """(ln p)^2 - ln p - 1, the master upper bound on the gap after p.

    Valid as a proven gap bound only from p = 29 on; smaller inputs are
    legal here so callers can probe the function itself.
    """
    if p < 2:
        raise ValueError(f"kourbatov_bound requires p >= 2, got {p}")
    lp = math.log(p)
    return lp * lp - lp - 1.0


def andrica_check(p: int, q: int) -> Verdict:
    """Holds iff sqrt(q) - sqrt(p) < 1 for the consecutive pair (p, q)."""
    _require_pair(p, q)
    fast = 1.0 - (math.sqrt(q) - math.sqrt(p))
    return decide(fast, lambda: 1 - (mp.sqrt(q) - mp.sqrt(p)), witness=(p, q))


def firoozbakht_check(n: int, p: int, q: int) -> Verdict:
    """Holds iff q^(1/(n+1)) < p^(1/n), decided as n*ln q < (n+1)*ln p."""
    _require_pair(p, q)
    if n < 1:
        raise ValueError("prime index must be >= 1")
    lhs = n * math.log(q)
    rhs = (n + 1) * math.log(p)
    return decide(
        rhs - lhs,
        lambda: (n + 1) * mp.log(p) - n * mp.log(q),
        scale=max(lhs, rhs),
        witness=(n, p, q),
    )


def log_sq_vs_two_sqrt(x: float) -> float:
    """2*sqrt(x) - (ln x)^2 + 1; positive where the squared log stays under
    the Andrica-style bound."""
    if x <= 0:
        raise ValueError(f"requires x > 0, got {x}")
    return 2.0 * math.sqrt(x) - math.log(x) ** 2 + 1.0


def smarandache9_margin(x: float) -> float:
    """1.76320819 * x^0.432852 - (ln x)^2, the critical-exponent margin."""
    if x <= 0:
        raise ValueError(f"requires x > 0, got {x}")
    return SM9_COEFF * x**SM9_EXPONENT - math.log(x) ** 2


def recompute_smarandache9_constants(a0: float) -> dict:
    """Rebuild the printed constants 1/a0 and 1-a0 from a solved a0 and
    report how far the printed decimals sit from the recomputed values."""
    coeff = 1.0 / a0
    expo = 1.0 - a0
    return {
        "coeff_recomputed": coeff,
        "coeff_printed": SM9_COEFF,
        "coeff_discrepancy": coeff - SM9_COEFF,
        "exponent_recomputed": expo,
        "exponent_printed": SM9_EXPONENT,
        "exponent_discrepancy": expo - SM9_EXPONENT,
    }


def _require_pair(p: int, q: int) -> None:
    if q <= p or p < 2:
        raise ValueError(f"({p}, {q}) is not an ascending prime pair")


# ---------------------------------------------------------------------------
# predicate catalog for integer crossover scans


@dataclass(frozen=True)
class Predicate:
    """A named integer inequality: holds at n iff the signed margin > 0."""

    id: str
    description: str
    fast: Callable[[np.ndarray], np.ndarray]   # vectorized margin
    strict: Callable[[int], "mp.mpf"]          # one-point high-precision margin

    def verdict_at(self, n: int) -> Verdict:
        fast = float(self.fast(np.array([n], dtype=np.float64))[0])
        return decide(fast, lambda: self.strict(n), witness=(n,))


def _mk_catalog() -> dict:
    preds = [
        Predicate(
            "two-n-plus-one-vs-4log2",
            "2n + 1 > 4 (ln n)^2",
            lambda n: 2.0 * n + 1.0 - 4.0 * np.log(n) ** 2,
            lambda n: 2 * n + 1 - 4 * mp.log(n) ** 2,
        ),
        Predicate(
            "sqrt-vs-2log",
            "sqrt(n) > 2 ln n",
            lambda n: np.sqrt(n) - 2.0 * np.log(n),
            lambda n: mp.sqrt(n) - 2 * mp.log(n),
        ),
        Predicate(
            "n-vs-4log2",
            "n > 4 (ln n)^2",
            lambda n: n - 4.0 * np.log(n) ** 2,
            lambda n: n - 4 * mp.log(n) ** 2,
        ),
        Predicate(
            "log2-vs-2sqrt-plus-1",
            "(ln n)^2 < 2 sqrt(n) + 1",
            lambda n: 2.0 * np.sqrt(n) + 1.0 - np.log(n) ** 2,
            lambda n: 2 * mp.sqrt(n) + 1 - mp.log(n) ** 2,
        ),
        Predicate(
            "n-over-logpow-vs-9.33",
            f"n / (ln n)^{SM9_LOG_POWER} > {SM9_RHS}",
            lambda n: n / np.log(n) ** SM9_LOG_POWER - SM9_RHS,
            lambda n: n / mp.log(n) ** mp.mpf(str(SM9_LOG_POWER))
            - mp.mpf(str(SM9_RHS)),
        ),
    ]
    return {p.id: p for p in preds}


PREDICATES = _mk_catalog()


@dataclass(frozen=True)
class Sequence:
    """A named real sequence over the integers, for monotonicity scans."""

    id: str
    description: str
    fast: Callable[[np.ndarray], np.ndarray]
    strict: Callable[[int], "mp.mpf"]


def _mk_sequences() -> dict:
    seqs = [
        Sequence(
            "sqrt-over-log-squared",
            "sqrt(n) / (ln n)^2",
            lambda n: np.sqrt(n) / np.log(n) ** 2,
            lambda n: mp.sqrt(n) / mp.log(n) ** 2,
        ),
    ]
    return {s.id: s for s in seqs}


SEQUENCES = _mk_sequences()


# ---------------------------------------------------------------------------
# integer scanners


class NoCrossoverError(Exception):
    """The predicate never stabilizes to true within the scanned window."""


@dataclass(frozen=True)
class CrossoverResult:
    """Least threshold from which a predicate holds through the window end."""

    predicate_id: str
    threshold: int
    verified_through: int
    pre_threshold_failure: Optional[int]


def _resolve_predicate(predicate) -> Predicate:
    if isinstance(predicate, Predicate):
        return predicate
    try:
        return PREDICATES[predicate]
    except KeyError:
        raise KeyError(
            f"unknown predicate {predicate!r}; known: {sorted(PREDICATES)}"
        ) from None


def crossover_scan(predicate, lo: int, hi: int) -> CrossoverResult:
    """Find the least t in [lo, hi] with the predicate true on all of [t, hi].

    hi is inclusive.  Margins too close to zero for binary64 are settled at
    strict precision point by point.
    """
    pred = _resolve_predicate(predicate)
    if lo < 2 or hi <= lo:
        raise ValueError(f"need 2 <= lo < hi, got [{lo}, {hi}]")
    ns = np.arange(lo, hi + 1, dtype=np.float64)
    margins = pred.fast(ns)
    holds = margins > 0.0
    near = np.abs(margins) < FAST_REL_TOL
    for i in np.flatnonzero(near):
        v = pred.verdict_at(lo + int(i))
        if v.status is Status.UNCERTAIN:
            raise NoCrossoverError(
                f"{pred.id}: undecidable margin at n={lo + int(i)}"
            )
        holds[i] = v.holds
    failures = np.flatnonzero(~holds)
    if failures.size == 0:
        threshold = lo
        pre = None
    else:
        last_fail = lo + int(failures[-1])
        if last_fail == hi:
            raise NoCrossoverError(
                f"{pred.id}: still failing at the window end {hi}"
            )
        threshold = last_fail + 1
        pre = last_fail
    return CrossoverResult(
        predicate_id=pred.id,
        threshold=threshold,
        verified_through=hi,
        pre_threshold_failure=pre,
    )


def monotone_scan(sequence, lo: int, hi: int) -> Verdict:
    """Holds iff seq(n+1) > seq(n) for every n in [lo, hi - 1]."""
    if isinstance(sequence, str):
        try:
            sequence = SEQUENCES[sequence]
        except KeyError:
            raise KeyError(
                f"unknown sequence {sequence!r}; known: {sorted(SEQUENCES)}"
            ) from None
    if lo < 2 or hi <= lo:
        raise ValueError(f"need 2 <= lo < hi, got [{lo}, {hi}]")
    ns = np.arange(lo, hi + 1, dtype=np.float64)
    vals = sequence.fast(ns)
    diffs = np.diff(vals)
    min_i = int(np.argmin(diffs))
    worst = float(diffs[min_i])
    scale = float(max(abs(vals[min_i]), abs(vals[min_i + 1])))
    bad = np.flatnonzero(diffs <= FAST_REL_TOL * max(scale, 1.0))
    for i in bad:
        n = lo + int(i)
        v = decide(
            float(diffs[i]),
            lambda n=n: sequence.strict(n + 1) - sequence.strict(n),
            scale=scale,
            witness=(n,),
        )
        if v.status is not Status.HOLDS:
            return Verdict(v.status, v.margin, v.precision_used, (n,))
    return Verdict(Status.HOLDS, worst, Precision.FAST)
