"""Solve q^x - p^x = 1 for consecutive prime pairs and scan for extremes.

f(x) = q^x - p^x - 1 is strictly increasing in x for q > p >= 2, so a sign
bracket pins down the unique root; bisection keeps the bracket valid
unconditionally, which Newton would not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath as mp
import numpy as np

from . import gaps
from .bounds import STRICT_DPS

X_TOL = 1e-13
MAX_ITER = 200
INITIAL_LO = 1e-3


@dataclass(frozen=True)
class ExponentSolution:
    """Root x of q^x - p^x = 1 for one consecutive pair."""

    p: int
    q: int
    x: float
    residual: float
    iterations: int
    bracket: Tuple[float, float]


def _f(x: float, p: int, q: int) -> float:
    return math.pow(q, x) - math.pow(p, x) - 1.0


def solve_exponent(p: int, q: int) -> ExponentSolution:
    """The unique x in (0, 1] with q^x - p^x = 1 for the pair (p, q)."""
    if q <= p or p < 2:
        raise ValueError(f"({p}, {q}) is not an ascending prime pair")
    if q - p == 1:
        # only (2, 3); f(1) = 0 exactly
        return ExponentSolution(p, q, 1.0, 0.0, 0, (1.0, 1.0))
    lo, hi = INITIAL_LO, 1.0
    while _f(lo, p, q) >= 0.0:
        lo /= 10.0
        if lo < 1e-30:
            raise RuntimeError(f"no sign change found for pair ({p}, {q})")
    iterations = 0
    while hi - lo > X_TOL and iterations < MAX_ITER:
        mid = 0.5 * (lo + hi)
        if _f(mid, p, q) < 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    x = 0.5 * (lo + hi)
    with mp.workdps(STRICT_DPS):
        residual = float(abs(mp.power(q, x) - mp.power(p, x) - 1))
    return ExponentSolution(p, q, x, residual, iterations, (lo, hi))


@dataclass(frozen=True)
class ScanSummary:
    pairs_scanned: int
    limit: int


def _pair_roots(limit: int):
    """Vectorized bisection over every pair with p < limit.

    Yields (n0, p, q, x) arrays per block; 60 halvings of [0, 1] reach
    ~1e-18 interval width, beyond float64 resolution.
    """
    for blk in gaps.pair_blocks(2, limit):
        p = blk.p.astype(np.float64)
        q = blk.q.astype(np.float64)
        lo = np.zeros(p.size)
        hi = np.ones(p.size)
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            neg = q**mid - p**mid < 1.0
            lo = np.where(neg, mid, lo)
            hi = np.where(neg, hi, mid)
        x = 0.5 * (lo + hi)
        # gap-1 pairs sit exactly at x = 1
        x[blk.q - blk.p == 1] = 1.0
        yield blk.n0, blk.p, blk.q, x


def min_exponent(limit: int) -> Tuple[ExponentSolution, ScanSummary]:
    """The pair with p < limit whose exponent root is smallest."""
    best: Optional[tuple] = None  # (x, p, q)
    count = 0
    for _, p, q, x in _pair_roots(limit):
        count += p.size
        top = x.min()
        for i in np.flatnonzero(x <= top + 1e-12):
            cand = (float(x[i]), int(p[i]), int(q[i]))
            if best is None or _argmin_beats(cand, best, negate=False):
                best = cand
    if best is None:
        raise ValueError(f"no prime pair below limit {limit}")
    sol = solve_exponent(best[1], best[2])
    return sol, ScanSummary(pairs_scanned=count, limit=limit)


def max_exponent(limit: int) -> ExponentSolution:
    """The pair with p < limit whose exponent root is largest."""
    best: Optional[tuple] = None  # (-x, p, q)
    for _, p, q, x in _pair_roots(limit):
        top = x.max()
        for i in np.flatnonzero(x >= top - 1e-12):
            cand = (-float(x[i]), int(p[i]), int(q[i]))
            if best is None or _argmin_beats(cand, best, negate=True):
                best = cand
    if best is None:
        raise ValueError(f"no prime pair below limit {limit}")
    return solve_exponent(best[1], best[2])


def _argmin_beats(cand: tuple, best: tuple, negate: bool) -> bool:
    # near-ties get refined with scalar bisection before comparing;
    # exact ties go to the smaller p
    kc, kb = cand[0], best[0]
    if abs(kc - kb) <= 1e-9:
        s = -1.0 if negate else 1.0
        kc = s * solve_exponent(cand[1], cand[2]).x
        kb = s * solve_exponent(best[1], best[2]).x
    if kc != kb:
        return kc < kb
    return cand[1] < best[1]
