"""Consecutive-prime pairs with derived gap metrics, plus running extremes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import sieve


@dataclass(frozen=True)
class GapRecord:
    """One consecutive-prime pair (p, q) and the metrics every checker needs.

    n is the 1-based index of p.  All real-valued metrics are binary64;
    near-threshold verdicts are re-derived at higher precision by the
    bounds module, not here.
    """

    n: int
    p: int
    q: int
    gap: int
    log_p: float
    andrica: float
    cramer_ratio: float
    kourbatov_margin: float
    ratio: float

    @classmethod
    def from_pair(cls, n: int, p: int, q: int) -> "GapRecord":
        gap = q - p
        log_p = math.log(p)
        return cls(
            n=n,
            p=p,
            q=q,
            gap=gap,
            log_p=log_p,
            andrica=math.sqrt(q) - math.sqrt(p),
            cramer_ratio=gap / log_p**2,
            kourbatov_margin=(log_p**2 - log_p - 1.0) - gap,
            ratio=q / p,
        )


@dataclass
class PairBlock:
    """A vectorized run of consecutive pairs: p[i] is prime number n0 + i."""

    n0: int
    p: np.ndarray
    q: np.ndarray


def pair_blocks(lo: int, hi: int) -> Iterator[PairBlock]:
    """Stream consecutive-prime pairs (p, q) with lo <= p < hi, in blocks.

    q of the last pair is looked up past hi, so every p in range gets its
    successor.  n0 of the first block is the prime index of its first p.
    """
    rng = sieve.PrimeRange(lo, hi)
    n0 = sieve.prime_count(rng.lo - 1) + 1 if rng.lo > 2 else 1
    carry: Optional[int] = None
    for block in sieve.prime_blocks(rng.lo, rng.hi):
        if carry is not None:
            block = np.concatenate(([carry], block))
        else:
            block = block
        if block.size >= 2:
            yield PairBlock(n0=n0, p=block[:-1], q=block[1:])
            n0 += block.size - 1
        carry = int(block[-1])
    if carry is not None:
        succ = _next_prime_after(carry)
        yield PairBlock(
            n0=n0,
            p=np.array([carry], dtype=np.int64),
            q=np.array([succ], dtype=np.int64),
        )


def _next_prime_after(p: int) -> int:
    # Bertrand guarantees a prime below 2p; widen defensively for tiny p.
    for block in sieve.prime_blocks(p + 1, 2 * p + 2):
        return int(block[0])
    raise RuntimeError(f"no prime found after {p}")


def gap_stream(lo: int, hi: int) -> Iterator[GapRecord]:
    """One GapRecord per consecutive pair (p, q) with lo <= p < hi."""
    for blk in pair_blocks(lo, hi):
        for i in range(blk.p.size):
            yield GapRecord.from_pair(blk.n0 + i, int(blk.p[i]), int(blk.q[i]))


@dataclass
class ExtremeTracker:
    """Records attaining the maximum of each metric; ties go to smallest n."""

    max_gap: Optional[GapRecord] = None
    max_cramer_ratio: Optional[GapRecord] = None
    max_andrica: Optional[GapRecord] = None
    max_ratio: Optional[GapRecord] = None

    _METRICS = ("gap", "cramer_ratio", "andrica", "ratio")

    def observe(self, rec: GapRecord) -> None:
        for metric in self._METRICS:
            field = f"max_{metric}"
            cur = getattr(self, field)
            if cur is None or _beats(rec, cur, metric):
                setattr(self, field, rec)

    def merge(self, other: "ExtremeTracker") -> "ExtremeTracker":
        out = ExtremeTracker()
        for metric in self._METRICS:
            field = f"max_{metric}"
            a, b = getattr(self, field), getattr(other, field)
            if a is None:
                pick = b
            elif b is None:
                pick = a
            else:
                pick = b if _beats(b, a, metric) else a
            setattr(out, field, pick)
        return out

    def observe_block(self, blk: PairBlock) -> None:
        p = blk.p.astype(np.float64)
        q = blk.q.astype(np.float64)
        gap = blk.q - blk.p
        log_p = np.log(p)
        candidates = {
            "gap": gap,
            "cramer_ratio": gap / log_p**2,
            "andrica": np.sqrt(q) - np.sqrt(p),
            "ratio": q / p,
        }
        for values in candidates.values():
            # observe every index tied (to float fuzz) with the block max so
            # the winner never depends on how blocks were partitioned
            top = values.max()
            for i in np.flatnonzero(values >= top - 1e-12 * abs(top)):
                self.observe(
                    GapRecord.from_pair(
                        blk.n0 + int(i), int(blk.p[i]), int(blk.q[i])
                    )
                )


def _beats(a: GapRecord, b: GapRecord, metric: str) -> bool:
    va, vb = getattr(a, metric), getattr(b, metric)
    if va != vb:
        return va > vb
    return a.n < b.n


def track_extremes(limit: int) -> ExtremeTracker:
    """Extremes of every gap metric over all pairs with p < limit."""
    if limit < 3:
        raise ValueError("limit must be >= 3 (need at least the pair (2, 3))")
    tracker = ExtremeTracker()
    for blk in pair_blocks(2, limit):
        tracker.observe_block(blk)
    return tracker
