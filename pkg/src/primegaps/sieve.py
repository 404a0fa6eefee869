"""Segmented sieve of Eratosthenes: prime streams, exact counting, n-th prime.

Everything downstream (gap metrics, conjecture scans, the pi(x) comparison)
uses this module as its exact prime oracle.  The sieve is odd-only and
segmented so that scans near 10^8..10^9 run in bounded memory.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

MAX_VALUE = 2**63 - 1

# Odd-only entries per segment; each entry covers one odd number, so a
# segment spans twice this many integers.  Overridable through
# PRIMEGAP_SEGMENT_BYTES (one byte per odd entry).
DEFAULT_SEGMENT_ODDS = 1 << 20


class CapacityError(Exception):
    """Requested work exceeds the supported sieve range."""


def segment_odds() -> int:
    raw = os.environ.get("PRIMEGAP_SEGMENT_BYTES")
    if raw is None:
        return DEFAULT_SEGMENT_ODDS
    n = int(raw)
    if n < 1024:
        raise ValueError("PRIMEGAP_SEGMENT_BYTES must be at least 1024")
    return n


@dataclass(frozen=True)
class PrimeRange:
    """Half-open integer range [lo, hi) to be scanned for primes."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo < self.hi:
            raise ValueError(f"invalid range [{self.lo}, {self.hi})")
        if self.hi > MAX_VALUE:
            raise CapacityError(f"range end {self.hi} exceeds 2^63-1")


@dataclass(frozen=True)
class IndexedPrime:
    """A prime together with its 1-based index (index 1 is the prime 2)."""

    index: int
    value: int


def base_sieve(limit: int) -> np.ndarray:
    """All primes <= limit by a plain one-shot sieve (used for segment seeding)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _sieve_segment(lo: int, hi: int, odd_base: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi) where lo is odd and hi - lo spans only odd candidates.

    odd_base must contain every odd prime <= sqrt(hi - 1).
    """
    count = (hi - lo + 1) // 2
    mask = np.ones(count, dtype=bool)
    for p in odd_base:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        if start < hi:
            mask[(start - lo) // 2 :: p] = False
    if lo == 1:
        mask[0] = False
    return lo + 2 * np.flatnonzero(mask).astype(np.int64)


def prime_blocks(lo: int, hi: int) -> Iterator[np.ndarray]:
    """Yield the primes in [lo, hi) as ascending int64 arrays, one per segment."""
    rng = PrimeRange(lo, hi)
    lo, hi = rng.lo, rng.hi
    if hi <= 2:
        return
    if lo <= 2:
        yield np.array([2], dtype=np.int64)
        lo = 3
    if lo % 2 == 0:
        lo += 1
    if lo >= hi:
        return
    odd_base = base_sieve(math.isqrt(hi - 1))
    odd_base = odd_base[odd_base > 2]
    span = 2 * segment_odds()
    for seg_lo in range(lo, hi, span):
        seg_hi = min(seg_lo + span, hi)
        block = _sieve_segment(seg_lo, seg_hi, odd_base)
        if block.size:
            yield block


def primes_in(lo: int, hi: int) -> Iterator[int]:
    """Stream the primes p with lo <= p < hi in ascending order."""
    for block in prime_blocks(lo, hi):
        yield from (int(p) for p in block)


def prime_count(x: int) -> int:
    """Exact pi(x): the number of primes <= x."""
    if x < 2:
        return 0
    return sum(block.size for block in prime_blocks(2, x + 1))


def prime_counts_at(values) -> np.ndarray:
    """pi(v) for every v in `values` (any order), in one sieve pass.

    Cheaper than repeated prime_count calls when many counts near the same
    magnitude are needed (interval checkers rely on this).
    """
    vals = np.asarray(list(values), dtype=np.int64)
    if vals.size == 0:
        return np.zeros(0, dtype=np.int64)
    order = np.argsort(vals, kind="stable")
    sorted_vals = vals[order]
    counts = np.zeros(vals.size, dtype=np.int64)
    top = int(sorted_vals[-1])
    running = 0
    if top >= 2:
        for block in prime_blocks(2, top + 1):
            counts += np.searchsorted(block, sorted_vals, side="right")
            running += block.size
    out = np.zeros(vals.size, dtype=np.int64)
    out[order] = counts
    return out


# Loose upper bound for p_n, used only to size the nth_prime scan.
def _nth_prime_bound(n: int) -> int:
    if n < 6:
        return 14
    ln = math.log(n)
    return int(n * (ln + math.log(ln)) * 1.2) + 10


def nth_prime(n: int) -> IndexedPrime:
    """The n-th prime (1-based), found by counting through sieve segments."""
    if n < 1:
        raise ValueError("prime index must be >= 1")
    bound = _nth_prime_bound(n)
    if bound > MAX_VALUE:
        raise CapacityError(f"prime index {n} beyond supported range")
    seen = 0
    for block in prime_blocks(2, bound):
        if seen + block.size >= n:
            return IndexedPrime(index=n, value=int(block[n - seen - 1]))
        seen += block.size
    raise CapacityError(f"prime index {n} not reached below bound {bound}")
