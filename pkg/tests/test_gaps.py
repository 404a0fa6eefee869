import math

import numpy as np

from primegaps import gaps
from conftest import primes_trial


def records(lo, hi):
    return list(gaps.gap_stream(lo, hi))


def test_gap_stream_small_range():
    got = [(r.p, r.q) for r in records(2, 12)]
    assert got == [(2, 3), (3, 5), (5, 7), (7, 11), (11, 13)]


def test_gap_stream_matches_trial_division():
    oracle = primes_trial(2, 200)
    expected = list(zip(oracle[:-1], oracle[1:]))
    got = [(r.p, r.q) for r in records(2, oracle[-1])]
    assert got == expected


def test_record_113_127():
    (rec,) = records(113, 114)
    assert (rec.p, rec.q, rec.gap) == (113, 127, 14)
    assert rec.n == 30  # 113 is the 30th prime


def test_record_7_11_metrics():
    (rec,) = records(7, 8)
    assert rec.andrica == math.sqrt(11) - math.sqrt(7)
    assert abs(rec.andrica - 0.670873) < 1e-6
    assert rec.cramer_ratio == 4 / math.log(7) ** 2
    assert rec.ratio == 11 / 7


def test_indices_are_sequential():
    recs = records(2, 1000)
    assert [r.n for r in recs] == list(range(1, len(recs) + 1))
    for r in recs:
        assert r.gap == r.q - r.p >= 1
        assert r.gap % 2 == 0 or r.p == 2
        assert r.andrica > 0
        assert r.ratio > 1


def test_concatenation_stitches_across_ranges():
    whole = [(r.n, r.p, r.q) for r in records(2, 5000)]
    parts = []
    for lo, hi in [(2, 100), (100, 1024), (1024, 4999), (4999, 5000)]:
        parts.extend((r.n, r.p, r.q) for r in records(lo, hi))
    assert parts == whole


def test_lookahead_crosses_segment_boundary(monkeypatch):
    monkeypatch.setenv("PRIMEGAP_SEGMENT_BYTES", "2048")
    whole = [(r.p, r.q) for r in records(2, 30000)]
    oracle = primes_trial(2, 30100)
    assert whole == list(zip(oracle[:-1], oracle[1:]))[: len(whole)]


def test_track_extremes_small_limits():
    t = gaps.track_extremes(100)
    assert (t.max_andrica.p, t.max_andrica.q) == (7, 11)

    t = gaps.track_extremes(10)
    assert (t.max_ratio.p, t.max_ratio.q) == (3, 5)
    assert t.max_ratio.ratio == 5 / 3

    t = gaps.track_extremes(3)
    assert (t.max_gap.p, t.max_gap.q) == (2, 3)
    assert t.max_gap is t.max_andrica is t.max_ratio is t.max_cramer_ratio


def test_extreme_merge_is_partition_independent():
    whole = gaps.track_extremes(20000)
    left = gaps.ExtremeTracker()
    right = gaps.ExtremeTracker()
    for blk in gaps.pair_blocks(2, 7000):
        left.observe_block(blk)
    for blk in gaps.pair_blocks(7000, 20000):
        right.observe_block(blk)
    for field in ("max_gap", "max_cramer_ratio", "max_andrica", "max_ratio"):
        merged = left.merge(right)
        assert getattr(merged, field) == getattr(whole, field)
        # merge is commutative too
        assert getattr(right.merge(left), field) == getattr(whole, field)


def test_andrica_below_one_to_1e6():
    for blk in gaps.pair_blocks(2, 10**6):
        assert np.all(np.sqrt(blk.q) - np.sqrt(blk.p) < 1.0)
