import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primegaps import bounds
from primegaps.bounds import Precision, Status


class TestKourbatovBound:
    def test_at_29(self):
        lp = math.log(29)
        assert bounds.kourbatov_bound(29) == pytest.approx(lp * lp - lp - 1)
        assert bounds.kourbatov_bound(29) == pytest.approx(6.97138, abs=1e-5)

    def test_at_e(self):
        assert bounds.kourbatov_bound(math.e) == pytest.approx(-1.0)

    def test_at_127(self):
        lp = math.log(127)
        assert bounds.kourbatov_bound(127) == pytest.approx(lp * lp - lp - 1)
        assert bounds.kourbatov_bound(127) == pytest.approx(17.622, abs=1e-3)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            bounds.kourbatov_bound(1)

    @given(st.floats(min_value=2.0, max_value=1e12))
    @settings(max_examples=200)
    def test_always_below_squared_log(self, p):
        assert bounds.kourbatov_bound(p) < math.log(p) ** 2


class TestAndricaCheck:
    def test_7_11(self):
        v = bounds.andrica_check(7, 11)
        assert v.status is Status.HOLDS
        assert v.margin == pytest.approx(1 - 0.670873, abs=1e-6)

    def test_2_3(self):
        v = bounds.andrica_check(2, 3)
        assert v.holds
        assert v.margin == pytest.approx(1 - (math.sqrt(3) - math.sqrt(2)))

    def test_113_127(self):
        v = bounds.andrica_check(113, 127)
        assert v.holds
        assert v.margin == pytest.approx(1 - 0.6392, abs=1e-4)

    def test_bad_pair(self):
        with pytest.raises(ValueError):
            bounds.andrica_check(11, 7)


class TestFiroozbakhtCheck:
    def test_4_7_11(self):
        # 7^(1/4) = 1.6266 > 11/7 = 1.571
        v = bounds.firoozbakht_check(4, 7, 11)
        assert v.holds
        assert 7 ** 0.25 > 11 / 7

    def test_1_2_3(self):
        assert bounds.firoozbakht_check(1, 2, 3).holds  # ln 3 < 2 ln 2

    def test_2_3_5(self):
        assert bounds.firoozbakht_check(2, 3, 5).holds  # 25 < 27

    def test_equivalent_rearrangements_agree(self):
        # deciding via n ln q < (n+1) ln p must match the power form
        # q < p^((n+1)/n) at strict precision on assorted pairs
        cases = [(1, 2, 3), (2, 3, 5), (4, 7, 11), (30, 113, 127),
                 (217, 1327, 1361)]
        for n, p, q in cases:
            v = bounds.firoozbakht_check(n, p, q)
            with mp.workdps(40):
                direct = mp.power(p, mp.mpf(n + 1) / n) - q
            assert v.holds == (direct > 0)


class TestPointwiseCurves:
    def test_log_sq_vs_two_sqrt_at_121(self):
        assert bounds.log_sq_vs_two_sqrt(121) == pytest.approx(
            0.000393, abs=5e-6
        )

    def test_log_sq_vs_two_sqrt_trivial(self):
        assert bounds.log_sq_vs_two_sqrt(1) == pytest.approx(3.0)

    def test_log_sq_vs_two_sqrt_below_threshold(self):
        assert bounds.log_sq_vs_two_sqrt(120) < 0
        assert bounds.log_sq_vs_two_sqrt(120) == pytest.approx(-0.0107, abs=1e-3)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bounds.log_sq_vs_two_sqrt(0)
        with pytest.raises(ValueError):
            bounds.smarandache9_margin(-1)

    def test_smarandache9_margin(self):
        assert bounds.smarandache9_margin(5850) >= 0.08077
        assert bounds.smarandache9_margin(1) == pytest.approx(1.76320819)
        assert bounds.smarandache9_margin(10**6) > 0

    def test_recomputed_constants_close_to_printed(self):
        audit = bounds.recompute_smarandache9_constants(0.5671481302020263)
        # the printed decimals come from a truncated root, so they sit a few
        # 1e-7 away from the recomputed values; the audit reports that gap
        assert abs(audit["coeff_discrepancy"]) < 1e-6
        assert abs(audit["exponent_discrepancy"]) < 5e-7


class TestCrossoverScan:
    def test_legendre_threshold(self):
        r = bounds.crossover_scan("two-n-plus-one-vs-4log2", 2, 10**4)
        assert r.threshold == 11
        assert r.pre_threshold_failure == 10

    def test_sqrt_vs_2log_threshold(self):
        r = bounds.crossover_scan("sqrt-vs-2log", 2, 10**4)
        assert r.threshold == 75

    def test_n_vs_4log2_threshold(self):
        r = bounds.crossover_scan("n-vs-4log2", 2, 10**4)
        assert r.threshold == 75

    def test_andrica_threshold(self):
        r = bounds.crossover_scan("log2-vs-2sqrt-plus-1", 2, 10**4)
        assert r.threshold == 121
        assert r.pre_threshold_failure == 120

    def test_z_predicate_threshold_below_5850(self):
        r = bounds.crossover_scan("n-over-logpow-vs-9.33", 2, 10**4)
        assert r.threshold <= 5850
        z_5850 = 5850 / math.log(5850) ** bounds.SM9_LOG_POWER - bounds.SM9_RHS
        assert z_5850 == pytest.approx(30.5, abs=0.1)

    def test_stability_when_window_doubles(self):
        for pid in bounds.PREDICATES:
            r1 = bounds.crossover_scan(pid, 2, 10**4)
            r2 = bounds.crossover_scan(pid, 2, 2 * 10**4)
            assert r2.threshold >= r1.threshold
            assert r2.threshold == r1.threshold  # all are stable here

    def test_no_crossover_signal(self):
        never = bounds.Predicate(
            "never", "always false",
            lambda n: -np.ones_like(n), lambda n: mp.mpf(-1),
        )
        with pytest.raises(bounds.NoCrossoverError):
            bounds.crossover_scan(never, 2, 100)

    def test_unknown_id_lists_catalog(self):
        with pytest.raises(KeyError, match="two-n-plus-one-vs-4log2"):
            bounds.crossover_scan("nope", 2, 100)


class TestMonotoneScan:
    def test_sqrt_over_log_squared_increasing_from_190(self):
        v = bounds.monotone_scan("sqrt-over-log-squared", 190, 10**5)
        assert v.status is Status.HOLDS

    def test_value_at_190(self):
        seq = bounds.SEQUENCES["sqrt-over-log-squared"]
        val = float(seq.fast(np.array([190.0]))[0])
        assert val == pytest.approx(0.50066, abs=5e-5)
        assert val > 0.5

    def test_constant_sequence_fails_immediately(self):
        const = bounds.Sequence(
            "const", "always 1",
            lambda n: np.ones_like(n), lambda n: mp.mpf(1),
        )
        v = bounds.monotone_scan(const, 2, 100)
        assert v.status is Status.FAILS
        assert v.witness == (2,)

    def test_sequence_decreasing_below_190(self):
        # the same sequence is not monotone when started too early
        v = bounds.monotone_scan("sqrt-over-log-squared", 2, 300)
        assert v.status is Status.FAILS


class TestTriStateEngine:
    def test_decided_fast_margin(self):
        v = bounds.decide(0.5, lambda: mp.mpf("0.5"))
        assert v.status is Status.HOLDS and v.precision_used is Precision.FAST

    def test_escalates_to_strict(self):
        v = bounds.decide(1e-12, lambda: mp.mpf("1e-12"))
        assert v.status is Status.HOLDS
        assert v.precision_used is Precision.STRICT

    def test_uncertain_when_strict_cannot_separate(self):
        v = bounds.decide(0.0, lambda: mp.mpf("1e-30"), witness=(0,))
        assert v.status is Status.UNCERTAIN
        assert v.witness == (0,)

    def test_fails_carry_witness(self):
        v = bounds.decide(-0.25, lambda: mp.mpf("-0.25"), witness=(7,))
        assert v.status is Status.FAILS
        assert v.witness == (7,)

    def test_fast_and_strict_agree_near_boundaries(self):
        # sampled near-threshold soundness: both routes must agree whenever
        # the fast route is confident
        rng = np.random.default_rng(20240817)
        pred = bounds.PREDICATES["log2-vs-2sqrt-plus-1"]
        offsets = rng.uniform(-2.0, 2.0, size=2500)
        for x in 121.0 + offsets:
            fast = float(pred.fast(np.array([x]))[0])
            if abs(fast) < bounds.FAST_REL_TOL:
                continue
            with mp.workdps(bounds.STRICT_DPS):
                strict = pred.strict(x)
            assert (fast > 0) == (strict > 0)
