import math

import mpmath as mp
import pytest

from primegaps import exponent_solver as es
from primegaps import gaps
from conftest import primes_trial


def bisect_oracle(p, q, tol=1e-10):
    """Independent bisection at fixed tolerance, no shared code."""
    lo, hi = 1e-6, 1.0
    f = lambda x: q**x - p**x - 1.0
    assert f(lo) < 0 <= f(1.0)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


class TestSolveExponent:
    def test_2_3_is_exactly_one(self):
        sol = es.solve_exponent(2, 3)
        assert sol.x == 1.0
        assert sol.residual == 0.0

    def test_113_127(self):
        sol = es.solve_exponent(113, 127)
        assert sol.x == pytest.approx(0.567148, abs=1e-6)

    def test_7_11_against_oracle(self):
        sol = es.solve_exponent(7, 11)
        assert sol.x == pytest.approx(bisect_oracle(7, 11), abs=1e-9)
        assert sol.x == pytest.approx(0.5996, abs=1e-4)

    def test_bad_pair(self):
        with pytest.raises(ValueError):
            es.solve_exponent(11, 7)

    def test_residual_bound(self):
        primes = primes_trial(2, 500)
        for p, q in zip(primes[:-1], primes[1:]):
            sol = es.solve_exponent(p, q)
            assert sol.residual < 1e-10

    def test_bracket_invariant(self):
        for p, q in [(3, 5), (7, 11), (113, 127), (1327, 1361)]:
            sol = es.solve_exponent(p, q)
            lo, hi = sol.bracket
            assert lo <= sol.x <= hi
            assert hi - lo <= 2e-13
            assert q**lo - p**lo - 1 < 0 <= q**hi - p**hi - 1

    def test_roots_lie_in_half_open_unit_interval(self):
        primes = primes_trial(2, 2000)
        for p, q in zip(primes[:-1], primes[1:]):
            sol = es.solve_exponent(p, q)
            assert 0.5 < sol.x <= 1.0


class TestScans:
    def test_min_at_128_is_113_127(self):
        sol, summary = es.min_exponent(128)
        assert (sol.p, sol.q) == (113, 127)
        assert sol.x == pytest.approx(0.567148, abs=1e-6)
        assert summary.pairs_scanned == 31

    def test_min_at_10_compares_all_four_pairs(self):
        xs = {(p, q): es.solve_exponent(p, q).x
              for p, q in [(2, 3), (3, 5), (5, 7), (7, 11)]}
        best = min(xs, key=xs.get)
        sol, _ = es.min_exponent(10)
        assert (sol.p, sol.q) == best == (7, 11)

    def test_min_at_3_is_only_pair(self):
        sol, _ = es.min_exponent(3)
        assert (sol.p, sol.q, sol.x) == (2, 3, 1.0)

    def test_min_stays_at_113_127_through_1e6(self):
        sol, _ = es.min_exponent(10**6)
        assert (sol.p, sol.q) == (113, 127)

    def test_max_is_always_2_3(self):
        assert (es.max_exponent(3).p, es.max_exponent(3).q) == (2, 3)
        sol = es.max_exponent(10**6)
        assert (sol.p, sol.q, sol.x) == (2, 3, 1.0)

    def test_all_roots_at_most_one(self):
        for _, p, q, x in es._pair_roots(10**4):
            assert (x <= 1.0).all()

    def test_twin_pair_roots_below_one_and_monotone(self):
        # sampled twins up to 1e5: x < 1 always, and strictly increasing in
        # p (a fixed gap of 2 forces x toward 1 as p grows)
        from primegaps import sieve

        primes = set(sieve.primes_in(2, 10**5 + 3))
        twins = sorted((p, p + 2) for p in primes if p + 2 in primes)
        sampled = twins[::97] + [twins[-1]]
        xs = [es.solve_exponent(p, q).x for p, q in sampled]
        assert all(x < 1 for x in xs)
        assert all(a < b for a, b in zip(xs, xs[1:]))

    def test_vectorized_roots_match_scalar(self):
        for n0, p, q, x in es._pair_roots(200):
            for i in range(p.size):
                assert x[i] == pytest.approx(
                    es.solve_exponent(int(p[i]), int(q[i])).x, abs=1e-11
                )
