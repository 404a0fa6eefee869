"""Shared independent oracles: trial division only, no sieve reuse."""

import math

import pytest


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_trial(lo: int, hi: int) -> list:
    return [n for n in range(max(lo, 2), hi) if is_prime_trial(n)]


def pi_trial(x: int) -> int:
    return len(primes_trial(2, x + 1))


@pytest.fixture(scope="session")
def trial_primes_1e5():
    return primes_trial(2, 100_001)
