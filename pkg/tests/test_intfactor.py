"""Integer factorization: trial division + seeded Pollard rho."""

from __future__ import annotations

import math
import random

import pytest

from knotsig import BudgetExceededError, integer_factor, is_probable_prime
from oracles import trial_division


def test_small_examples():
    assert integer_factor(12) == [2, 2, 3]
    assert integer_factor(1) == []
    assert integer_factor(-1) == []
    assert integer_factor(-30) == [2, 3, 5]


def test_zero_rejected():
    with pytest.raises(ValueError):
        integer_factor(0)


def test_product_identity_random():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randrange(2, 10**9)
        fac = integer_factor(n)
        assert math.prod(fac) == n
        assert all(is_probable_prime(p) for p in fac)


def test_matches_trial_division():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randrange(2, 10**7)
        assert integer_factor(n) == sorted(trial_division(n))


def test_large_semiprime():
    p, q = 1_000_003, 1_000_033
    assert integer_factor(p * q) == [p, q]


def test_example_resultant_support(f1, f2):
    from knotsig import resultant

    res = resultant(f1, f2)
    fac = integer_factor(res)
    assert 2 in fac
    assert fac == sorted(trial_division(res))


def test_deterministic_for_fixed_seed():
    n = 1_000_003 * 999_983 * 4
    assert integer_factor(n, seed=5) == integer_factor(n, seed=5)


def test_budget_raises():
    # two large primes with an unusably small rho budget
    p = 2**61 - 1
    q = 2**89 - 1
    with pytest.raises(BudgetExceededError):
        integer_factor(p * q, seed=0, max_rho_iterations=5)
