import random

import pytest
from hypothesis import given, strategies as st

from ddwreath.arith import (
    PrimePower,
    binomial,
    exact_div,
    factorial,
    is_prime_power,
    triangular_inverse,
)
from ddwreath.errors import DomainError


def prime_divisors_by_trial_division(c):
    found = set()
    q = 2
    while q * q <= c:
        while c % q == 0:
            found.add(q)
            c //= q
        q += 1
    if c > 1:
        found.add(c)
    return found


@pytest.mark.parametrize("c, expected", [(13, (13, 1)), (25, (5, 2)), (21, None), (2, (2, 1)),
                                         (1024, (2, 10)), (3**13, (3, 13)), (36, None)])
def test_is_prime_power_examples(c, expected):
    got = is_prime_power(c)
    assert (got.p, got.a) == expected if expected else got is None
    if got:
        assert got.value == c


def test_is_prime_power_rejects_small_input():
    with pytest.raises(DomainError):
        is_prime_power(1)


def test_prime_power_type_validates():
    with pytest.raises(DomainError):
        PrimePower(4, 1)
    with pytest.raises(DomainError):
        PrimePower(3, 0)


def test_prime_power_matches_trial_division_sample():
    rng = random.Random(20261016)
    sample = [rng.randint(2, 10**6) for _ in range(10**4)]
    # make sure genuine prime powers are well represented
    sample += [p**a for p in (2, 3, 5, 7, 11, 13, 31, 997) for a in range(1, 8) if p**a <= 10**6]
    for c in sample:
        divisors = prime_divisors_by_trial_division(c)
        got = is_prime_power(c)
        assert (got is not None) == (len(divisors) == 1), c
        if got:
            assert {got.p} == divisors and got.value == c


@pytest.mark.parametrize("t, k", [(15, 6), (28, 8), (16, None), (1, 2), (3, 3), (2, None)])
def test_triangular_inverse_examples(t, k):
    assert triangular_inverse(t) == k


def test_triangular_inverse_roundtrip():
    for k in range(2, 10**5 + 1):
        assert triangular_inverse(k * (k - 1) // 2) == k


@given(st.integers(min_value=1, max_value=10**30))
def test_triangular_inverse_is_exact_for_big_values(t):
    k = triangular_inverse(t)
    if k is None:
        s = 1
        while s * (s - 1) // 2 < t:
            s *= 2
        lo, hi = 1, s
        while lo < hi:
            mid = (lo + hi) // 2
            if mid * (mid - 1) // 2 < t:
                lo = mid + 1
            else:
                hi = mid
        assert lo * (lo - 1) // 2 != t
    else:
        assert k * (k - 1) // 2 == t


def test_binomial_and_factorial():
    assert binomial(6, 2) == 15
    assert binomial(2, 2) == 1
    assert factorial(7) == 5040
    assert factorial(25) == 15511210043330985984000000
    with pytest.raises(DomainError):
        binomial(-1, 2)


def test_exact_div():
    assert exact_div(10**30, 10**10) == 10**20
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)
