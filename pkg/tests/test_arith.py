import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitprime.arith import (
    FundamentalDiscriminant,
    PrimeRange,
    chi,
    fundamental_mask,
    is_fundamental,
    is_prime,
    is_squarefree,
    iter_prime_segments,
    isqrt,
    kronecker,
    sieve_primes,
    sqrt_mod,
)
from splitprime.errors import CapacityError, ValidationError


def trial_prime(n):
    if n < 2:
        return False
    return all(n % q for q in range(2, math.isqrt(n) + 1))


def euler_criterion(a, p):
    """Legendre symbol by Euler's criterion, for an odd prime p."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def squarefree_bruteforce(n):
    return all(n % (q * q) for q in range(2, math.isqrt(n) + 1))


def fundamental_bruteforce(d):
    if d % 4 == 3:
        return squarefree_bruteforce(d)
    if d % 4 == 0:
        k = d // 4
        return k % 4 in (1, 2) and squarefree_bruteforce(k)
    return False


# -- fundamental discriminants ---------------------------------------------------


@pytest.mark.parametrize("d, expected", [(163, True), (12, False), (427, True), (3, True),
                                         (4, True), (8, True), (20, True), (7, True),
                                         (1, False), (2, False), (16, False), (75, False)])
def test_is_fundamental(d, expected):
    assert is_fundamental(d) is expected


def test_is_fundamental_matches_bruteforce_and_mask():
    mask = fundamental_mask(5000)
    for d in range(1, 5001):
        expected = d >= 3 and fundamental_bruteforce(d)
        assert is_fundamental(d) == expected == bool(mask[d]), d


def test_fundamental_discriminant_type():
    d = FundamentalDiscriminant(163)
    assert d == 163 and isinstance(d, int)
    assert FundamentalDiscriminant(d) is d
    with pytest.raises(ValidationError, match="fundamental"):
        FundamentalDiscriminant(12)
    with pytest.raises(ValidationError):
        FundamentalDiscriminant(1 << 64)
    with pytest.raises(ValidationError):
        FundamentalDiscriminant(163.0)


@pytest.mark.parametrize("n, expected", [(163, True), (12, False), (427, True), (1, True),
                                         (49, False), (7 * 61, True), (1009**2, False),
                                         (1009 * 1013, True), (2 * 1009**2, False)])
def test_is_squarefree(n, expected):
    assert is_squarefree(n) is expected


def test_is_squarefree_bruteforce():
    for n in range(1, 20000):
        assert is_squarefree(n) == squarefree_bruteforce(n), n


# -- kronecker ---------------------------------------------------------------------


def test_kronecker_examples():
    assert kronecker(-163, 41) == euler_criterion(-163, 41) == 1
    assert kronecker(-163, 163) == 0
    for a in (-5, 0, 3, 17, -1000):
        assert kronecker(a, 1) == 1
    with pytest.raises(ValidationError):
        kronecker(0, 0)


def test_kronecker_conventions():
    assert kronecker(1, 0) == kronecker(-1, 0) == 1
    assert kronecker(2, 0) == 0
    assert kronecker(-1, -1) == -1
    assert kronecker(1, -1) == 1
    # (a|2) = 1 for a = +-1 mod 8, -1 for a = +-3 mod 8, 0 for even a
    for a in range(-40, 40):
        expected = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        assert kronecker(a, 2) == expected


def test_chi_examples():
    assert chi(163, 41) == 1
    assert chi(163, 163) == 0
    # -4 = 2 mod 3, and the squares mod 3 are {0, 1}
    assert {x * x % 3 for x in range(3)} == {0, 1}
    assert chi(4, 3) == -1


def test_chi_against_euler_criterion():
    rng = random.Random(1)
    primes = [p for p in sieve_primes(PrimeRange(3, 200000))]
    ds = [d for d in range(3, 3000) if is_fundamental(d)]
    checked = 0
    while checked < 1000:
        d, p = rng.choice(ds), rng.choice(primes)
        if d % p == 0:
            continue
        assert chi(d, p) == euler_criterion(-d, p)
        checked += 1


@settings(max_examples=300)
@given(
    st.integers(-(2**63), 2**63 - 1),
    st.integers(-(2**63), 2**63 - 1),
    st.integers(1, 2**63 - 1),
)
def test_kronecker_multiplicative_in_top(a, b, n):
    assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


@settings(max_examples=300)
@given(st.integers(-(10**12), 10**12), st.integers(1, 10**6), st.integers(1, 10**6))
def test_kronecker_multiplicative_in_bottom(a, m, n):
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_chi_periodic_and_vanishing():
    rng = random.Random(2)
    ds = [d for d in range(3, 20000) if is_fundamental(d)]
    for d in rng.sample(ds, 50):
        fd = FundamentalDiscriminant(d)
        for m in range(1, 400):
            v = chi(fd, m)
            assert v == chi(fd, m + d)
            assert (v == 0) == (math.gcd(m, d) > 1)
        for m, n in [(rng.randrange(1, 10**6), rng.randrange(1, 10**6)) for _ in range(50)]:
            assert chi(fd, m * n) == chi(fd, m) * chi(fd, n)


# -- primes --------------------------------------------------------------------------


@pytest.mark.parametrize("lo, hi, expected", [(40, 50, [41, 43, 47]), (2, 3, [2]),
                                              (106, 112, [107, 109]), (0, 2, []),
                                              (0, 12, [2, 3, 5, 7, 11])])
def test_sieve_examples(lo, hi, expected):
    assert sieve_primes(PrimeRange(lo, hi)) == expected


def test_sieve_against_trial_division():
    rng = random.Random(3)
    for _ in range(25):
        lo = rng.randrange(0, 10**6)
        hi = lo + rng.randrange(0, 10**4 + 1)
        assert sieve_primes(PrimeRange(lo, hi)) == [n for n in range(lo, hi) if trial_prime(n)]


def test_sieve_spans_segments():
    got = []
    for seg in iter_prime_segments(1000, 3000, segment=97):
        got.extend(seg.tolist())
    assert got == [n for n in range(1000, 3000) if trial_prime(n)]


def test_prime_range_limits():
    with pytest.raises(ValidationError):
        PrimeRange(10, 5)
    with pytest.raises(CapacityError):
        PrimeRange(0, 10**13)


def test_is_prime():
    assert [n for n in range(200) if is_prime(n)] == [n for n in range(200) if trial_prime(n)]
    big = [2**61 - 1, 2**31 - 1, 18446744073709551557, 1000000007]
    assert all(is_prime(p) for p in big)
    # strong pseudoprimes to several small bases
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321,
              3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)
    for n in range(2**20 - 500, 2**20 + 500):
        assert is_prime(n) == trial_prime(n)


# -- square roots --------------------------------------------------------------------


@pytest.mark.parametrize("n, r", [(0, 0), (1, 1), (1681, 41), (1680, 40)])
def test_isqrt_examples(n, r):
    assert isqrt(n) == r


def test_isqrt_exhaustive():
    n = np.arange(0, 10**6 + 1, dtype=np.int64)
    r = np.array([isqrt(k) for k in range(10**6 + 1)], dtype=np.int64)
    assert np.all(r * r <= n) and np.all((r + 1) * (r + 1) > n)


@given(st.integers(0, 2**200))
def test_isqrt_large(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2


def test_sqrt_mod_examples():
    assert sqrt_mod(0, 41) == 0 and sqrt_mod(41 * 5, 41) == 0
    roots = [r for r in range(41) if r * r % 41 == -163 % 41]
    assert sqrt_mod(-163 % 41, 41) == min(roots)
    assert sqrt_mod(2, 7) == 3
    assert sqrt_mod(3, 7) is None
    with pytest.raises(ValidationError):
        sqrt_mod(2, 8)


def test_sqrt_mod_exhaustive_small_primes():
    # includes p = 1 mod 8 and p = 1 mod 16, where Tonelli-Shanks iterates
    for p in [3, 5, 13, 17, 41, 73, 97, 113, 193, 257, 337, 641, 769, 1153]:
        squares = {x * x % p for x in range(p)}
        for a in range(p):
            r = sqrt_mod(a, p)
            assert (r is not None) == (a in squares)
            assert (r is not None) == (kronecker(a, p) in (0, 1))
            if r is not None:
                assert r * r % p == a and 0 <= r <= p - r


@settings(max_examples=300)
@given(st.sampled_from([10**9 + 7, 998244353, 2**61 - 1, 65537, 7340033]), st.integers())
def test_sqrt_mod_large(p, a):
    r = sqrt_mod(a, p)
    assert (r is not None) == (kronecker(a, p) in (0, 1))
    if r is not None:
        assert r * r % p == a % p
