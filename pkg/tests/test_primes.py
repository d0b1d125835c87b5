import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from linnik.primes import (
    PrimeStream,
    cubic_part,
    factorize,
    is_prime_u64,
    primes_below,
    simple_sieve,
)


def largest_cube_divisor(n):
    best, c = 1, 2
    while c**3 <= n:
        if n % c**3 == 0:
            best = c
        c += 1
    return best


def is_cube_free(n):
    c = 2
    while c**3 <= n:
        if n % c**3 == 0:
            return False
        c += 1
    return True


class TestIsPrime:
    def test_small(self):
        assert is_prime_u64(2) and is_prime_u64(3) and is_prime_u64(37)
        assert not is_prime_u64(0) and not is_prime_u64(1) and not is_prime_u64(4)

    def test_mersenne_61(self):
        n = 2**61 - 1
        assert all(n % int(p) for p in simple_sieve(10**6))
        assert is_prime_u64(n)

    @pytest.mark.parametrize(
        "n",
        [
            3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
            3825123056546413051,  # strong pseudoprime to every prime base up to 23
        ],
    )
    def test_strong_pseudoprimes(self, n):
        assert not is_prime_u64(n)

    def test_top_of_range(self):
        assert is_prime_u64(2**64 - 59)
        assert not is_prime_u64(2**64 - 1)
        with pytest.raises(ValueError):
            is_prime_u64(2**64)

    def test_agrees_with_sieve(self):
        primes = set(simple_sieve(20000).tolist())
        assert all(is_prime_u64(n) == (n in primes) for n in range(20001))

    @settings(max_examples=300, deadline=None)
    @given(st.integers(0, 2**64 - 1))
    def test_agrees_with_sympy(self, n):
        assert is_prime_u64(n) == sympy.isprime(n)


class TestSieve:
    def test_monolithic(self):
        assert simple_sieve(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert simple_sieve(1).size == 0

    @pytest.mark.parametrize("size", [2**10, 2**16, 2**20])
    def test_segmented_equals_monolithic(self, size):
        np.testing.assert_array_equal(primes_below(10**6, size), simple_sieve(10**6 - 1))

    def test_stream(self):
        s = PrimeStream(segment_size=1000)
        got = np.concatenate([s.segment(i) for i in range(50)])
        np.testing.assert_array_equal(got, simple_sieve(49999))


class TestFactor:
    @pytest.mark.parametrize(
        "n, f",
        [
            (1, {}),
            (360, {2: 3, 3: 2, 5: 1}),
            (2**61 - 1, {2**61 - 1: 1}),
            (1000003**2 * 1000033, {1000003: 2, 1000033: 1}),
            (4294967291 * 4294967279, {4294967279: 1, 4294967291: 1}),
        ],
    )
    def test_known(self, n, f):
        assert factorize(n) == f

    def test_random_against_sympy(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randrange(1, 2**62)
            assert factorize(n) == sympy.factorint(n)

    def test_range(self):
        with pytest.raises(ValueError):
            factorize(0)


class TestCubicPart:
    @pytest.mark.parametrize("q, expect", [(8, (2, 1)), (1, (1, 1)), (360, (2, 45)), (2**7 * 3**6, (2**2 * 3**2, 2))])
    def test_examples(self, q, expect):
        assert cubic_part(q) == expect

    def test_against_brute_force(self):
        for q in range(1, 5001):
            q3, q2 = cubic_part(q)
            assert q3 == largest_cube_divisor(q)
            assert q3**3 * q2 == q and is_cube_free(q2)

    def test_large(self):
        assert cubic_part(1000003**3 * 7) == (1000003, 7)
        assert cubic_part(1000003**2 * 2**3) == (2, 1000003**2)
