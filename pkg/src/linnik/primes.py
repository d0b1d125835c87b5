"""Sieves, 64-bit primality and factorization for desk-scale moduli."""

from __future__ import annotations

import math
import random
from functools import lru_cache

import numpy as np

U64_LIMIT = 1 << 64
I64_MAX = (1 << 63) - 1

# first twelve primes: deterministic for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit, one monolithic Eratosthenes pass."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


@lru_cache(maxsize=None)
def small_primes(limit: int) -> np.ndarray:
    return simple_sieve(limit)


def sieve_segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in ``[lo, hi)``; ``base`` must hold every prime <= sqrt(hi - 1)."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.array([], dtype=np.int64)
    mark = np.ones(hi - lo, dtype=bool)
    for p in base:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        mark[start - lo :: p] = False
    return np.flatnonzero(mark).astype(np.int64) + lo


def primes_below(limit: int, segment_size: int = 1 << 16) -> np.ndarray:
    """Primes < limit via the segmented sieve."""
    base = small_primes(math.isqrt(max(limit - 1, 1)))
    parts = [
        sieve_segment(lo, min(lo + segment_size, limit), base)
        for lo in range(0, limit, segment_size)
    ]
    return np.concatenate(parts) if parts else np.array([], dtype=np.int64)


class PrimeStream:
    """Lazily sieved, cached run of consecutive prime segments.

    Segment ``i`` holds the primes in ``[i*size, (i+1)*size)``.  One instance
    owns its buffers, so separate workers never share state.
    """

    def __init__(self, segment_size: int = 1 << 18):
        self.segment_size = segment_size
        self._segments: list[np.ndarray] = []
        self._base = np.array([], dtype=np.int64)
        self._base_limit = 0

    def _ensure_base(self, hi: int):
        need = math.isqrt(hi) + 1
        if need > self._base_limit:
            self._base_limit = max(need, 2 * self._base_limit)
            self._base = simple_sieve(self._base_limit)

    def segment(self, i: int) -> np.ndarray:
        while len(self._segments) <= i:
            k = len(self._segments)
            lo, hi = k * self.segment_size, (k + 1) * self.segment_size
            self._ensure_base(hi)
            self._segments.append(sieve_segment(lo, hi, self._base))
        return self._segments[i]

    def bounds(self, i: int) -> tuple[int, int]:
        return i * self.segment_size, (i + 1) * self.segment_size


def _mr_round(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime_u64(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for 0 <= n < 2**64."""
    if n < 0 or n >= U64_LIMIT:
        raise ValueError("n must lie in [0, 2**64)")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    return all(_mr_round(n, a, d, r) for a in _MR_BASES)


TRIAL_LIMIT = 10**6


@lru_cache(maxsize=1)
def _trial_primes() -> list[int]:
    return small_primes(TRIAL_LIMIT).tolist()


def _pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{p: e}`` of ``1 <= n < 2**64``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n >= U64_LIMIT:
        raise ValueError("n must be below 2**64")
    out: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime_u64(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


def cubic_part(q: int) -> tuple[int, int]:
    """Split ``q = q3**3 * q2`` with ``q2`` cube-free."""
    q3 = q2 = 1
    for p, e in factorize(q).items():
        q3 *= p ** (e // 3)
        q2 *= p ** (e % 3)
    return q3, q2
