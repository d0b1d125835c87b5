"""Least primes in arithmetic progressions and range scans against q**4.5."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .primes import I64_MAX, PrimeStream, cubic_part, small_primes

OK = "OK"
CAP_EXCEEDED = "CAP_EXCEEDED"
CSV_HEADER = ("q", "q3", "q2", "worst_a", "least_prime", "exponent", "status")


class InvalidResidue(ValueError):
    pass


@dataclass(frozen=True)
class ScanConfig:
    q_min: int = 3
    q_max: int = 100
    cubic_bound: Optional[int] = None
    exponent_bound: float = 4.5
    constant_C: float = 1.0
    absolute_cap: int = I64_MAX

    def __post_init__(self):
        if self.q_min < 3:
            raise ValueError("q_min must be at least 3")
        if self.q_min > self.q_max:
            raise ValueError("q_min must not exceed q_max")
        if not self.exponent_bound > 1:
            raise ValueError("exponent_bound must exceed 1")
        if self.constant_C <= 0:
            raise ValueError("constant_C must be positive")
        if not 2 <= self.absolute_cap <= I64_MAX:
            raise OverflowError("absolute_cap must lie in [2, 2**63 - 1]")
        if self.cubic_bound is not None and self.cubic_bound < 1:
            raise ValueError("cubic_bound must be at least 1")

    def bound(self, q: int) -> float:
        return self.constant_C * float(q) ** self.exponent_bound

    def cap(self, q: int) -> int:
        b = self.bound(q)
        return self.absolute_cap if b >= self.absolute_cap else int(b)


@dataclass(frozen=True)
class ScanRecord:
    q: int
    q3: int
    q2: int
    worst_a: int
    least_prime: Optional[int]
    exponent: Optional[float]
    status: str = OK

    def csv_row(self) -> list[str]:
        return [
            str(self.q),
            str(self.q3),
            str(self.q2),
            str(self.worst_a),
            "" if self.least_prime is None else str(self.least_prime),
            "" if self.exponent is None else f"{self.exponent:.6f}",
            self.status,
        ]


@dataclass
class ScanSummary:
    records: int = 0
    max_exponent: Optional[float] = None
    max_exponent_q: Optional[int] = None
    violations: int = 0
    cap_exceeded: int = 0
    violating_q: list[int] = field(default_factory=list)

    def update(self, rec: ScanRecord, config: ScanConfig):
        self.records += 1
        if rec.status == CAP_EXCEEDED:
            self.cap_exceeded += 1
            # the sieve stopped at the theorem's bound itself: a genuine violation
            if config.bound(rec.q) < config.absolute_cap:
                self.violations += 1
                self.violating_q.append(rec.q)
            return
        if self.max_exponent is None or rec.exponent > self.max_exponent:
            self.max_exponent, self.max_exponent_q = rec.exponent, rec.q
        if rec.least_prime > config.bound(rec.q):
            self.violations += 1
            self.violating_q.append(rec.q)

    def lines(self) -> list[str]:
        mx = "n/a" if self.max_exponent is None else f"{self.max_exponent:.6f}"
        return [
            f"records: {self.records}",
            f"max exponent: {mx} (q={self.max_exponent_q})",
            f"violations: {self.violations}",
            f"cap exceeded: {self.cap_exceeded}",
        ]


def least_prime_in_ap(a: int, q: int, cap: int = I64_MAX, segment: int = 1 << 14) -> Optional[int]:
    """Smallest prime ``p <= cap`` with ``p = a (mod q)``, or None.

    Sieves the progression ``a + k q`` directly: for each base prime ``p`` not
    dividing ``q`` the composite terms sit at ``k = -a / q (mod p)``.  Segments
    start short and double up to ``segment`` terms, since most progressions
    hit a prime early.
    """
    if q < 2:
        raise ValueError("modulus must be at least 2")
    if not 0 < a < q or math.gcd(a, q) != 1:
        raise InvalidResidue(f"{a} is not a unit residue mod {q}")
    if cap > I64_MAX:
        raise OverflowError("cap exceeds the 64-bit signed range")
    if cap < a:
        return None
    k_last = (cap - a) // q
    k0, width = 0, min(64, segment)
    while k0 <= k_last:
        k1 = min(k0 + width, k_last + 1)
        n_hi = a + (k1 - 1) * q
        base = small_primes(1 << math.isqrt(n_hi).bit_length())
        mark = np.ones(k1 - k0, dtype=bool)
        if k0 == 0 and a == 1:
            mark[0] = False
        for p in base.tolist():
            if p * p > n_hi:
                break
            if q % p == 0:
                continue
            r = (-a * pow(q, -1, p)) % p
            ks = max(k0, -(-(p * p - a) // q))
            ks += (r - ks) % p
            if ks < k1:
                mark[ks - k0 :: p] = False
        hits = np.flatnonzero(mark)
        if hits.size:
            return a + (k0 + int(hits[0])) * q
        k0, width = k1, min(2 * width, segment)
    return None


def naive_least_prime(a: int, q: int, limit: int = 10**9) -> Optional[int]:
    """Trial-division walk along the progression; an oracle for tests."""
    n = a
    while n <= limit:
        if n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1)):
            return n
        n += q
    return None


def scan_modulus(q: int, config: ScanConfig | None = None, stream: PrimeStream | None = None) -> ScanRecord:
    """Worst-case least prime over all unit residues mod ``q``.

    Walks consecutive prime segments, recording the first prime that lands in
    each residue class, until every class is covered or the cap is passed.
    """
    if q < 3:
        raise ValueError("modulus must be at least 3")
    config = config or ScanConfig(q_min=q, q_max=q)
    stream = stream or PrimeStream()
    cap = config.cap(q)
    q3, q2 = cubic_part(q)

    residues = np.arange(q, dtype=np.int64)
    open_ = np.gcd(residues, q) == 1
    remaining = int(open_.sum())
    first = np.zeros(q, dtype=np.int64)

    i = 0
    while remaining:
        lo, _ = stream.bounds(i)
        if lo > cap:
            break
        seg = stream.segment(i)
        if seg.size and seg[-1] > cap:
            seg = seg[seg <= cap]
        r = seg % q
        sel = open_[r]
        if sel.any():
            rr, idx = np.unique(r[sel], return_index=True)
            first[rr] = seg[sel][idx]
            open_[rr] = False
            remaining -= rr.size
        i += 1

    if remaining:
        worst = int(np.flatnonzero(open_)[0])
        return ScanRecord(q, q3, q2, worst, None, None, CAP_EXCEEDED)
    worst = int(np.argmax(first))
    p = int(first[worst])
    return ScanRecord(q, q3, q2, worst, p, math.log(p) / math.log(q), OK)


def _scan_chunk(args: tuple[ScanConfig, int, int]) -> list[ScanRecord]:
    config, lo, hi = args
    stream = PrimeStream()
    out = []
    for q in range(lo, hi + 1):
        if config.cubic_bound is not None and cubic_part(q)[0] > config.cubic_bound:
            continue
        out.append(scan_modulus(q, config, stream))
    return out


def _chunks(config: ScanConfig, size: int) -> list[tuple[ScanConfig, int, int]]:
    return [
        (config, lo, min(lo + size - 1, config.q_max))
        for lo in range(config.q_min, config.q_max + 1, size)
    ]


def iter_scan(config: ScanConfig, jobs: int = 1, chunk: int = 64) -> Iterator[ScanRecord]:
    """Records in ascending ``q``, independent of ``jobs``."""
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    chunks = _chunks(config, chunk)
    if jobs == 1 or len(chunks) == 1:
        for c in chunks:
            yield from _scan_chunk(c)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so the merge is schedule-independent
        for recs in pool.map(_scan_chunk, chunks):
            yield from recs


def scan_range(config: ScanConfig, jobs: int = 1) -> tuple[list[ScanRecord], ScanSummary]:
    summary = ScanSummary()
    records = []
    for rec in iter_scan(config, jobs):
        summary.update(rec, config)
        records.append(rec)
    return records, summary


def write_csv(records: Iterable[ScanRecord], fh, header: bool = True):
    w = csv.writer(fh, lineterminator="\n")
    if header:
        w.writerow(CSV_HEADER)
    for rec in records:
        w.writerow(rec.csv_row())


def to_csv(records: Iterable[ScanRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
