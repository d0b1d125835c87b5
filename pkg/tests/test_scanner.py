import math

import pytest
from hypothesis import given, settings, strategies as st

from linnik.primes import I64_MAX, is_prime_u64
from linnik.scanner import (
    CAP_EXCEEDED,
    CSV_HEADER,
    OK,
    InvalidResidue,
    ScanConfig,
    least_prime_in_ap,
    naive_least_prime,
    scan_modulus,
    scan_range,
    to_csv,
)


def brute_worst(q):
    """(worst residue, its least prime) by trial division over every unit residue."""
    best = None
    for a in range(1, q):
        if math.gcd(a, q) == 1:
            p = naive_least_prime(a, q)
            if best is None or p > best[1]:
                best = (a, p)
    return best


class TestLeastPrime:
    @pytest.mark.parametrize("a, q, p", [(2, 3, 2), (1, 3, 7), (1, 4, 5), (3, 4, 3), (1, 2, 3), (1, 100, 101)])
    def test_examples(self, a, q, p):
        assert least_prime_in_ap(a, q, 10**6) == p

    @pytest.mark.parametrize("a, q", [(2, 4), (0, 5), (5, 5), (-1, 5), (6, 9)])
    def test_invalid_residue(self, a, q):
        with pytest.raises(InvalidResidue):
            least_prime_in_ap(a, q, 10**6)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            least_prime_in_ap(1, 3, 2**63)

    def test_not_found(self):
        assert least_prime_in_ap(1, 3, 6) is None
        assert least_prime_in_ap(1, 3, 7) == 7
        assert least_prime_in_ap(10, 11, 9) is None

    def test_small_segments(self):
        # several segments needed before the first hit
        assert least_prime_in_ap(1, 5, 10**6, segment=2) == 11
        assert least_prime_in_ap(4, 5, 10**6, segment=1) == 19

    def test_large_modulus(self):
        q = 10**9 + 7
        p = least_prime_in_ap(2, q)
        assert is_prime_u64(p) and p % q == 2
        assert all(not is_prime_u64(2 + k * q) for k in range((p - 2) // q))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(2, 2000).flatmap(lambda q: st.tuples(st.integers(1, q - 1), st.just(q))))
    def test_matches_naive(self, aq):
        a, q = aq
        if math.gcd(a, q) != 1:
            return
        assert least_prime_in_ap(a, q) == naive_least_prime(a, q)


class TestScanModulus:
    def test_q5(self):
        r = scan_modulus(5)
        assert (r.q, r.q3, r.q2, r.worst_a, r.least_prime, r.status) == (5, 1, 5, 4, 19, OK)
        assert r.exponent == pytest.approx(math.log(19) / math.log(5), abs=1e-12)
        assert f"{r.exponent:.6f}" == "1.829483"

    def test_q3_q4(self):
        assert (scan_modulus(3).worst_a, scan_modulus(3).least_prime) == (1, 7)
        assert (scan_modulus(4).worst_a, scan_modulus(4).least_prime) == (1, 5)

    @pytest.mark.parametrize("q", [6, 8, 12, 27, 30, 64, 97, 210])
    def test_brute(self, q):
        r = scan_modulus(q)
        assert (r.worst_a, r.least_prime) == brute_worst(q)

    def test_cap_exceeded(self):
        cfg = ScanConfig(q_min=5, q_max=5, constant_C=0.01)
        r = scan_modulus(5, cfg)
        assert r.status == CAP_EXCEEDED and r.least_prime is None
        assert r.worst_a == 4

    def test_absolute_cap(self):
        cfg = ScanConfig(q_min=5, q_max=5, absolute_cap=18)
        assert scan_modulus(5, cfg).status == CAP_EXCEEDED
        cfg = ScanConfig(q_min=5, q_max=5, absolute_cap=19)
        assert scan_modulus(5, cfg).least_prime == 19


class TestScanRange:
    def test_small_range_vs_oracle(self):
        recs, summary = scan_range(ScanConfig(3, 100))
        assert len(recs) == 98 and summary.violations == 0
        assert [r.q for r in recs] == list(range(3, 101))
        for r in recs:
            assert (r.worst_a, r.least_prime) == brute_worst(r.q)

    def test_record_invariants(self):
        recs, _ = scan_range(ScanConfig(3, 400))
        for r in recs:
            assert r.q3**3 * r.q2 == r.q
            assert math.gcd(r.worst_a, r.q) == 1
            assert r.least_prime % r.q == r.worst_a and is_prime_u64(r.least_prime)
            per_residue = [least_prime_in_ap(a, r.q) for a in range(1, r.q) if math.gcd(a, r.q) == 1]
            assert max(per_residue) == r.least_prime

    def test_cubic_filter(self):
        recs, _ = scan_range(ScanConfig(3, 100, cubic_bound=1))
        assert all(r.q3 == 1 for r in recs)
        assert {r.q for r in recs} == {q for q in range(3, 101) if all(q % (c**3) for c in range(2, 5))}

    def test_single(self):
        recs, summary = scan_range(ScanConfig(5, 5))
        assert to_csv(recs) == "q,q3,q2,worst_a,least_prime,exponent,status\n5,1,5,4,19,1.829483,OK\n"
        assert summary.max_exponent_q == 5

    def test_violations_counted(self):
        _, summary = scan_range(ScanConfig(3, 20, exponent_bound=1.5))
        brute = [q for q in range(3, 21) if brute_worst(q)[1] > q**1.5]
        assert summary.violations == len(brute) > 0

    def test_determinism(self):
        cfg = ScanConfig(3, 700)
        outs = {to_csv(scan_range(cfg, jobs=j)[0]) for j in (1, 2, 8)}
        assert len(outs) == 1

    def test_header(self):
        assert ",".join(CSV_HEADER) == "q,q3,q2,worst_a,least_prime,exponent,status"

    @pytest.mark.parametrize(
        "kw",
        [dict(q_min=2), dict(q_min=10, q_max=3), dict(exponent_bound=1.0), dict(absolute_cap=I64_MAX + 1)],
    )
    def test_config_validation(self, kw):
        with pytest.raises((ValueError, OverflowError)):
            ScanConfig(**{"q_min": 3, "q_max": 10, **kw})
