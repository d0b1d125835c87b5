"""Exact certification of the lambda_3 lemma and least-prime scans for Linnik's constant."""

from .cubicfield import RHO, CubicNumber, RhoEnclosure, sign, to_decimal
from .lemma import LemmaParameters, LemmaReport, verify_lemma
from .primes import cubic_part, is_prime_u64
from .scanner import ScanConfig, ScanRecord, least_prime_in_ap, scan_modulus, scan_range
from .zeros import PAPER_TABLE, ZeroDensityTable, n_of_lambda, validate_table

__all__ = [
    "RHO",
    "CubicNumber",
    "RhoEnclosure",
    "sign",
    "to_decimal",
    "LemmaParameters",
    "LemmaReport",
    "verify_lemma",
    "cubic_part",
    "is_prime_u64",
    "ScanConfig",
    "ScanRecord",
    "least_prime_in_ap",
    "scan_modulus",
    "scan_range",
    "PAPER_TABLE",
    "ZeroDensityTable",
    "n_of_lambda",
    "validate_table",
]
