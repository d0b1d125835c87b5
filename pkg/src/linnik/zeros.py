"""Rescaled zero coordinates and the tabulated N(lambda) data for lambda1 = 0.85.

The H0 bound is carried as an opaque claim: nothing here computes it.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from fractions import Fraction


class NotTabulated(KeyError):
    pass


def _ell(q: int) -> float:
    if q < 3:
        raise ValueError("modulus must be at least 3")
    return math.log(q)


def to_lambda_mu(beta: float, gamma: float, q: int) -> tuple[float, float]:
    ell = _ell(q)
    return (1.0 - beta) * ell, gamma * ell


def from_lambda_mu(lam: float, mu: float, q: int) -> tuple[float, float]:
    ell = _ell(q)
    return 1.0 - lam / ell, mu / ell


@dataclass(frozen=True)
class ZeroCoordinates:
    beta: float
    gamma: float
    q: int

    def __post_init__(self):
        if not 0 < self.beta <= 1:
            raise ValueError("beta must lie in (0, 1]")
        _ell(self.q)

    @property
    def ell(self) -> float:
        return math.log(self.q)

    @property
    def lam(self) -> float:
        return to_lambda_mu(self.beta, self.gamma, self.q)[0]

    @property
    def mu(self) -> float:
        return to_lambda_mu(self.beta, self.gamma, self.q)[1]


def _rational(x) -> Fraction:
    if isinstance(x, float):
        # 0.9 means the decimal 9/10, not the nearest binary double
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class ZeroDensityTable:
    lambda1: Fraction
    entries: tuple[tuple[Fraction, int], ...]
    h0_claim: float = 0.9
    lambda3_threshold: Fraction = Fraction(8, 7)
    provenance: str = field(default="", compare=False)

    def digest(self) -> str:
        head = f"lambda1={self.lambda1};h0={self.h0_claim!r};lambda3={self.lambda3_threshold}\n"
        return hashlib.sha256((head + table_csv(self)).encode()).hexdigest()


PAPER_TABLE = ZeroDensityTable(
    lambda1=Fraction(17, 20),
    entries=tuple(
        (Fraction(lam), n)
        for lam, n in [
            ("0.9", 5),
            ("1.0", 6),
            ("1.1", 7),
            ("1.2", 9),
            ("1.3", 12),
            ("1.4", 16),
            ("1.5", 23),
        ]
    ),
    h0_claim=0.9,
    provenance="N(lambda) bounds for lambda1 = 0.85 with phi = 1/4; H0 < 0.9 claimed for case (a1), not derived here",
)


def n_of_lambda(table: ZeroDensityTable, lam) -> int:
    key = _rational(lam)
    for x, n in table.entries:
        if x == key:
            return n
    raise NotTabulated(f"lambda = {lam} is not tabulated")


def validate_table(table: ZeroDensityTable) -> bool:
    entries = table.entries
    if not entries:
        return True
    for (x0, n0), (x1, n1) in zip(entries, entries[1:]):
        if not (x0 < x1 and n0 <= n1):
            return False
    xs = [x for x, _ in entries]
    t = table.lambda3_threshold
    return xs[0] < t < xs[-1] and t not in xs


def table_csv(table: ZeroDensityTable) -> str:
    rows = ["lambda,N"]
    rows += [f"{_fmt(x)},{n}" for x, n in table.entries]
    return "\n".join(rows) + "\n"


def _fmt(x: Fraction) -> str:
    # tabulated abscissae are tenths; anything finer is written as a fraction
    return f"{float(x):.1f}" if 10 % x.denominator == 0 else str(x)


PAPER_TABLE_DIGEST = "03915984fed701f7b2545446a113290269441806e252b9105ef1ae680866e92f"


def validate_provenance(table: ZeroDensityTable) -> bool:
    return table.digest() == PAPER_TABLE_DIGEST
