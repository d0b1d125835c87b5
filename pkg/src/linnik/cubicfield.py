"""Exact arithmetic in Q(rho), rho the real cube root of 3.

Elements are stored as ``x + y*rho + z*rho**2`` with rational coordinates.
Nothing here ever touches a float: signs are decided by bisecting an
enclosure of rho with rational endpoints until the interval value of the
element excludes zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

# Scalar substrate: fractions.Fraction is always reduced with a positive
# denominator, which is exactly the BigRational contract.
BigRational = Fraction

Scalar = Union[int, Fraction]


def _q(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


@dataclass(frozen=True)
class RhoEnclosure:
    """Rational interval ``lo < rho < hi``."""

    lo: Fraction = Fraction(1)
    hi: Fraction = Fraction(2)

    def __post_init__(self):
        if not (self.lo < self.hi and self.lo**3 < 3 < self.hi**3):
            raise ValueError(f"[{self.lo}, {self.hi}] does not enclose 3**(1/3)")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self) -> "RhoEnclosure":
        mid = (self.lo + self.hi) / 2
        # mid**3 == 3 is impossible for rational mid
        if mid**3 < 3:
            return RhoEnclosure(mid, self.hi)
        return RhoEnclosure(self.lo, mid)


_ENCLOSURE_CACHE: list[RhoEnclosure] = [RhoEnclosure()]


def rho_enclosure(steps: int) -> RhoEnclosure:
    """Enclosure after ``steps`` bisections of the initial [1, 2]."""
    while len(_ENCLOSURE_CACHE) <= steps:
        _ENCLOSURE_CACHE.append(_ENCLOSURE_CACHE[-1].refine())
    return _ENCLOSURE_CACHE[steps]


@dataclass(frozen=True, eq=False)
class CubicNumber:
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "x", _q(self.x))
        object.__setattr__(self, "y", _q(self.y))
        object.__setattr__(self, "z", _q(self.z))

    @classmethod
    def rho(cls) -> "CubicNumber":
        return cls(0, 1, 0)

    @classmethod
    def coerce(cls, v) -> "CubicNumber":
        if isinstance(v, CubicNumber):
            return v
        return cls(_q(v))

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def is_rational(self) -> bool:
        return self.y == 0 and self.z == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = CubicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"CubicNumber({self.x}, {self.y}, {self.z})"

    def __str__(self):
        return f"{self.x} + {self.y}*rho + {self.z}*rho^2"

    # ring operations -----------------------------------------------------

    def __add__(self, other):
        try:
            o = CubicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return CubicNumber(self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return CubicNumber(-self.x, -self.y, -self.z)

    def __sub__(self, other):
        try:
            o = CubicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return CubicNumber(self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other):
        return CubicNumber.coerce(other) - self

    def __mul__(self, other):
        try:
            o = CubicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        x1, y1, z1 = self.coords
        x2, y2, z2 = o.coords
        # rho**3 = 3, rho**4 = 3*rho
        return CubicNumber(
            x1 * x2 + 3 * (y1 * z2 + z1 * y2),
            x1 * y2 + y1 * x2 + 3 * z1 * z2,
            x1 * z2 + z1 * x2 + y1 * y2,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        x, y, z = self.coords
        return x**3 + 3 * y**3 + 9 * z**3 - 9 * x * y * z

    def inv(self) -> "CubicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(3**(1/3))")
        x, y, z = self.coords
        n = self.norm()
        return CubicNumber((x * x - 3 * y * z) / n, (3 * z * z - x * y) / n, (y * y - x * z) / n)

    def __truediv__(self, other):
        try:
            o = CubicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return CubicNumber.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = CubicNumber(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # real-number view ----------------------------------------------------

    def interval(self, enc: RhoEnclosure) -> tuple[Fraction, Fraction]:
        """Interval evaluation over ``rho`` in ``[enc.lo, enc.hi]``.

        rho > 0, so each monomial is monotone in rho and its extremes sit at
        the endpoints.
        """
        lo, hi = enc.lo, enc.hi
        ys = (self.y * lo, self.y * hi)
        zs = (self.z * lo * lo, self.z * hi * hi)
        return self.x + min(ys) + min(zs), self.x + max(ys) + max(zs)

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return (self.x > 0) - (self.x < 0)
        steps = 0
        while True:
            lo, hi = self.interval(rho_enclosure(steps))
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            steps += 1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def enclose(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """Rational interval of width < ``width`` containing the value."""
        if self.is_rational():
            return self.x, self.x
        steps = 0
        while True:
            lo, hi = self.interval(rho_enclosure(steps))
            if hi - lo < width:
                return lo, hi
            steps += 1

    def to_decimal(self, digits: int) -> str:
        return to_decimal(self, digits)

    def __float__(self):
        lo, hi = self.enclose(Fraction(1, 10**20))
        return float((lo + hi) / 2)


RHO = CubicNumber.rho()


def sign(u: CubicNumber) -> int:
    return CubicNumber.coerce(u).sign()


def inv(u: CubicNumber) -> CubicNumber:
    return CubicNumber.coerce(u).inv()


def _round_half_away(v: Fraction, scale: int) -> int:
    k = int(abs(v) * scale + Fraction(1, 2))
    return -k if v < 0 else k


def to_decimal(u, digits: int) -> str:
    """Decimal string within ``10**-digits`` of the true value.

    Rounds half away from zero. Irrational values never sit on a rounding
    tie, so the enclosure is refined until both endpoints round alike; the
    result is then correctly rounded as well.
    """
    if not isinstance(digits, int) or digits < 1:
        raise ValueError("digits must be a positive integer")
    u = CubicNumber.coerce(u)
    scale = 10**digits
    if u.is_rational():
        k = _round_half_away(u.x, scale)
    else:
        steps = 0
        while True:
            lo, hi = u.interval(rho_enclosure(steps))
            k = _round_half_away(lo, scale)
            if hi - lo < Fraction(1, scale) and k == _round_half_away(hi, scale):
                break
            steps += 1
    sign_ = "-" if k < 0 else ""
    whole, frac = divmod(abs(k), scale)
    return f"{sign_}{whole}.{frac:0{digits}d}"
