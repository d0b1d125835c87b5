"""Exact certificate for the lambda_3 > 1.15 lemma.

With ``P3(X) = X + X^2 + (2/3) X^3`` and parameters ``b = 23/20``,
``a = b / (rho - 1)``, the auxiliary function

    S(X) = P3(X/a) - P3(1) - 2 P3(X/(a+b)) + (3/4) X

has derivative ``c1 + c2 X + c3 X^2``.  If that quadratic has negative
discriminant and ``c1 > 0`` then S is strictly increasing, so
``S(a + lambda1) <= S(a + 17/20) < -1/200`` on the whole window
``3/5 < lambda1 <= 17/20``, and the inequality

    P3((a+l)/a) - P3(1) - 2 P3((a+l)/(a+b)) + (a+l)(3/4 + eps) >= 0

fails for every ``eps`` below the explicit threshold
``eps_max = -S(a + 17/20) / (a + 17/20)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .cubicfield import RHO, CubicNumber, to_decimal

THREE_QUARTERS = Fraction(3, 4)
TWO_THIRDS = Fraction(2, 3)
THRESHOLD = Fraction(-1, 200)
LAMBDA3_TARGET = Fraction(8, 7)

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class LemmaParameters:
    b: Fraction
    a: CubicNumber
    lambda1_low: Fraction = Fraction(3, 5)
    lambda1_high: Fraction = Fraction(17, 20)

    def __post_init__(self):
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "a", CubicNumber.coerce(self.a))
        object.__setattr__(self, "lambda1_low", Fraction(self.lambda1_low))
        object.__setattr__(self, "lambda1_high", Fraction(self.lambda1_high))

    @classmethod
    def from_b(cls, b=Fraction(23, 20), **kw) -> "LemmaParameters":
        """Choose ``a`` so that ``b = (rho - 1) a`` holds with equality."""
        b = Fraction(b)
        return cls(b=b, a=b * (RHO - 1).inv(), **kw)

    @classmethod
    def paper(cls) -> "LemmaParameters":
        return cls.from_b(Fraction(23, 20))

    def constraint_gap(self) -> CubicNumber:
        """``(rho - 1) a - b``; the window needs this to be >= 0."""
        return (RHO - 1) * self.a - self.b


def p3(X) -> CubicNumber:
    X = CubicNumber.coerce(X)
    X2 = X * X
    return X + X2 + TWO_THIRDS * X2 * X


def s_value(X, params: LemmaParameters) -> CubicNumber:
    X = CubicNumber.coerce(X)
    a, b = params.a, params.b
    return p3(X / a) - p3(1) - 2 * p3(X / (a + b)) + THREE_QUARTERS * X


def lhs_2_1(lambda1, epsilon, params: LemmaParameters) -> CubicNumber:
    """Left-hand side of the inequality that the lemma shows cannot hold."""
    a, b = params.a, params.b
    t = a + Fraction(lambda1)
    eps = Fraction(epsilon)
    value = p3(t / a) - p3(1) - 2 * p3(t / (a + b)) + t * (THREE_QUARTERS + eps)
    assert value == s_value(t, params) + eps * t
    return value


def s_prime_coeffs(params: LemmaParameters) -> tuple[CubicNumber, CubicNumber, CubicNumber]:
    a, b = params.a, params.b
    ab = a + b
    c1 = THREE_QUARTERS + 1 / a - 2 / ab
    c2 = 2 / a**2 - 4 / ab**2
    c3 = 2 / a**3 - 4 / ab**3
    if (c1, c2, c3) != expanded_derivative(params):
        raise ArithmeticError("closed-form derivative disagrees with expansion of S")
    return c1, c2, c3


def s_poly_coeffs(params: LemmaParameters) -> list[CubicNumber]:
    """Coefficients ``[k0, k1, k2, k3]`` of S as a cubic polynomial in X.

    Built by composing P3 with the linear maps X -> X/a and X -> X/(a+b)
    coefficient by coefficient, independently of the closed-form derivative.
    """
    p3_coeffs = [Fraction(0), Fraction(1), Fraction(1), TWO_THIRDS]

    def compose(scale: CubicNumber) -> list[CubicNumber]:
        return [CubicNumber(c) * scale**k for k, c in enumerate(p3_coeffs)]

    ia = compose(1 / params.a)
    iab = compose(1 / (params.a + params.b))
    coeffs = [u - 2 * v for u, v in zip(ia, iab)]
    coeffs[0] = coeffs[0] - p3(1)
    coeffs[1] = coeffs[1] + THREE_QUARTERS
    return coeffs


def expanded_derivative(params: LemmaParameters) -> tuple[CubicNumber, CubicNumber, CubicNumber]:
    k = s_poly_coeffs(params)
    return k[1], 2 * k[2], 3 * k[3]


def discriminant(params: LemmaParameters) -> CubicNumber:
    c1, c2, c3 = s_prime_coeffs(params)
    return c2 * c2 - 4 * c1 * c3


def discriminant_sign(params: LemmaParameters) -> int:
    return discriminant(params).sign()


def epsilon_max(params: LemmaParameters) -> CubicNumber:
    t = params.a + params.lambda1_high
    return -s_value(t, params) / t


@dataclass
class LemmaReport:
    c1: CubicNumber
    c2: CubicNumber
    c3: CubicNumber
    discriminant_sign: int
    c1_sign: int
    monotone_increasing: bool
    s_low: str
    s_high: str
    s_high_below_threshold: bool
    epsilon_max: str
    constraint_holds: bool
    constraint_tight: bool
    verdict: str
    digits: int = 6
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = asdict(self)
        for key in ("c1", "c2", "c3"):
            u = getattr(self, key)
            d[key] = {
                "decimal": to_decimal(u, self.digits),
                "exact": [str(v) for v in u.coords],
            }
        return d


def verify_lemma(params: LemmaParameters | None = None, digits: int = 6) -> LemmaReport:
    params = params or LemmaParameters.paper()
    c1, c2, c3 = s_prime_coeffs(params)
    disc = (c2 * c2 - 4 * c1 * c3).sign()
    c1_sign = c1.sign()
    # negative discriminant makes S' sign-definite; c1 = S'(0) fixes the sign
    monotone = disc < 0 and c1_sign > 0

    s_lo = s_value(params.a + params.lambda1_low, params)
    s_hi = s_value(params.a + params.lambda1_high, params)
    below = s_hi < THRESHOLD

    gap = params.constraint_gap().sign()
    notes = []
    if gap < 0:
        notes.append("b exceeds (rho - 1) a: hypothesis window is empty")
    if not monotone:
        notes.append("S is not certified monotone increasing")
    if not below:
        notes.append("S(a + lambda1_high) is not below -1/200")

    ok = disc < 0 and monotone and below and gap >= 0
    return LemmaReport(
        c1=c1,
        c2=c2,
        c3=c3,
        discriminant_sign=disc,
        c1_sign=c1_sign,
        monotone_increasing=monotone,
        s_low=to_decimal(s_lo, digits),
        s_high=to_decimal(s_hi, digits),
        s_high_below_threshold=below,
        epsilon_max=to_decimal(epsilon_max(params), digits),
        constraint_holds=gap >= 0,
        constraint_tight=gap == 0,
        verdict=PASS if ok else FAIL,
        digits=digits,
        notes=notes,
    )


def lambda1_grid(params: LemmaParameters, n: int = 26) -> list[Fraction]:
    """``n`` equally spaced rationals in ``(low, high]``, right end included."""
    step = (params.lambda1_high - params.lambda1_low) / n
    return [params.lambda1_low + k * step for k in range(1, n + 1)]
