import math
from fractions import Fraction

import pytest

ORACLE_DIGITS = 60


def icbrt(n):
    """floor(n ** (1/3)) by integer bisection."""
    lo, hi = 0, 1 << (n.bit_length() // 3 + 2)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**3 <= n:
            lo = mid
        else:
            hi = mid
    return lo


# rho to 60 digits, truncated: RHO_LO <= rho < RHO_LO + 10**-60
_R = icbrt(3 * 10 ** (3 * ORACLE_DIGITS))
RHO_LO = Fraction(_R, 10**ORACLE_DIGITS)
RHO_HI = Fraction(_R + 1, 10**ORACLE_DIGITS)


def oracle_value(x, y, z):
    """Numeric value of x + y*rho + z*rho^2, good to roughly 50 digits."""
    r = (RHO_LO + RHO_HI) / 2
    return Fraction(x) + Fraction(y) * r + Fraction(z) * r * r


def oracle_sign(x, y, z):
    v = oracle_value(x, y, z)
    bound = (abs(Fraction(y)) + 4 * abs(Fraction(z))) * (RHO_HI - RHO_LO)
    if abs(v) <= bound:
        raise AssertionError("oracle cannot resolve this sign")
    return 1 if v > 0 else -1


def oracle_decimal(value, digits):
    """Round half away from zero to ``digits`` places."""
    scale = 10**digits
    k = math.floor(abs(value) * scale + Fraction(1, 2))
    s = f"{k // scale}.{k % scale:0{digits}d}"
    return "-" + s if value < 0 and k else s


@pytest.fixture
def paper_params():
    from linnik.lemma import LemmaParameters

    return LemmaParameters.paper()


_ACCEPTANCE: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and (rep.when == "call" or rep.failed or rep.skipped):
        if rep.when == "call" or rep.outcome != "passed":
            _ACCEPTANCE.append((marker.args[0], rep.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
