"""
The q-exponential f(x) = sum_k x^k / ((q - q^-1)^k (k)_{q^-2}!) and its dilogarithm limit

Exactly, f(q^2 x)(1 - q x) = f(x) as truncated series. Numerically, with q = e^t,

    log f(x)  = Li2(x) / 2t + O(t)
    log f(qx) = Li2(x) / 2t - log(1 - x) / 2 + O(t)

The first is a midpoint sum of -log(1 - e^-s x), the second a trapezoid sum, so
only the shifted argument picks up the half-endpoint term.
"""

import math
from typing import Iterable, List, Sequence

import mpmath

from ncyb.core.report import Check, compare, failed, passed
from ncyb.ring.series import TruncSeries, li2, q_exp_series, series_substitute_scaled
from ncyb.ring.tower import gen, q_power, qfield
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

SLOPE_TS = (1e-2, 1e-3, 1e-4)
SLOPE_XS = (0.25, 0.5)
SLOPE_RATIO = 4.0
TAIL = 1e-18


def log_qexp(x: float, t: float, shift: int = 0) -> float:
    """log f(q^shift x) at q = e^t from the product sum_j -log(1 - x q^(shift - 2j - 1))."""
    if not 0 <= x < 1 or t <= 0:
        raise ValueError("need 0 <= x < 1 and t > 0")
    terms = []
    j = 0
    while True:
        y = x * math.exp(-(2 * j + 1 - shift) * t)
        if y < TAIL:
            break
        terms.append(-math.log1p(-y))
        j += 1
    return math.fsum(terms)


def dilog_approximation(x: float, t: float, shift: int = 0) -> float:
    base = li2(x) / (2 * t)
    if shift:
        base -= 0.5 * math.log1p(-x)
    return base


def series_checks(order: int) -> List[Check]:
    K = qfield()
    q = gen(K, "q")
    f = q_exp_series(order, K)
    one_minus_qx = TruncSeries.from_coefficients([K.one, -q], order, K)
    anchor = "q-exponential functional equation"
    checks = [
        compare(
            f"K={order}: f(x q^2)(1 - q x) = f(x)",
            anchor,
            series_substitute_scaled(f, q_power(2, K)) * one_minus_qx,
            f,
            equals=lambda a, b: a == b,
        ),
        compare(
            "coefficient of x in f is 1/(q - q^-1)",
            "q-exponential expansion",
            f.coefficient(1),
            K.one / (q - 1 / q),
        ),
    ]
    return checks


def slope_check(x: float, shift: int, ts: Sequence[float] = SLOPE_TS) -> Check:
    """error(t)/t stays within a factor SLOPE_RATIO across ts."""
    label = "f(qx)" if shift else "f(x)"
    name = f"x={x}: log {label} - dilogarithm limit is O(t)"
    anchor = "dilogarithm asymptotics"
    slopes = [abs(log_qexp(x, t, shift) - dilog_approximation(x, t, shift)) / t for t in ts]
    detail = {"t": list(ts), "error_over_t": slopes, "fitted_C": max(slopes)}
    if min(slopes) == 0 or max(slopes) / min(slopes) > SLOPE_RATIO:
        return failed(name, anchor, detail)
    return passed(name, anchor, detail)


def small_x_check(t: float = 1e-2, x: float = 1e-8) -> Check:
    """log f(x) = x / (2 sinh t) + O(x^2)."""
    lhs, rhs = log_qexp(x, t), x / (2 * math.sinh(t))
    name = f"t={t}: log f(x) ~ x / 2 sinh t"
    if math.isclose(lhs, rhs, rel_tol=1e-6):
        return passed(name, "q-exponential expansion")
    return failed(name, "q-exponential expansion", {"lhs": repr(lhs), "rhs": repr(rhs)})


def li2_checks(xs: Iterable[float] = (-2.0, -0.75, -0.3, 0.1, 0.25, 0.5, 0.7, 0.95)) -> List[Check]:
    checks = []
    for x in xs:
        ours, ref = li2(x), float(mpmath.polylog(2, x))
        name = f"li2({x}) against mpmath"
        if math.isclose(ours, ref, rel_tol=1e-12, abs_tol=1e-14):
            checks.append(passed(name, "dilogarithm"))
        else:
            checks.append(failed(name, "dilogarithm", {"ours": repr(ours), "mpmath": repr(ref)}))
    return checks


def qexp_series_checks(
    order: int = 12, xs: Sequence[float] = SLOPE_XS, ts: Sequence[float] = SLOPE_TS
) -> List[Check]:
    """Exact functional equation, then the numeric dilogarithm limit."""
    if order < 2:
        raise ValueError("truncation order must be at least 2")
    checks = series_checks(order)
    checks.extend(li2_checks())
    checks.append(small_x_check())
    for x in xs:
        for shift in (0, 1):
            checks.append(slope_check(x, shift, ts))
    logger.info("q-exponential checks done", order=order, checks=len(checks))
    return checks
