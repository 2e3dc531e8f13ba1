from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from tangentpsc.exactalg.ratfun import (NEG_INF, POS_INF, ExtendedValue, PoleError, RationalFunction,
                                        derivative, limit_at_infinity)
from tangentpsc.exactalg.roots import HALF_LINE, IsolatingInterval, bisect_root, count_real_roots, isolate_real_roots
from tangentpsc.utils.logger_config import get_logger

DEFAULT_PRECISION = Fraction(1, 10 ** 6)


@dataclass(frozen=True)
class HalfLineMinimum:
    """
    Certified enclosure [lower_bound, upper_bound] of inf_{t >= 0} f(t).
    location is None when the infimum is only approached at infinity.
    """
    lower_bound: ExtendedValue
    upper_bound: ExtendedValue
    attained: bool
    location: Optional[IsolatingInterval]
    limit: ExtendedValue

    @property
    def unbounded(self) -> bool:
        return self.lower_bound == NEG_INF

    @property
    def width(self) -> ExtendedValue:
        if self.unbounded:
            return POS_INF
        return self.upper_bound - self.lower_bound


def range_enclosure(f: RationalFunction, interval: IsolatingInterval) -> Optional[tuple[Fraction, Fraction]]:
    """
    Rational interval enclosure of f on a nonnegative interval, None while the denominator enclosure
    still straddles zero.
    """
    if interval.is_point:
        value = f(interval.lo)
        return value, value
    num_lo, num_hi = f.num.range_on(interval.lo, interval.hi)
    den_lo, den_hi = f.den.range_on(interval.lo, interval.hi)
    if den_lo <= 0:
        return None
    candidates = (num_lo / den_lo, num_lo / den_hi, num_hi / den_lo, num_hi / den_hi)
    return min(candidates), max(candidates)


def _critical_enclosure(f: RationalFunction, critical, interval: IsolatingInterval, precision: Fraction,
                        cutoff: Fraction) -> tuple[Fraction, Fraction, IsolatingInterval]:
    # shrink until the enclosure is tight or provably above the best known value
    while True:
        enclosure = range_enclosure(f, interval)
        if enclosure is not None:
            lower, upper = enclosure
            if upper - lower <= precision or lower > cutoff:
                return lower, f(interval.midpoint), interval
        interval = bisect_root(critical, interval)


def minimize_on_halfline(f: RationalFunction, precision=DEFAULT_PRECISION) -> HalfLineMinimum:
    """
    Certified infimum of f over [0, oo). The infimum is the least of f(0), the values at critical points
    (roots of the derivative numerator in (0, oo)) and the limit at infinity; critical values are enclosed
    by bisecting their isolating intervals until the interval evaluation of f is precision-tight.
    """
    logger = get_logger()
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    if f.den.degree > 0 and count_real_roots(f.den, HALF_LINE) > 0:
        raise PoleError(f"{f} has a pole on [0, oo)")

    limit = limit_at_infinity(f)
    origin = IsolatingInterval(Fraction(0), Fraction(0))
    if f.is_constant():
        value = f(0)
        return HalfLineMinimum(value, value, attained=True, location=origin, limit=limit)
    if limit == NEG_INF:
        return HalfLineMinimum(NEG_INF, NEG_INF, attained=False, location=None, limit=limit)

    # best exact value seen so far, an upper bound of the infimum
    upper = f(0)
    lower = upper
    location: Optional[IsolatingInterval] = origin
    if limit < upper:
        upper = lower = limit
        location = None

    critical = derivative(f).num.squarefree_part()
    # a critical point at the origin is already covered by f(0)
    intervals = [] if critical.degree <= 0 else [
        interval for interval in isolate_real_roots(critical, HALF_LINE) if interval.hi > 0]
    logger.debug(f"Minimizing over {len(intervals)} critical intervals, precision {precision}")
    for interval in intervals:
        cell_lower, cell_value, refined = _critical_enclosure(f, critical, interval, precision, upper)
        if cell_value < upper:
            upper = cell_value
        if cell_lower < lower:
            lower = cell_lower
            location = refined

    lower = min(lower, upper)
    attained = location is not None
    return HalfLineMinimum(lower, upper, attained=attained, location=location, limit=limit)
