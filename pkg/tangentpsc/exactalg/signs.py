from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from tangentpsc.exactalg.polynomial import Polynomial, Scalar
from tangentpsc.exactalg.ratfun import PoleError, RationalFunction
from tangentpsc.exactalg.roots import Domain, IsolatingInterval, count_real_roots, isolate_real_roots, refine_root


@dataclass(frozen=True)
class SignEvidence:
    """
    Outcome of checking p > 0 (strict) or p >= 0 on a half-line [lo, oo).
    root_count is None for the zero polynomial. On failure, witness is a rational point
    violating the condition; when the only violation is an irrational root, zero_interval isolates it.
    """
    strict: bool
    holds: bool
    lo: Fraction
    root_count: Optional[int]
    value_at_start: Fraction
    leading_sign: int
    witness: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None
    zero_interval: Optional[IsolatingInterval] = None


def simple_point_between(a: Fraction, b: Fraction) -> Fraction:
    """A short rational strictly inside (a, b): an integer when one fits, else the midpoint."""
    candidate = Fraction(math.floor(a) + 1)
    if candidate < b:
        return candidate
    return (a + b) / 2


def sample_points(p: Polynomial, lo: Fraction, intervals: list[IsolatingInterval]) -> list[Fraction]:
    """One rational point inside every root-free region of [lo, oo) cut out by the isolated roots."""
    if not intervals:
        return [lo]
    points = []
    if not (intervals[0].is_point and intervals[0].lo == lo):
        points.append(lo)
    for left, right in zip(intervals, intervals[1:]):
        points.append(simple_point_between(left.hi, right.lo))
    points.append(Fraction(math.floor(intervals[-1].hi) + 1))
    return points


def certify_sign(f: Union[RationalFunction, Polynomial], strict: bool = True, lo: Scalar = 0) -> SignEvidence:
    """
    Certify f > 0 (strict) or f >= 0 on [lo, oo).
    For a rational function the denominator must have no root on the half-line; it is then positive there
    because canonical denominators are monic.
    """
    lo = Fraction(lo)
    domain = Domain.half_line(lo)
    if isinstance(f, RationalFunction):
        if f.den.degree > 0 and count_real_roots(f.den, domain) > 0:
            raise PoleError(f"{f} has a pole on {domain}")
        p = f.num
    else:
        p = f

    if p.is_zero():
        return SignEvidence(strict=strict, holds=not strict, lo=lo, root_count=None,
                            value_at_start=Fraction(0), leading_sign=0,
                            witness=lo if strict else None, witness_value=Fraction(0) if strict else None)

    leading_sign = 1 if p.leading > 0 else -1
    # narrow intervals keep the test points between roots short
    intervals = [refine_root(p, interval, Fraction(1, 2)) for interval in isolate_real_roots(p, domain)]
    start_value = p(lo)
    evidence = dict(strict=strict, lo=lo, root_count=len(intervals),
                    value_at_start=start_value if isinstance(f, Polynomial) else f(lo), leading_sign=leading_sign)

    for point in sample_points(p, lo, intervals):
        value = p(point)
        if value < 0:
            witness_value = value if isinstance(f, Polynomial) else f(point)
            return SignEvidence(holds=False, witness=point, witness_value=witness_value, **evidence)

    if strict and intervals:
        first = intervals[0]
        if first.is_point:
            return SignEvidence(holds=False, witness=first.lo, witness_value=Fraction(0), **evidence)
        return SignEvidence(holds=False, zero_interval=first, **evidence)
    return SignEvidence(holds=True, **evidence)
