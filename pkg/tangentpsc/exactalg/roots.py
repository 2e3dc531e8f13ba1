"""
Real-root counting and isolation on top of sympy's Sturm sequences and interval isolation.

All counts are of DISTINCT roots: every routine works on the squarefree part p / gcd(p, p').
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from tangentpsc.exactalg.polynomial import Polynomial, Scalar, from_sympy, to_sympy


@dataclass(frozen=True)
class Domain:
    """The closed interval [lo, hi], or the half-line [lo, oo) when hi is None."""
    lo: Fraction = Fraction(0)
    hi: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, 'lo', Fraction(self.lo))
        if self.hi is not None:
            object.__setattr__(self, 'hi', Fraction(self.hi))
            if self.hi < self.lo:
                raise ValueError(f"Empty domain [{self.lo}, {self.hi}]")

    @classmethod
    def half_line(cls, lo: Scalar = 0) -> Domain:
        return cls(Fraction(lo), None)

    @classmethod
    def interval(cls, lo: Scalar, hi: Scalar) -> Domain:
        return cls(Fraction(lo), Fraction(hi))

    @property
    def bounded(self) -> bool:
        return self.hi is not None

    def upper_for(self, p: Polynomial) -> Fraction:
        """hi, or a Cauchy bound of p when the domain is a half-line."""
        if self.hi is not None:
            return self.hi
        return max(self.lo, p.cauchy_bound())

    def __str__(self) -> str:
        return f"[{self.lo}, {'oo' if self.hi is None else self.hi}]"


HALF_LINE = Domain.half_line(0)


@dataclass(frozen=True)
class IsolatingInterval:
    """[lo, hi] holding exactly one root of the target polynomial; lo == hi for an exact rational root."""
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"Invalid isolating interval [{self.lo}, {self.hi}]")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, t0: Scalar) -> bool:
        return self.lo <= t0 <= self.hi


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    """Sturm sequence of the squarefree part of p, ending in a nonzero constant."""
    return [Polynomial(q) for q in p.poly.sturm()]


def _squarefree(p: Polynomial) -> Polynomial:
    if p.is_zero():
        raise ValueError("Root counting is undefined for the zero polynomial")
    return p.squarefree_part()


def _bounds(squarefree: Polynomial, domain: Domain):
    return to_sympy(domain.lo), to_sympy(domain.upper_for(squarefree))


def count_real_roots(p: Polynomial, domain: Domain = HALF_LINE) -> int:
    """
    Number of distinct real roots of p in the closed domain.
    A half-line [lo, oo) is cut at the Cauchy bound of p, beyond which p has the sign of its leading coefficient.
    """
    squarefree = _squarefree(p)
    if squarefree.degree <= 0:
        return 0
    lo, hi = _bounds(squarefree, domain)
    return int(squarefree.poly.count_roots(lo, hi))


def _as_interval(squarefree: Polynomial, lo, hi) -> IsolatingInterval:
    lo, hi = from_sympy(lo), from_sympy(hi)
    # rational roots that land on an endpoint become point intervals
    if squarefree(lo) == 0:
        return IsolatingInterval(lo, lo)
    if squarefree(hi) == 0:
        return IsolatingInterval(hi, hi)
    return IsolatingInterval(lo, hi)


def isolate_real_roots(p: Polynomial, domain: Domain = HALF_LINE) -> list[IsolatingInterval]:
    """
    Pairwise-disjoint isolating intervals, in increasing order, one per distinct real root in the domain.
    Non-point intervals have endpoints where the squarefree part is nonzero with opposite signs.
    """
    squarefree = _squarefree(p)
    if squarefree.degree <= 0:
        return []
    lo, hi = _bounds(squarefree, domain)
    intervals = sorted((_as_interval(squarefree, s, t) for s, t in squarefree.poly.intervals(inf=lo, sup=hi, sqf=True)),
                       key=lambda interval: (interval.lo, interval.hi))
    # neighbours may share an endpoint that is not a root
    for i in range(len(intervals) - 1):
        while intervals[i].hi >= intervals[i + 1].lo:
            intervals[i] = _halve(squarefree, intervals[i])
    return intervals


def _halve(squarefree: Polynomial, interval: IsolatingInterval) -> IsolatingInterval:
    return _refine(squarefree, interval, interval.width / 2)


def _refine(squarefree: Polynomial, interval: IsolatingInterval, width: Fraction) -> IsolatingInterval:
    if interval.is_point or interval.width <= width:
        return interval
    s, t = squarefree.poly.refine_root(to_sympy(interval.lo), to_sympy(interval.hi), eps=to_sympy(width))
    return _as_interval(squarefree, s, t)


def refine_root(p: Polynomial, interval: IsolatingInterval, width: Scalar) -> IsolatingInterval:
    """Shrink an isolating interval of p until it is no wider than width."""
    return _refine(p.squarefree_part(), interval, Fraction(width))


def bisect_root(squarefree: Polynomial, interval: IsolatingInterval) -> IsolatingInterval:
    """One halving step on an isolating interval of an already squarefree polynomial."""
    return _halve(squarefree, interval)
