from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from tangentpsc.exactalg.polynomial import Polynomial, Scalar

ExtendedValue = Union[Fraction, float]  # finite Fraction, or +/- math.inf
POS_INF = math.inf
NEG_INF = -math.inf


class PoleError(ValueError):
    """Raised when a rational function is evaluated at, or minimized across, a root of its denominator."""


@dataclass(frozen=True, init=False)
class RationalFunction:
    """
    Exact num/den in t, always canonical: gcd(num, den) = 1 and den monic.
    Two RationalFunctions are equal as functions iff their fields are equal.
    """
    num: Polynomial
    den: Polynomial

    def __init__(self, num: Union[Polynomial, Scalar], den: Union[Polynomial, Scalar] = 1):
        num = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        den = den if isinstance(den, Polynomial) else Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("RationalFunction with a zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial.constant(1)
        else:
            cancelled_num, cancelled_den = num.poly.cancel(den.poly, include=True)
            num, den = Polynomial(cancelled_num), Polynomial(cancelled_den)
            lead = den.leading
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    @classmethod
    def constant(cls, value: Scalar) -> RationalFunction:
        return cls(Polynomial.constant(value))

    @classmethod
    def t(cls) -> RationalFunction:
        return cls(Polynomial.t())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    @staticmethod
    def _coerce(other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> RationalFunction:
        if exponent < 0:
            return RationalFunction(self.den ** -exponent, self.num ** -exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def derivative(self) -> RationalFunction:
        return derivative(self)

    def evaluate(self, t0: Scalar) -> Fraction:
        return evaluate(self, t0)

    def __call__(self, t0: Scalar) -> Fraction:
        return evaluate(self, t0)

    def evaluate_float(self, t0: float) -> float:
        return self.num.evaluate_float(t0) / self.den.evaluate_float(t0)

    def numerator_over(self, reference: Polynomial) -> Polynomial:
        """The polynomial g with self = g / reference; reference must be a multiple of den."""
        return self.num * reference.exact_div(self.den)

    def to_expression(self) -> str:
        """Grammar-valid text that parses back to this function."""
        if self.den == Polynomial.constant(1):
            return self.num.to_expression()
        return f"({self.num.to_expression()})/({self.den.to_expression()})"

    def __str__(self) -> str:
        return self.to_expression()


def derivative(f: RationalFunction) -> RationalFunction:
    """Quotient rule, returned in canonical form."""
    if f.is_polynomial():
        return RationalFunction(f.num.derivative(), f.den)
    return RationalFunction(f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den)


def evaluate(f: RationalFunction, t0: Scalar) -> Fraction:
    denominator = f.den(t0)
    if denominator == 0:
        raise PoleError(f"{f} has a pole at t = {t0}")
    return f.num(t0) / denominator


def limit_at_infinity(f: RationalFunction) -> ExtendedValue:
    if f.is_zero() or f.num.degree < f.den.degree:
        return Fraction(0)
    ratio = f.num.leading / f.den.leading
    if f.num.degree == f.den.degree:
        return ratio
    return POS_INF if ratio > 0 else NEG_INF


def format_extended(value: ExtendedValue) -> str:
    if value == POS_INF:
        return "+inf"
    if value == NEG_INF:
        return "-inf"
    return str(value)
