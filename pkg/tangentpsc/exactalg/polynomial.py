from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

import numpy as np
import sympy as sp

Rational = Fraction
Scalar = Union[int, Fraction]

T_SYMBOL = sp.Symbol('t')


def to_sympy(value: Scalar) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True, init=False, eq=False)
class Polynomial:
    """
    Univariate polynomial in t over QQ, stored as a sympy Poly.
    coeffs[i] is the coefficient of t^i as a Fraction; the zero polynomial has no coefficients.
    """
    poly: sp.Poly

    def __init__(self, coeffs: Union[Iterable[Scalar], sp.Poly] = ()):
        if isinstance(coeffs, sp.Poly):
            poly = coeffs.set_domain(sp.QQ)
        else:
            descending = [to_sympy(c) for c in reversed(list(coeffs))] or [sp.Integer(0)]
            poly = sp.Poly.from_list(descending, T_SYMBOL, domain=sp.QQ)
        object.__setattr__(self, 'poly', poly)

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [coefficient])

    @classmethod
    def t(cls) -> Polynomial:
        return cls([0, 1])

    @cached_property
    def coeffs(self) -> tuple[Fraction, ...]:
        if self.poly.is_zero:
            return ()
        return tuple(from_sympy(c) for c in reversed(self.poly.all_coeffs()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return -1 if self.poly.is_zero else int(self.poly.degree())

    @property
    def leading(self) -> Fraction:
        return from_sympy(self.poly.LC())

    def is_zero(self) -> bool:
        return bool(self.poly.is_zero)

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __call__(self, t0: Scalar) -> Fraction:
        return self.evaluate(t0)

    def evaluate(self, t0: Scalar) -> Fraction:
        # Horner on the cached Fraction coefficients, sampled in hot loops
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * t0 + c
        return result

    def evaluate_float(self, t0: float) -> float:
        return float(np.polynomial.polynomial.polyval(t0, [float(c) for c in self.coeffs] or [0.0]))

    def sign_at(self, t0: Scalar) -> int:
        value = self.evaluate(t0)
        return (value > 0) - (value < 0)

    def range_on(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """
        Enclosure of the values on [lo, hi] with 0 <= lo <= hi.
        Splits into positive and negative coefficient parts, both increasing on the half-line.
        """
        if lo < 0:
            raise ValueError(f"range_on needs a nonnegative interval, got [{lo}, {hi}]")
        positive = Polynomial(c if c > 0 else 0 for c in self.coeffs)
        negative = Polynomial(-c if c < 0 else 0 for c in self.coeffs)
        return positive(lo) - negative(hi), positive(hi) - negative(lo)

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-self.poly)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.poly - other.poly)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        return Polynomial(self.poly ** exponent)

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by the zero polynomial")
        quotient, remainder = self.poly.div(other.poly)
        return Polynomial(quotient), Polynomial(remainder)

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return quotient

    def scale(self, factor: Scalar) -> Polynomial:
        return Polynomial(self.poly.mul_ground(to_sympy(factor)))

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return Polynomial(self.poly.monic())

    def derivative(self) -> Polynomial:
        return Polynomial(self.poly.diff(T_SYMBOL))

    def gcd(self, other: Polynomial) -> Polynomial:
        """Monic greatest common divisor (zero only when both inputs are zero)."""
        return Polynomial(self.poly.gcd(other.poly)).monic()

    def squarefree_part(self) -> Polynomial:
        """Monic polynomial with the same distinct roots, all simple."""
        if self.degree <= 0:
            return self
        return Polynomial(self.poly.sqf_part()).monic()

    def compose_linear(self, shift: Scalar) -> Polynomial:
        """p(t + shift)."""
        return Polynomial(self.poly.shift(to_sympy(shift)))

    def cauchy_bound(self) -> Fraction:
        """Every real root lies in (-B, B)."""
        if self.degree <= 0:
            return Fraction(1)
        lead = abs(self.leading)
        return 1 + max(abs(c) / lead for c in self.coeffs[:-1])

    def to_expression(self) -> str:
        """Render in the metric expression grammar, ascending powers."""
        if self.is_zero():
            return "0"
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "t" if power == 1 else f"t^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_expression()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_expression()})"


T = Polynomial.t()
ZERO = Polynomial()
ONE = Polynomial.constant(1)
