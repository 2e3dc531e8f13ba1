"""
Reproduction of the closed-form expressions displayed for the worked hyperbolic example
(a = 0.01, b = 1 + t over the hyperbolic plane), as exact rational-function identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from tangentpsc.curvature.formula import auxiliary_functions, f_terms, scalar_profile
from tangentpsc.exactalg import Polynomial, RationalFunction, derivative
from tangentpsc.metrics import HYPERBOLIC_PLANE, builtin

T = RationalFunction.t()


@dataclass(frozen=True)
class DisplayCheck:
    name: str
    displayed: RationalFunction
    computed: RationalFunction
    expected_mismatch: bool = False

    @property
    def matches(self) -> bool:
        return self.displayed == self.computed

    @property
    def consistent(self) -> bool:
        """A flagged display is consistent when it does NOT match the pipeline."""
        return self.matches != self.expected_mismatch


def check_worked_displays() -> list[DisplayCheck]:
    metric = builtin('paper')
    aux = auxiliary_functions(metric)
    terms = f_terms(aux)
    profile = scalar_profile(metric, HYPERBOLIC_PLANE)

    h = Fraction('0.01') + 2 * T * (1 + T)
    quintic = Polynomial(Fraction(c) for c in ('1.9998', '3.920197', '-8.0012', '-8.0412', '7.76', '7.88'))
    return [
        DisplayCheck('L', RationalFunction.constant(0), aux.L),
        DisplayCheck('M', (1 + T) / h, aux.M),
        DisplayCheck('N', 1 / (2 * h), aux.N),
        DisplayCheck("M'", (Fraction('0.01') - 2 * (1 + T) ** 2) / h ** 2, derivative(aux.M)),
        # displayed with 2t(1+t) in the numerator, the product of M and N gives t(1+t)
        DisplayCheck('2tMN', 2 * T * (1 + T) / h ** 2, 2 * T * aux.M * aux.N, expected_mismatch=True),
        DisplayCheck('F2', -(1 + T) / h, terms.F2),
        DisplayCheck('F3', ((1 + T) ** 2 - Fraction('0.005')) / h ** 2, terms.F3),
        DisplayCheck('Sc (intermediate)', -2 + Fraction('1.97') * T + (2 + 4 * T) / h ** 2, profile.sc),
        DisplayCheck('Sc (quintic)', RationalFunction(quintic) / h ** 2, profile.sc),
    ]


def displays_consistent(checks: list[DisplayCheck]) -> bool:
    return all(check.consistent for check in checks)
