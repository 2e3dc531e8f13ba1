from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from tangentpsc.exactalg import ONE, ExtendedValue, Polynomial, RationalFunction, derivative, limit_at_infinity
from tangentpsc.metrics import GNaturalMetric, SpaceForm, require_valid

T = RationalFunction.t()


@dataclass(frozen=True)
class AuxiliaryFunctions:
    """
    L = a' / (2a)
    M = (2b - a') / (2 alpha)
    N = (a b' - 2 a' b) / (2 a alpha)
    """
    L: RationalFunction
    M: RationalFunction
    N: RationalFunction


@dataclass(frozen=True)
class FTerms:
    F2: RationalFunction
    F3: RationalFunction


@dataclass(frozen=True)
class ScalarProfile:
    """Scalar curvature of a metric on TM over a space form, as an exact function of t = g(U, U) / 2."""
    sc: RationalFunction
    n: int
    C: Fraction
    metric: GNaturalMetric = field(compare=False)

    @property
    def presentation_denominator(self) -> Polynomial:
        """
        A denominator built from the metric's own factors: the squared numerators of a and alpha
        (those of positive degree), completed to a multiple of the canonical denominator.
        """
        reference = ONE
        for factor in (self.metric.a.num, self.metric.alpha.num):
            if factor.degree > 0:
                reference = reference * factor ** 2
        missing = self.sc.den.exact_div(self.sc.den.gcd(reference))
        return reference * missing

    @property
    def presentation_numerator(self) -> Polynomial:
        return self.sc.numerator_over(self.presentation_denominator)

    def __call__(self, t0) -> Fraction:
        return self.sc(t0)


def auxiliary_functions(m: GNaturalMetric) -> AuxiliaryFunctions:
    require_valid(m)
    a, b, alpha = m.a, m.b, m.alpha
    da, db = derivative(a), derivative(b)
    return AuxiliaryFunctions(L=da / (2 * a),
                              M=(2 * b - da) / (2 * alpha),
                              N=(a * db - 2 * da * b) / (2 * a * alpha))


def f_terms(aux: AuxiliaryFunctions) -> FTerms:
    L, M, N = aux.L, aux.M, aux.N
    return FTerms(F2=L - M * (1 + 2 * T * L),
                  F3=N - (derivative(M) + M * M + 2 * T * M * N))


def scalar_profile(m: GNaturalMetric, sf: SpaceForm) -> ScalarProfile:
    """
    Sc = (n-1) { nC + t (2 - 3a) C^2 - (n F2 + 4t F3) / a } for the unscaled metric,
    then divided by the global scale.
    """
    n, C = sf.n, sf.C
    terms = f_terms(auxiliary_functions(m))
    a = m.a
    sc = (n - 1) * (n * C + T * (2 - 3 * a) * C ** 2 - (n * terms.F2 + 4 * T * terms.F3) / a)
    return ScalarProfile(sc=sc / m.scale, n=n, C=C, metric=m)


def oracle_residual(m: GNaturalMetric, sf: SpaceForm) -> RationalFunction:
    """
    Closed form minus the curvature of the assembled metric on TM: 2(n-1)(1 - a) t C^2 / scale.
    The closed form carries t (2 - 3a) C^2 where the horizontal distribution of the metric contributes -a t C^2;
    the two agree when a = 1 or C = 0.
    """
    require_valid(m)
    return 2 * (sf.n - 1) * sf.C ** 2 * (1 - m.a) * T / m.scale


@dataclass(frozen=True)
class GrowthComparison:
    numerator_degree: int
    denominator_degree: int
    limit: ExtendedValue

    @property
    def numerator_dominates(self) -> bool:
        return self.numerator_degree > self.denominator_degree and self.limit > 0


def growth_comparison(profile: ScalarProfile) -> GrowthComparison:
    """Degrees of the presented numerator g and denominator h, and the limit of g/h at infinity."""
    return GrowthComparison(numerator_degree=profile.presentation_numerator.degree,
                            denominator_degree=profile.presentation_denominator.degree,
                            limit=limit_at_infinity(profile.sc))
