from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from tangentpsc.exactalg import (DEFAULT_PRECISION, HALF_LINE, NEG_INF, POS_INF, ExtendedValue, RationalFunction,
                                 Scalar, SignEvidence, certify_sign, count_real_roots, minimize_on_halfline)
from tangentpsc.utils.logger_config import get_logger

T = RationalFunction.t()


class UnknownMetricError(ValueError):
    """Raised for a builtin metric name that does not exist."""


class InvalidMetricError(ValueError):
    """Raised when a metric fails the nondegeneracy check where a valid metric is required."""

    def __init__(self, message: str, metric: GNaturalMetric, certificate: NondegeneracyCertificate):
        super().__init__(message)
        self.metric = metric
        self.certificate = certificate


@dataclass(frozen=True)
class GNaturalMetric:
    """
    The metric on TM equal to scale * g on horizontal lifts, zero on mixed pairs and
    scale * (a(t) g(X, Y) + b(t) g(X, U) g(Y, U)) on vertical lifts, where t = g(U, U) / 2.
    """
    a: RationalFunction
    b: RationalFunction
    scale: Fraction = Fraction(1)
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'scale', Fraction(self.scale))
        if self.scale <= 0:
            raise ValueError(f"The scale of a metric must be positive, got {self.scale}")

    @property
    def alpha(self) -> RationalFunction:
        """a(t) + 2t b(t), the vertical eigenvalue along U (g(U, U) = 2t)."""
        return self.a + 2 * T * self.b

    def with_scale(self, scale: Scalar) -> GNaturalMetric:
        return replace(self, scale=Fraction(scale))

    def vertical_eigenvalues(self, t0: Scalar) -> tuple[Fraction, Fraction]:
        """(a(t0), alpha(t0)): eigenvalue on the orthogonal complement of U and along U, before scaling."""
        return self.a(t0), self.alpha(t0)

    def quadratic_form(self, t0: Scalar, perp_norm_sq: Scalar, radial_norm_sq: Scalar) -> Fraction:
        """Vertical quadratic form on v = v_perp + v_U, given |v_perp|^2 and |v_U|^2."""
        a_value, alpha_value = self.vertical_eigenvalues(t0)
        return self.scale * (a_value * perp_norm_sq + alpha_value * radial_norm_sq)

    def __str__(self) -> str:
        label = self.name or "custom"
        return f"{label}(a={self.a}, b={self.b}, scale={self.scale})"


def builtin(name: str) -> GNaturalMetric:
    """
    The named members of the family:
    paper -> a = 1/100, b = 1 + t; cheeger-gromoll -> a = b = 1/(1+2t); sasaki -> a = 1, b = 0.
    """
    if name == 'paper':
        return GNaturalMetric(RationalFunction.constant(Fraction(1, 100)), 1 + T, name=name)
    if name == 'cheeger-gromoll':
        weight = 1 / (1 + 2 * T)
        return GNaturalMetric(weight, weight, name=name)
    if name == 'sasaki':
        return GNaturalMetric(RationalFunction.constant(1), RationalFunction.constant(0), name=name)
    raise UnknownMetricError(f"Unknown builtin metric '{name}', expected one of {', '.join(BUILTIN_NAMES)}")


BUILTIN_NAMES = ('paper', 'cheeger-gromoll', 'sasaki')


@dataclass(frozen=True)
class NondegeneracyCertificate:
    """
    Evidence that the vertical block is positive definite for every t >= 0:
    a(t) > 0 and alpha(t) > 0, with no pole of a or b on [0, oo).
    """
    pole_count: int
    a_positive: Optional[SignEvidence]
    alpha_positive: Optional[SignEvidence]

    @property
    def valid(self) -> bool:
        return (self.pole_count == 0 and self.a_positive is not None and self.a_positive.holds
                and self.alpha_positive is not None and self.alpha_positive.holds)

    @property
    def failed(self) -> Optional[str]:
        if self.pole_count:
            return 'poles'
        if not self.a_positive.holds:
            return 'a'
        if not self.alpha_positive.holds:
            return 'alpha'
        return None

    @property
    def witness(self) -> Optional[Fraction]:
        evidence = {'a': self.a_positive, 'alpha': self.alpha_positive}.get(self.failed)
        return None if evidence is None else evidence.witness


def validate(m: GNaturalMetric) -> NondegeneracyCertificate:
    """Certify positive-definiteness of m or return a refutation with a witness t* >= 0."""
    poles = sum(count_real_roots(f.den, HALF_LINE) for f in (m.a, m.b) if f.den.degree > 0)
    if poles:
        return NondegeneracyCertificate(pole_count=poles, a_positive=None, alpha_positive=None)
    return NondegeneracyCertificate(pole_count=0,
                                    a_positive=certify_sign(m.a, strict=True),
                                    alpha_positive=certify_sign(m.alpha, strict=True))


def require_valid(m: GNaturalMetric) -> NondegeneracyCertificate:
    certificate = validate(m)
    if not certificate.valid:
        raise InvalidMetricError(f"{m} is not a Riemannian metric: check '{certificate.failed}' fails"
                                 f" at t = {certificate.witness}", m, certificate)
    return certificate


@dataclass(frozen=True)
class DominationResult:
    """
    Whether m1 >= m2 as quadratic forms at every point. The forms share the horizontal, U-perp and U
    eigenspaces, so the comparison is three univariate inequalities.
    """
    holds: bool
    failed_component: Optional[str]
    witness: Optional[Fraction]
    horizontal: bool
    perp: SignEvidence
    radial: SignEvidence


def dominates(m1: GNaturalMetric, m2: GNaturalMetric) -> DominationResult:
    """
    m1 >= m2 iff scale1 >= scale2, scale1 a1 >= scale2 a2 and scale1 alpha1 >= scale2 alpha2 on [0, oo).
    Both metrics must be valid.
    """
    require_valid(m1)
    require_valid(m2)
    horizontal = m1.scale >= m2.scale
    perp = certify_sign(m1.scale * m1.a - m2.scale * m2.a, strict=False)
    radial = certify_sign(m1.scale * m1.alpha - m2.scale * m2.alpha, strict=False)
    if not horizontal:
        failed, witness = 'horizontal', Fraction(0)
    elif not perp.holds:
        failed, witness = 'perp', perp.witness
    elif not radial.holds:
        failed, witness = 'radial', radial.witness
    else:
        failed, witness = None, None
    get_logger().debug(f"Domination {m1} >= {m2}: failed component {failed}")
    return DominationResult(holds=failed is None, failed_component=failed, witness=witness,
                            horizontal=horizontal, perp=perp, radial=radial)


@dataclass(frozen=True)
class ScaleEnclosure:
    lower: ExtendedValue
    upper: ExtendedValue


def _supremum(f: RationalFunction, precision: Fraction) -> tuple[ExtendedValue, ExtendedValue]:
    flipped = minimize_on_halfline(-f, precision)
    if flipped.unbounded:
        return POS_INF, POS_INF
    return -flipped.upper_bound, -flipped.lower_bound


def minimal_domination_scale(m1: GNaturalMetric, m2: GNaturalMetric,
                             precision: Scalar = DEFAULT_PRECISION) -> ScaleEnclosure:
    """
    Enclosure of the least c such that c * m1 dominates m2 (the scale of m1 multiplied by c).
    The bound is computed, it makes no claim about any particular constant used elsewhere.
    """
    require_valid(m1)
    require_valid(m2)
    precision = Fraction(precision)
    ratio = m2.scale / m1.scale
    bounds = [(ratio, ratio),
              _supremum(ratio * m2.a / m1.a, precision),
              _supremum(ratio * m2.alpha / m1.alpha, precision)]
    lower = max(bound[0] for bound in bounds)
    upper = max(bound[1] for bound in bounds)
    if lower == NEG_INF:
        lower = Fraction(0)
    return ScaleEnclosure(lower, upper)
