from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from tangentpsc.curvature.formula import ScalarProfile
from tangentpsc.exactalg import (DEFAULT_PRECISION, HALF_LINE, Domain, ExtendedValue, IsolatingInterval, PoleError,
                                 Polynomial, Scalar, SignEvidence, certify_sign, count_real_roots,
                                 limit_at_infinity, minimize_on_halfline)
from tangentpsc.utils.logger_config import ConsoleColor, get_logger


class Verdict(str, Enum):
    UNIFORMLY_POSITIVE = 'uniformly-positive'
    POSITIVE_INF_ZERO = 'positive-but-inf-zero'
    NOT_POSITIVE = 'not-positive'


@dataclass(frozen=True)
class PositivityCertificate:
    """
    Evidence for inf_{t >= 0} Sc(t) > 0.
    For uniformly-positive, [c1_lo, c1_hi] encloses the infimum C1. For not-positive, witness is a rational t*
    with Sc(t*) <= 0, or zero_interval isolates an irrational zero of Sc.
    """
    verdict: Verdict
    numerator_roots: Optional[int]
    denominator_roots: int
    value_at_zero: Fraction
    limit: ExtendedValue
    c1_lo: Optional[Fraction] = None
    c1_hi: Optional[Fraction] = None
    minimizer: Optional[IsolatingInterval] = None
    witness: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None
    zero_interval: Optional[IsolatingInterval] = None
    precision: Optional[Fraction] = None


def certify_uniform_positivity(profile: ScalarProfile, precision: Scalar = DEFAULT_PRECISION) -> PositivityCertificate:
    """
    Decide whether the profile is bounded below by a positive constant on [0, oo).
    When positive, the minimization precision is tightened until the certified lower bound is itself positive.
    :param profile: The scalar curvature profile
    :param precision: Target width of the C1 enclosure
    """
    logger = get_logger()
    sc = profile.sc
    denominator_roots = count_real_roots(sc.den, HALF_LINE) if sc.den.degree > 0 else 0
    if denominator_roots:
        raise PoleError(f"Profile {sc} has a pole on [0, oo)")
    limit = limit_at_infinity(sc)
    base = dict(denominator_roots=0, value_at_zero=sc(0), limit=limit)

    sign = certify_sign(sc, strict=True)
    if not sign.holds:
        logger.info(f"{ConsoleColor.YELLOW}Profile is not positive on [0, oo){ConsoleColor.RESET}")
        return PositivityCertificate(verdict=Verdict.NOT_POSITIVE, numerator_roots=sign.root_count,
                                     witness=sign.witness, witness_value=sign.witness_value,
                                     zero_interval=sign.zero_interval, **base)
    if limit == 0:
        return PositivityCertificate(verdict=Verdict.POSITIVE_INF_ZERO, numerator_roots=0, **base)

    precision = Fraction(precision)
    minimum = minimize_on_halfline(sc, precision)
    while minimum.lower_bound <= 0:
        precision /= 2
        logger.debug(f"Lower bound {minimum.lower_bound} not positive, tightening precision to {precision}")
        minimum = minimize_on_halfline(sc, precision)
    logger.info(f"{ConsoleColor.GREEN}Uniformly positive, C1 in [{float(minimum.lower_bound):.6g}, "
                f"{float(minimum.upper_bound):.6g}]{ConsoleColor.RESET}")
    return PositivityCertificate(verdict=Verdict.UNIFORMLY_POSITIVE, numerator_roots=0,
                                 c1_lo=minimum.lower_bound, c1_hi=minimum.upper_bound,
                                 minimizer=minimum.location, precision=precision, **base)


def level_exceedance(target: Union[ScalarProfile, Polynomial], level: Scalar) -> SignEvidence:
    """
    Certify target > level on [0, oo).
    For a profile g/h (presented form) this is g - level * h > 0; for a polynomial p it is p - level > 0.
    """
    if isinstance(target, ScalarProfile):
        difference = target.presentation_numerator - Fraction(level) * target.presentation_denominator
    else:
        difference = target - Fraction(level)
    return certify_sign(difference, strict=True)


def verify_certificate(profile: ScalarProfile, certificate: PositivityCertificate) -> bool:
    """Re-derive the verdict from the stored evidence using only root counting and exact evaluation."""
    sc = profile.sc
    if sc.den.degree > 0 and count_real_roots(sc.den, HALF_LINE) != certificate.denominator_roots:
        return False
    if sc(0) != certificate.value_at_zero or limit_at_infinity(sc) != certificate.limit:
        return False

    if certificate.verdict == Verdict.NOT_POSITIVE:
        if certificate.witness is not None:
            return sc(certificate.witness) <= 0
        interval = certificate.zero_interval
        return interval is not None and count_real_roots(sc.num, Domain.interval(interval.lo, interval.hi)) >= 1

    positive = sc(0) > 0 and count_real_roots(sc.num, HALF_LINE) == 0
    if certificate.verdict == Verdict.POSITIVE_INF_ZERO:
        return positive and certificate.limit == 0
    return (positive and certificate.c1_lo is not None and 0 < certificate.c1_lo <= certificate.c1_hi
            and certify_sign(sc - certificate.c1_lo, strict=False).holds)
