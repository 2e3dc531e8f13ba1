"""
Machine-readable output documents. Exact values are "p/q" strings, extended values use "+inf" / "-inf",
floats keep Python's shortest round-trip representation.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, Field

from tangentpsc.curvature import (DisplayCheck, GrowthComparison, PositivityCertificate, ScalarProfile,
                                  growth_comparison)
from tangentpsc.exactalg import ExtendedValue, IsolatingInterval, Polynomial, SignEvidence, format_extended
from tangentpsc.metrics import DominationResult, GNaturalMetric, NondegeneracyCertificate, ScaleEnclosure
from tangentpsc.search import SearchEntry, SearchResult, SearchSpec


def exact(value: Optional[ExtendedValue]) -> Optional[str]:
    return None if value is None else format_extended(value)


def coefficients(p: Polynomial) -> list[str]:
    """Ascending coefficients as exact strings."""
    return [str(c) for c in p.coeffs]


def interval(value: Optional[IsolatingInterval]) -> Optional[list[str]]:
    return None if value is None else [str(value.lo), str(value.hi)]


def render(document: BaseModel) -> str:
    return json.dumps(document.model_dump(mode='json', by_alias=True), indent=2) + "\n"


class MetricDocument(BaseModel):
    name: Optional[str] = None
    a: str
    b: str
    alpha: str
    scale: str

    @classmethod
    def from_metric(cls, m: GNaturalMetric) -> MetricDocument:
        return cls(name=m.name, a=m.a.to_expression(), b=m.b.to_expression(), alpha=m.alpha.to_expression(),
                   scale=str(m.scale))


class GrowthDocument(BaseModel):
    numerator_degree: int
    denominator_degree: int
    limit: str
    numerator_dominates: bool

    @classmethod
    def from_growth(cls, growth: GrowthComparison) -> GrowthDocument:
        return cls(numerator_degree=growth.numerator_degree, denominator_degree=growth.denominator_degree,
                   limit=exact(growth.limit), numerator_dominates=growth.numerator_dominates)


class ProfileDocument(BaseModel):
    metric: MetricDocument
    n: int
    C: str
    numerator: list[str] = Field(description="Ascending coefficients of g in Sc = g/h")
    denominator: list[str] = Field(description="Ascending coefficients of h, built from the metric's factors")
    canonical_numerator: list[str]
    canonical_denominator: list[str] = Field(description="Monic denominator of the reduced form")
    expression: str = Field(description="Sc in the metric expression grammar")
    value_at_zero: str
    growth: GrowthDocument

    @classmethod
    def from_profile(cls, profile: ScalarProfile) -> ProfileDocument:
        return cls(metric=MetricDocument.from_metric(profile.metric), n=profile.n, C=str(profile.C),
                   numerator=coefficients(profile.presentation_numerator),
                   denominator=coefficients(profile.presentation_denominator),
                   canonical_numerator=coefficients(profile.sc.num),
                   canonical_denominator=coefficients(profile.sc.den),
                   expression=profile.sc.to_expression(), value_at_zero=str(profile.sc(0)),
                   growth=GrowthDocument.from_growth(growth_comparison(profile)))


class RootCounts(BaseModel):
    numerator: Optional[int]
    denominator: int


class EvidenceDocument(BaseModel):
    root_counts: RootCounts
    limit: str
    value_at_zero: str


class LevelDocument(BaseModel):
    level: str
    holds: bool
    root_count: Optional[int]
    value_at_start: str
    witness_t: Optional[str] = None

    @classmethod
    def from_evidence(cls, level: Fraction, evidence: SignEvidence) -> LevelDocument:
        return cls(level=str(level), holds=evidence.holds, root_count=evidence.root_count,
                   value_at_start=str(evidence.value_at_start), witness_t=exact(evidence.witness))


class CertificateDocument(BaseModel):
    metric: MetricDocument
    n: int
    C: str
    verdict: str
    c1_lo: Optional[str] = None
    c1_hi: Optional[str] = None
    c1_approx: Optional[float] = None
    minimizer: Optional[list[str]] = None
    witness_t: Optional[str] = None
    witness_value: Optional[str] = None
    zero_interval: Optional[list[str]] = None
    precision: Optional[str] = None
    evidence: EvidenceDocument
    reverified: bool
    level_check: Optional[LevelDocument] = None

    @classmethod
    def from_certificate(cls, profile: ScalarProfile, certificate: PositivityCertificate, reverified: bool,
                         level_check: Optional[LevelDocument] = None) -> CertificateDocument:
        approx = None
        if certificate.c1_lo is not None:
            approx = float((certificate.c1_lo + certificate.c1_hi) / 2)
        return cls(metric=MetricDocument.from_metric(profile.metric), n=profile.n, C=str(profile.C),
                   verdict=certificate.verdict.value, c1_lo=exact(certificate.c1_lo), c1_hi=exact(certificate.c1_hi),
                   c1_approx=approx, minimizer=interval(certificate.minimizer),
                   witness_t=exact(certificate.witness), witness_value=exact(certificate.witness_value),
                   zero_interval=interval(certificate.zero_interval), precision=exact(certificate.precision),
                   evidence=EvidenceDocument(
                       root_counts=RootCounts(numerator=certificate.numerator_roots,
                                              denominator=certificate.denominator_roots),
                       limit=exact(certificate.limit), value_at_zero=str(certificate.value_at_zero)),
                   reverified=reverified, level_check=level_check)


class NondegeneracyDocument(BaseModel):
    metric: MetricDocument
    valid: bool
    failed: Optional[str] = None
    witness_t: Optional[str] = None
    zero_interval: Optional[list[str]] = None
    pole_count: int

    @classmethod
    def from_certificate(cls, m: GNaturalMetric, certificate: NondegeneracyCertificate) -> NondegeneracyDocument:
        evidence = {'a': certificate.a_positive, 'alpha': certificate.alpha_positive}.get(certificate.failed)
        return cls(metric=MetricDocument.from_metric(m), valid=certificate.valid, failed=certificate.failed,
                   witness_t=exact(certificate.witness), pole_count=certificate.pole_count,
                   zero_interval=None if evidence is None else interval(evidence.zero_interval))


class ScaleDocument(BaseModel):
    lower: str
    upper: str

    @classmethod
    def from_enclosure(cls, enclosure: ScaleEnclosure) -> ScaleDocument:
        return cls(lower=exact(enclosure.lower), upper=exact(enclosure.upper))


class DominationDocument(BaseModel):
    lhs: MetricDocument
    rhs: MetricDocument
    holds: bool
    failed_component: Optional[str] = None
    witness_t: Optional[str] = None
    horizontal: bool
    perp: bool
    radial: bool
    minimal_scale: Optional[ScaleDocument] = Field(
        default=None, description="Computed enclosure of the least factor c with c * lhs >= rhs")

    @classmethod
    def from_result(cls, m1: GNaturalMetric, m2: GNaturalMetric, result: DominationResult,
                    minimal_scale: Optional[ScaleEnclosure] = None) -> DominationDocument:
        return cls(lhs=MetricDocument.from_metric(m1), rhs=MetricDocument.from_metric(m2), holds=result.holds,
                   failed_component=result.failed_component, witness_t=exact(result.witness),
                   horizontal=result.horizontal, perp=result.perp.holds, radial=result.radial.holds,
                   minimal_scale=None if minimal_scale is None else ScaleDocument.from_enclosure(minimal_scale))


class SearchEntryDocument(BaseModel):
    bindings: dict[str, str]
    a: Optional[str] = None
    b: Optional[str] = None
    verdict: Optional[str] = None
    c1_lo: Optional[str] = None
    c1_hi: Optional[str] = None
    witness_t: Optional[str] = None
    reason: Optional[str] = None

    @classmethod
    def from_entry(cls, entry: SearchEntry) -> SearchEntryDocument:
        return cls(bindings={name: str(value) for name, value in entry.bindings.items()},
                   a=None if entry.metric is None else entry.metric.a.to_expression(),
                   b=None if entry.metric is None else entry.metric.b.to_expression(),
                   verdict=None if entry.verdict is None else entry.verdict.value,
                   c1_lo=exact(entry.c1_lo), c1_hi=exact(entry.c1_hi), witness_t=exact(entry.witness),
                   reason=entry.reason)


class SearchDocument(BaseModel):
    a_template: str
    b_template: str
    n: int
    C: str
    ranked: list[SearchEntryDocument]
    non_positive: list[SearchEntryDocument]
    invalid: list[SearchEntryDocument]

    @classmethod
    def from_result(cls, spec: SearchSpec, result: SearchResult) -> SearchDocument:
        return cls(a_template=spec.a_template, b_template=spec.b_template, n=spec.space_form.n,
                   C=str(spec.space_form.C),
                   ranked=[SearchEntryDocument.from_entry(entry) for entry in result.ranked],
                   non_positive=[SearchEntryDocument.from_entry(entry) for entry in result.non_positive],
                   invalid=[SearchEntryDocument.from_entry(entry) for entry in result.invalid])


class DisplayDocument(BaseModel):
    name: str
    displayed: str
    computed: str
    matches: bool
    expected_mismatch: bool

    @classmethod
    def from_check(cls, check: DisplayCheck) -> DisplayDocument:
        return cls(name=check.name, displayed=check.displayed.to_expression(), computed=check.computed.to_expression(),
                   matches=check.matches, expected_mismatch=check.expected_mismatch)


class DisplaysDocument(BaseModel):
    displays: list[DisplayDocument]
    consistent: bool
