from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from tangentpsc.curvature import Verdict, certify_uniform_positivity, scalar_profile
from tangentpsc.exactalg import DEFAULT_PRECISION
from tangentpsc.metrics import GNaturalMetric, SpaceForm, parse_expression, parse_rational, placeholders, validate
from tangentpsc.utils.logger_config import ConsoleColor, get_logger
from tangentpsc.utils.parallelism import batch_invoke


class EmptyGridError(ValueError):
    """Raised when a search grid has no points or a placeholder has no grid."""


@dataclass(frozen=True)
class Grid:
    """lo, lo + step, ... up to and including hi."""
    lo: Fraction
    hi: Fraction
    step: Fraction

    def values(self) -> list[Fraction]:
        if self.step <= 0:
            raise EmptyGridError(f"Grid step must be positive, got {self.step}")
        count = int((self.hi - self.lo) // self.step) + 1 if self.hi >= self.lo else 0
        return [self.lo + i * self.step for i in range(count)]


def parse_grid(text: str) -> tuple[str, Grid]:
    """'name=lo:hi:step', or 'name=value' for a single point."""
    name, sep, spec = text.partition('=')
    if not sep or not name.strip():
        raise EmptyGridError(f"Grid '{text}' must look like name=lo:hi:step")
    parts = spec.split(':')
    if len(parts) == 1:
        value = parse_rational(parts[0])
        return name.strip(), Grid(value, value, Fraction(1))
    if len(parts) != 3:
        raise EmptyGridError(f"Grid '{text}' must look like name=lo:hi:step")
    lo, hi, step = (parse_rational(part) for part in parts)
    return name.strip(), Grid(lo, hi, step)


@dataclass(frozen=True)
class SearchSpec:
    """A family of metrics with placeholder coefficients and a rational grid for each placeholder."""
    a_template: str
    b_template: str
    grids: dict[str, Grid]
    space_form: SpaceForm
    precision: Fraction = DEFAULT_PRECISION

    @property
    def names(self) -> list[str]:
        names = placeholders(self.a_template)
        names += [name for name in placeholders(self.b_template) if name not in names]
        return names

    def instantiations(self) -> list[dict[str, Fraction]]:
        names = self.names
        missing = [name for name in names if name not in self.grids]
        if missing:
            raise EmptyGridError(f"No grid given for placeholders {missing}")
        axes = [self.grids[name].values() for name in names]
        points = [dict(zip(names, values)) for values in itertools.product(*axes)]
        if not points:
            raise EmptyGridError(f"The search grid for {names} is empty")
        return points


@dataclass
class SearchEntry:
    index: int
    bindings: dict[str, Fraction]
    status: str  # ranked | non-positive | invalid
    metric: Optional[GNaturalMetric] = None
    verdict: Optional[Verdict] = None
    c1_lo: Optional[Fraction] = None
    c1_hi: Optional[Fraction] = None
    witness: Optional[Fraction] = None
    reason: Optional[str] = None


@dataclass
class SearchResult:
    ranked: list[SearchEntry] = field(default_factory=list)
    non_positive: list[SearchEntry] = field(default_factory=list)
    invalid: list[SearchEntry] = field(default_factory=list)


def evaluate_instantiation(spec: SearchSpec, index: int, bindings: dict[str, Fraction]) -> SearchEntry:
    metric = GNaturalMetric(parse_expression(spec.a_template, bindings), parse_expression(spec.b_template, bindings),
                            name=f"{spec.a_template} | {spec.b_template}")
    certificate = validate(metric)
    if not certificate.valid:
        return SearchEntry(index, bindings, 'invalid', metric=metric, witness=certificate.witness,
                           reason=f"{certificate.failed} is not positive on [0, oo)")
    positivity = certify_uniform_positivity(scalar_profile(metric, spec.space_form), spec.precision)
    if positivity.verdict != Verdict.UNIFORMLY_POSITIVE:
        return SearchEntry(index, bindings, 'non-positive', metric=metric, verdict=positivity.verdict,
                           witness=positivity.witness)
    return SearchEntry(index, bindings, 'ranked', metric=metric, verdict=positivity.verdict,
                       c1_lo=positivity.c1_lo, c1_hi=positivity.c1_hi)


def run_search(spec: SearchSpec, num_workers: int = 1, show_progress: bool = True) -> SearchResult:
    """
    Score every grid point by its certified C1 lower bound.
    Ranked entries are ordered by decreasing lower bound, ties by grid order.
    """
    logger = get_logger()
    points = spec.instantiations()
    logger.info(f"{ConsoleColor.CYAN}Searching {len(points)} instantiations of a = {spec.a_template}, "
                f"b = {spec.b_template} over {spec.space_form}{ConsoleColor.RESET}")
    results = batch_invoke(lambda item: evaluate_instantiation(spec, *item), list(enumerate(points)), num_workers,
                           desc="Search grid", show_progress=show_progress)

    outcome = SearchResult()
    for res, bindings in zip(results, points):
        entry = res['result']
        if res['error'] is not None:
            entry = SearchEntry(res['index'], bindings, 'invalid', reason=res['error'])
        {'ranked': outcome.ranked, 'non-positive': outcome.non_positive,
         'invalid': outcome.invalid}[entry.status].append(entry)
    outcome.ranked.sort(key=lambda entry: (-entry.c1_lo, entry.index))
    if outcome.invalid:
        logger.warning(f"{len(outcome.invalid)} instantiations are not valid metrics and were excluded")
    return outcome
