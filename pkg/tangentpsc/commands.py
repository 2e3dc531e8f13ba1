from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

import pandas as pd

from tangentpsc.curvature import (Verdict, certify_uniform_positivity, check_worked_displays, displays_consistent,
                                  level_exceedance, scalar_profile, verify_certificate)
from tangentpsc.documents import (CertificateDocument, DisplayDocument, DisplaysDocument, DominationDocument,
                                  LevelDocument, ProfileDocument, SearchDocument, render)
from tangentpsc.metrics import (GNaturalMetric, MetricExpressionError, SpaceForm, builtin,
                                dominates, minimal_domination_scale, parse_expression, parse_rational, require_valid)
from tangentpsc.oracle import ConformalChart, cross_validate
from tangentpsc.search import Grid, SearchSpec, parse_grid, run_search
from tangentpsc.utils.file_reading import config_rational
from tangentpsc.utils.logger_config import ConsoleColor, get_logger

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INVALID_METRIC = 3


@dataclass(frozen=True)
class MetricSpec:
    """A builtin name, or expressions for a and b, plus a scale."""
    name: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    scale: Fraction = Fraction(1)

    def resolve(self) -> GNaturalMetric:
        if self.a is not None or self.b is not None:
            if self.a is None or self.b is None:
                raise MetricExpressionError("Both --a and --b are needed for an expression metric")
            metric = GNaturalMetric(parse_expression(self.a), parse_expression(self.b), name='custom')
        else:
            metric = builtin(self.name)
        return metric.with_scale(self.scale)


@dataclass(frozen=True)
class RunConfig:
    command: str
    metric: MetricSpec
    space_form: SpaceForm
    output_path: Optional[str] = None
    format: str = 'json'
    samples: Optional[Grid] = None
    precision: Fraction = Fraction(1, 10 ** 6)
    level: Optional[Fraction] = None
    rhs: Optional[MetricSpec] = None
    minimal_scale: bool = True
    seed: int = 42
    tolerance: float = 1e-4
    step: float = 1e-3
    sample_count: int = 20
    chart_radius: Optional[float] = None
    fiber_radius: float = 3.0
    richardson: bool = True
    grids: dict[str, Grid] = field(default_factory=dict)
    num_workers: int = 1
    show_progress: bool = True


def parse_samples(text: str) -> Grid:
    """'lo:hi:step' sampling range over t."""
    _, grid = parse_grid(f"t={text}")
    return grid


def write_output(text: str, output_path: Optional[str]):
    if output_path in (None, '', '-'):
        sys.stdout.write(text)
        return
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    get_logger().info(f"{ConsoleColor.CYAN}Wrote {path}{ConsoleColor.RESET}")


def _valid_metric(spec: MetricSpec) -> GNaturalMetric:
    metric = spec.resolve()
    require_valid(metric)
    return metric


def cmd_profile(config: RunConfig) -> int:
    """Exact Sc coefficients as JSON, or sampled values as CSV with columns t,Sc."""
    profile = scalar_profile(_valid_metric(config.metric), config.space_form)
    if config.format == 'csv':
        grid = config.samples or parse_samples('0:5:1/100')
        ts = grid.values()
        frame = pd.DataFrame({'t': [float(t) for t in ts], 'Sc': [float(profile(t)) for t in ts]})
        write_output(frame.to_csv(index=False, lineterminator="\n"), config.output_path)
    else:
        write_output(render(ProfileDocument.from_profile(profile)), config.output_path)
    return EXIT_OK


def cmd_certify(config: RunConfig) -> int:
    logger = get_logger()
    profile = scalar_profile(_valid_metric(config.metric), config.space_form)
    certificate = certify_uniform_positivity(profile, config.precision)
    level_check = None
    if config.level is not None:
        level_check = LevelDocument.from_evidence(config.level,
                                                  level_exceedance(profile.presentation_numerator, config.level))
    document = CertificateDocument.from_certificate(profile, certificate, verify_certificate(profile, certificate),
                                                    level_check)
    write_output(render(document), config.output_path)
    if certificate.verdict == Verdict.UNIFORMLY_POSITIVE:
        return EXIT_OK
    logger.info(f"{ConsoleColor.YELLOW}Verdict: {certificate.verdict.value}{ConsoleColor.RESET}")
    return EXIT_NEGATIVE


def cmd_dominate(config: RunConfig) -> int:
    lhs = _valid_metric(config.metric)
    rhs = _valid_metric(config.rhs)
    result = dominates(lhs, rhs)
    enclosure = minimal_domination_scale(lhs, rhs, config.precision) if config.minimal_scale else None
    write_output(render(DominationDocument.from_result(lhs, rhs, result, enclosure)), config.output_path)
    return EXIT_OK if result.holds else EXIT_NEGATIVE


def cmd_oracle(config: RunConfig) -> int:
    metric = _valid_metric(config.metric)
    chart = ConformalChart.for_space_form(config.space_form, config.chart_radius)
    report = cross_validate(chart, metric, sample_count=config.sample_count, seed=config.seed,
                            tolerance=config.tolerance, step=config.step, richardson=config.richardson,
                            fiber_radius=config.fiber_radius, num_workers=config.num_workers,
                            show_progress=config.show_progress)
    write_output(render(report), config.output_path)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_search(config: RunConfig) -> int:
    """Exit 0 when at least one instantiation is certified uniformly positive."""
    spec = SearchSpec(a_template=config.metric.a, b_template=config.metric.b, grids=config.grids,
                      space_form=config.space_form, precision=config.precision)
    if spec.a_template is None or spec.b_template is None:
        raise MetricExpressionError("A search needs --a and --b family templates")
    result = run_search(spec, num_workers=config.num_workers, show_progress=config.show_progress)
    write_output(render(SearchDocument.from_result(spec, result)), config.output_path)
    return EXIT_OK if result.ranked else EXIT_NEGATIVE


def cmd_displays(config: RunConfig) -> int:
    checks = check_worked_displays()
    consistent = displays_consistent(checks)
    document = DisplaysDocument(displays=[DisplayDocument.from_check(check) for check in checks],
                                consistent=consistent)
    write_output(render(document), config.output_path)
    return EXIT_OK if consistent else EXIT_NEGATIVE


COMMANDS = {
    'profile': cmd_profile,
    'certify': cmd_certify,
    'dominate': cmd_dominate,
    'oracle': cmd_oracle,
    'search': cmd_search,
    'displays': cmd_displays,
}


def run_command(config: RunConfig) -> int:
    return COMMANDS[config.command](config)


def build_run_config(args, config: dict) -> RunConfig:
    """
    Merge parsed command-line flags over the YAML configuration.
    :param args: argparse namespace, None for flags that were not given
    :param config: The merged configuration dictionary
    """
    metric_config = config.get('metric', {})
    space_config = config.get('space_form', {})
    oracle_config = config.get('oracle', {})
    search_config = config.get('search', {})
    certify_config = config.get('certify', {})

    def pick(flag, section: dict, key: str, default=None):
        value = getattr(args, flag, None)
        if value is not None:
            return value
        return section.get(key, default)

    a, b = getattr(args, 'a', None), getattr(args, 'b', None)
    if a is None and b is None and args.command in ('search',):
        family = search_config.get('family') or {}
        a, b = family.get('a'), family.get('b')
    elif a is None and b is None and getattr(args, 'metric', None) is None:
        a, b = metric_config.get('a'), metric_config.get('b')
    name = pick('metric', metric_config, 'name', 'paper')
    metric = MetricSpec(name=name, a=a, b=b, scale=config_rational(pick('scale', metric_config, 'scale', 1)))

    rhs = None
    if args.command == 'dominate':
        dominate_config = config.get('dominate', {})
        rhs = MetricSpec(name=pick('rhs', dominate_config, 'rhs', 'cheeger-gromoll'),
                         scale=config_rational(pick('rhs_scale', dominate_config, 'rhs_scale', 1)))
        # --lhs/--lhs_scale, then --metric/--scale, then the dominate section
        lhs_name = getattr(args, 'lhs', None) or getattr(args, 'metric', None) or dominate_config.get('lhs', name)
        lhs_scale = getattr(args, 'lhs_scale', None) or getattr(args, 'scale', None) \
            or dominate_config.get('lhs_scale', metric.scale)
        metric = MetricSpec(name=lhs_name, a=a, b=b, scale=config_rational(lhs_scale))

    samples = getattr(args, 'samples', None) or config.get('profile', {}).get('samples')
    grid_texts = getattr(args, 'grid', None)
    if grid_texts:
        grids = dict(parse_grid(text) for text in grid_texts)
    else:
        grids = dict(parse_grid(f"{key}={value}") for key, value in (search_config.get('grids') or {}).items())
    level = pick('level', certify_config, 'level')

    return RunConfig(
        command=args.command,
        metric=metric,
        space_form=SpaceForm(int(pick('n', space_config, 'n', 2)), parse_rational(str(pick('C', space_config, 'C', -1)))),
        output_path=getattr(args, 'output_path', None),
        format=pick('format', config.get('profile', {}), 'format', 'json'),
        samples=None if samples is None else parse_samples(str(samples)),
        precision=config_rational(pick('precision', certify_config, 'precision', '1/1000000')),
        level=None if level is None else config_rational(level),
        rhs=rhs,
        minimal_scale=bool(config.get('dominate', {}).get('minimal_scale', True)),
        seed=int(pick('seed', oracle_config, 'seed', 42)),
        tolerance=float(config_rational(pick('tol', oracle_config, 'tolerance', 1e-4))),
        step=float(config_rational(pick('step', oracle_config, 'step', 1e-3))),
        sample_count=int(pick('sample_count', oracle_config, 'sample_count', 20)),
        chart_radius=oracle_config.get('chart_radius'),
        fiber_radius=float(oracle_config.get('fiber_radius', 3.0)),
        richardson=bool(oracle_config.get('richardson', True)),
        grids=grids,
        num_workers=int(pick('num_workers', search_config if args.command == 'search' else oracle_config,
                             'num_workers', 1)),
        show_progress=bool(config.get('logging', {}).get('show_progress', False)),
    )
