from tangentpsc.metrics.expression import MetricExpressionError, parse_expression, parse_rational, placeholders
from tangentpsc.metrics.gnatural import (BUILTIN_NAMES, DominationResult, GNaturalMetric, InvalidMetricError,
                                         NondegeneracyCertificate, ScaleEnclosure, UnknownMetricError, builtin,
                                         dominates, minimal_domination_scale, require_valid, validate)
from tangentpsc.metrics.space_form import HYPERBOLIC_PLANE, ROUND_SPHERE, SpaceForm
