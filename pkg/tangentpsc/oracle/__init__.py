from tangentpsc.oracle.chart import ChartDomainError, ConformalChart, TangentChartPoint, base_christoffels
from tangentpsc.oracle.tensor import CurvatureData, central_difference, christoffel_symbols, curvature_at, \
    scalar_curvature
from tangentpsc.oracle.validation import (StepTooLargeError, TotalSpaceMetric, ValidationReport, ValidationSample,
                                          assemble_total_metric, cross_validate, draw_points,
                                          scalar_curvature_numeric)
