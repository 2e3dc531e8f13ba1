from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from tangentpsc.metrics import SpaceForm

DEFAULT_CHART_RADIUS = 0.5


class ChartDomainError(ValueError):
    """Raised for base coordinates outside the usable part of a conformal chart."""


@dataclass(frozen=True)
class ConformalChart:
    """
    Coordinates x in R^n with metric lambda(x) * identity, lambda = 4 / (1 + C |x|^2)^2, which has constant
    sectional curvature C. Only the ball |x| <= radius is used; for C < 0 the default radius is 0.5 / sqrt(|C|).
    """
    n: int
    C: Fraction
    radius: float

    @classmethod
    def for_space_form(cls, sf: SpaceForm, radius: Optional[float] = None) -> ConformalChart:
        if radius is None:
            radius = DEFAULT_CHART_RADIUS
            if sf.C < 0:
                radius /= math.sqrt(-float(sf.C))
        if sf.C < 0 and radius >= 1 / math.sqrt(-float(sf.C)):
            raise ChartDomainError(f"Chart radius {radius} reaches the singular locus |x|^2 = 1/|C|")
        return cls(n=sf.n, C=sf.C, radius=float(radius))

    @property
    def space_form(self) -> SpaceForm:
        return SpaceForm(self.n, self.C)

    def conformal_factor(self, x: np.ndarray) -> float:
        return 4.0 / (1.0 + float(self.C) * float(x @ x)) ** 2

    def metric(self, x: np.ndarray) -> np.ndarray:
        return self.conformal_factor(x) * np.eye(self.n)

    def log_factor_gradient(self, x: np.ndarray) -> np.ndarray:
        """d phi with phi = log(lambda) / 2."""
        c = float(self.C)
        return -2.0 * c * x / (1.0 + c * float(x @ x))

    def contains(self, x: np.ndarray, margin: float = 0.0) -> bool:
        return float(np.linalg.norm(x)) + margin <= self.radius

    def require(self, x: np.ndarray, margin: float = 0.0):
        if not self.contains(x, margin):
            raise ChartDomainError(f"Point x = {x.tolist()} with margin {margin} lies outside the chart ball "
                                   f"of radius {self.radius}")


@dataclass(frozen=True, eq=False)
class TangentChartPoint:
    """Induced coordinates (x, u) on TM: U = u^i d/dx^i at the base point x."""
    x: np.ndarray
    u: np.ndarray

    @classmethod
    def from_coordinates(cls, z: np.ndarray) -> TangentChartPoint:
        n = len(z) // 2
        return cls(x=np.asarray(z[:n], dtype=float), u=np.asarray(z[n:], dtype=float))

    @property
    def coordinates(self) -> np.ndarray:
        return np.concatenate([self.x, self.u])

    def t(self, chart: ConformalChart) -> float:
        """g(U, U) / 2 = lambda(x) |u|^2 / 2."""
        return 0.5 * chart.conformal_factor(self.x) * float(self.u @ self.u)


def base_christoffels(chart: ConformalChart, x: np.ndarray) -> np.ndarray:
    """
    Gamma[k, i, j] of the chart metric in closed form:
    delta_ki dphi_j + delta_kj dphi_i - delta_ij dphi_k.
    """
    chart.require(x)
    identity = np.eye(chart.n)
    dphi = chart.log_factor_gradient(x)
    return (np.einsum('ki,j->kij', identity, dphi) + np.einsum('kj,i->kij', identity, dphi)
            - np.einsum('ij,k->kij', identity, dphi))
