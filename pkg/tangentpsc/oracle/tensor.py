"""
Finite-difference Riemannian geometry of a metric given as a function of coordinates.

Index conventions: dg[c, a, b] = d_c g_ab, Gamma[a, b, c] = Gamma^a_bc,
riemann[a, b, c, d] = R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb,
ricci[b, d] = R^a_bad.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

MetricField = Callable[[np.ndarray], np.ndarray]


def central_difference(func: Callable[[np.ndarray], np.ndarray], z: np.ndarray, step: float,
                       richardson: bool = True) -> np.ndarray:
    """
    Partial derivatives of an array-valued function, derivative index first.
    With richardson, steps h and h/2 are combined as (4 D(h/2) - D(h)) / 3.
    """
    z = np.asarray(z, dtype=float)

    def differences(h: float) -> np.ndarray:
        rows = []
        for c in range(len(z)):
            offset = np.zeros_like(z)
            offset[c] = h
            rows.append((func(z + offset) - func(z - offset)) / (2.0 * h))
        return np.stack(rows)

    coarse = differences(step)
    if not richardson:
        return coarse
    return (4.0 * differences(step / 2.0) - coarse) / 3.0


def christoffel_symbols(metric_field: MetricField, z: np.ndarray, step: float, richardson: bool = True) -> np.ndarray:
    g_inv = np.linalg.inv(metric_field(z))
    dg = central_difference(metric_field, z, step, richardson)
    lowered = np.einsum('ikj->kij', dg) + np.einsum('jki->kij', dg) - dg
    return 0.5 * np.einsum('mk,kij->mij', g_inv, lowered)


@dataclass(frozen=True, eq=False)
class CurvatureData:
    metric: np.ndarray
    christoffel: np.ndarray
    riemann: np.ndarray
    ricci: np.ndarray
    scalar: float

    @property
    def riemann_lowered(self) -> np.ndarray:
        """R_abcd = g_ae R^e_bcd."""
        return np.einsum('ae,ebcd->abcd', self.metric, self.riemann)


def curvature_at(metric_field: MetricField, z: np.ndarray, step: float, richardson: bool = True) -> CurvatureData:
    """Metric, connection, curvature tensors and scalar curvature at z, all by central differences."""
    z = np.asarray(z, dtype=float)
    g = metric_field(z)
    gamma = christoffel_symbols(metric_field, z, step, richardson)
    dgamma = central_difference(lambda w: christoffel_symbols(metric_field, w, step, richardson), z, step, richardson)
    riemann = (np.einsum('cadb->abcd', dgamma) - np.einsum('dacb->abcd', dgamma)
               + np.einsum('ace,edb->abcd', gamma, gamma) - np.einsum('ade,ecb->abcd', gamma, gamma))
    ricci = np.einsum('abad->bd', riemann)
    scalar = float(np.einsum('bd,bd->', np.linalg.inv(g), ricci))
    return CurvatureData(metric=g, christoffel=gamma, riemann=riemann, ricci=ricci, scalar=scalar)


def scalar_curvature(metric_field: MetricField, z: np.ndarray, step: float, richardson: bool = True) -> float:
    return curvature_at(metric_field, z, step, richardson).scalar
