from fractions import Fraction

import pytest

from tangentpsc.curvature import scalar_profile
from tangentpsc.exactalg import Polynomial, RationalFunction
from tangentpsc.metrics import HYPERBOLIC_PLANE, builtin


@pytest.fixture
def t():
    return RationalFunction.t()


@pytest.fixture
def paper_metric():
    return builtin('paper')


@pytest.fixture
def cg_metric():
    return builtin('cheeger-gromoll')


@pytest.fixture
def sasaki_metric():
    return builtin('sasaki')


@pytest.fixture
def paper_profile(paper_metric):
    return scalar_profile(paper_metric, HYPERBOLIC_PLANE)


@pytest.fixture
def paper_h():
    """0.01 + 2t(1+t), the vertical eigenvalue along U of the paper metric."""
    return Polynomial([Fraction(1, 100), 2, 2])


@pytest.fixture
def paper_quintic():
    return Polynomial([Fraction(9999, 5000), Fraction(3920197, 1000000), Fraction(-20003, 2500),
                       Fraction(-20103, 2500), Fraction(194, 25), Fraction(197, 25)])
