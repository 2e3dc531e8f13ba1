import math
from fractions import Fraction

import pytest

from tangentpsc.exactalg import NEG_INF, PoleError, RationalFunction, minimize_on_halfline

T = RationalFunction.t()


def golden_section(f, lo, hi, iterations=200):
    ratio = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c, d = b - ratio * (b - a), a + ratio * (b - a)
    for _ in range(iterations):
        if f(c) < f(d):
            b, d = d, c
            c = b - ratio * (b - a)
        else:
            a, c = c, d
            d = a + ratio * (b - a)
    x = (a + b) / 2
    return x, f(x)


def test_shifted_square():
    result = minimize_on_halfline((T - 1) ** 2 + 3, Fraction(1, 10 ** 6))
    assert result.lower_bound <= 3 <= result.upper_bound
    assert result.width <= Fraction(1, 10 ** 6)
    assert result.attained
    assert result.location.contains(1)


def test_decreasing_linear_is_unbounded():
    result = minimize_on_halfline(-2 - T)
    assert result.unbounded
    assert result.lower_bound == NEG_INF
    assert not result.attained


def test_constant_is_attained_everywhere():
    result = minimize_on_halfline(RationalFunction.constant(Fraction(7, 3)))
    assert result.lower_bound == result.upper_bound == Fraction(7, 3)
    assert result.attained


def test_infimum_at_infinity():
    result = minimize_on_halfline(1 / (1 + T))
    assert result.lower_bound == 0
    assert result.location is None
    assert not result.attained


def test_pole_on_domain():
    with pytest.raises(PoleError):
        minimize_on_halfline(1 / (T - 2))


def test_paper_profile_minimum(paper_profile):
    result = minimize_on_halfline(paper_profile.sc, Fraction(1, 10 ** 6))
    assert result.width <= Fraction(1, 10 ** 6)
    location, value = golden_section(paper_profile.sc.evaluate_float, 0.0, 5.0)
    assert float(result.lower_bound) == pytest.approx(value, abs=1e-3)
    assert value == pytest.approx(0.1956, abs=1e-3)
    assert location == pytest.approx(0.77, abs=0.01)
    assert result.location.lo <= Fraction(78, 100) and result.location.hi >= Fraction(76, 100)


def test_bounds_hold_on_samples(paper_profile):
    sc = paper_profile.sc
    result = minimize_on_halfline(sc, Fraction(1, 10 ** 6))
    samples = [sc(Fraction(k, 100)) for k in range(10 ** 4)]
    assert all(result.lower_bound <= value for value in samples)
    # upper_bound is a value of sc, so it is within the precision of every sample
    assert result.upper_bound <= min(samples) + Fraction(1, 10 ** 6)


def test_sampled_rational_functions():
    functions = [(T ** 3 - 3 * T) / (1 + T ** 2), (T - 2) ** 2 * (T - 5) ** 2 + T / 10, (1 + T) / (2 + T ** 4)]
    for f in functions:
        result = minimize_on_halfline(f, Fraction(1, 10 ** 4))
        samples = [f(Fraction(k, 100)) for k in range(10 ** 4)]
        assert all(result.lower_bound <= value for value in samples)
        assert result.upper_bound <= min(samples) + Fraction(1, 10 ** 4)
