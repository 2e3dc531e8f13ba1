from fractions import Fraction

import numpy as np
import pytest

from tangentpsc.exactalg import (NEG_INF, POS_INF, PoleError, Polynomial, RationalFunction, derivative, evaluate,
                                 limit_at_infinity)
from tangentpsc.metrics import parse_expression


def random_polynomial(rng, max_degree=4, allow_zero=False):
    while True:
        degree = int(rng.integers(0, max_degree + 1))
        p = Polynomial(Fraction(int(c), int(rng.integers(1, 5))) for c in rng.integers(-6, 7, size=degree + 1))
        if allow_zero or not p.is_zero():
            return p


def test_polynomial_strips_trailing_zeros():
    p = Polynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial().degree == -1


def test_polynomial_arithmetic():
    p = Polynomial([1, 1])  # 1 + t
    q = Polynomial([-1, 1])  # t - 1
    assert p * q == Polynomial([-1, 0, 1])
    assert p + q == Polynomial([0, 2])
    assert (p ** 3)(2) == 27
    quotient, remainder = divmod(Polynomial([-1, 0, 1]), q)
    assert quotient == p and remainder.is_zero()


def test_gcd_is_monic_and_squarefree_part_keeps_distinct_roots():
    t = Polynomial.t()
    p = 3 * (t - 1) * (t - 2)
    q = (t - 1) * (t + 3)
    assert p.gcd(q) == t - 1
    assert ((t - 1) ** 2 * (t + 2)).squarefree_part().monic() == (t - 1) * (t + 2)


def test_range_on_encloses_values():
    p = Polynomial([1, -3, 1])
    lo, hi = p.range_on(Fraction(0), Fraction(2))
    for k in range(21):
        assert lo <= p(Fraction(k, 10)) <= hi
    with pytest.raises(ValueError):
        p.range_on(Fraction(-1), Fraction(1))


def test_canonical_form_cancels_common_factors():
    rng = np.random.default_rng(7)
    for _ in range(50):
        p = random_polynomial(rng, allow_zero=True)
        q = random_polynomial(rng)
        r = random_polynomial(rng)
        assert RationalFunction(p * r, q * r) == RationalFunction(p, q)


def test_canonical_denominator_is_monic():
    f = RationalFunction(Polynomial([2]), Polynomial([Fraction(1, 100), 2, 2]))
    assert f.den.leading == 1
    assert f.num == Polynomial([1])


def test_derivative_is_linear():
    rng = np.random.default_rng(11)
    for _ in range(30):
        f = RationalFunction(random_polynomial(rng), random_polynomial(rng))
        g = RationalFunction(random_polynomial(rng), random_polynomial(rng))
        assert derivative(f + g) == derivative(f) + derivative(g)


def test_derivative_examples(t):
    h = Fraction(1, 100) + 2 * t * (1 + t)
    M = (1 + t) / h
    assert derivative(M) == (Fraction(1, 100) - 2 * (1 + t) ** 2) / h ** 2
    assert derivative(RationalFunction.constant(5)).is_zero()
    assert derivative(t ** 2) == 2 * t


def test_evaluate_and_poles(t):
    assert evaluate((1 + t) / (1 - t), 0) == 1
    with pytest.raises(PoleError):
        evaluate((1 + t) / (1 - t), 1)
    assert evaluate(RationalFunction.constant(0), Fraction(3, 7)) == 0


def test_limit_at_infinity(t):
    h = Fraction(1, 100) + 2 * t * (1 + t)
    assert limit_at_infinity((2 + 4 * t) / h ** 2) == 0
    assert limit_at_infinity(RationalFunction.constant(7)) == 7
    assert limit_at_infinity((3 * t ** 2 + 1) / (2 * t ** 2)) == Fraction(3, 2)
    assert limit_at_infinity(-2 - t) == NEG_INF
    assert limit_at_infinity(t ** 3 / (1 + t)) == POS_INF


def test_expression_text_parses_back(t):
    rng = np.random.default_rng(3)
    samples = [(1 + t) / (Fraction(1, 100) + 2 * t + 2 * t ** 2), -t / (1 + 2 * t), RationalFunction.constant(0)]
    samples += [RationalFunction(random_polynomial(rng), random_polynomial(rng)) for _ in range(20)]
    for f in samples:
        assert parse_expression(f.to_expression()) == f
