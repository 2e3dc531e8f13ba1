from fractions import Fraction
from math import lcm

import numpy as np
import pytest

from tangentpsc.exactalg import (HALF_LINE, Domain, Polynomial, count_real_roots, isolate_real_roots, refine_root,
                                 sturm_sequence)

T = Polynomial.t()


def integer_coefficients(p: Polynomial) -> list[int]:
    scale = lcm(*(c.denominator for c in p.coeffs))
    return [int(c * scale) for c in p.coeffs]


def brute_force_count(p: Polynomial, lo: int, hi: int, points: int) -> int:
    """Sign changes and exact zeros of the squarefree part on a uniform rational grid lo + i (hi - lo) / points."""
    coeffs = integer_coefficients(p.squarefree_part())
    degree = len(coeffs) - 1
    roots, previous = 0, 0
    for i in range(points + 1):
        # sign of p((lo * points + i * (hi - lo)) / points), scaled by points^degree
        x = lo * points + i * (hi - lo)
        value = 0
        for power, c in enumerate(reversed(coeffs)):
            value = value * x + c * points ** power
        sign = (value > 0) - (value < 0)
        if sign == 0:
            roots += 1
        elif previous != 0 and sign != previous:
            roots += 1
        previous = sign
    return roots


def test_count_examples():
    assert count_real_roots(T ** 2 - 2, HALF_LINE) == 1
    assert count_real_roots((T - 1) ** 2, HALF_LINE) == 1
    assert count_real_roots(T * (T - 1) * (T - 2), HALF_LINE) == 3
    assert count_real_roots(T ** 2 + 1, HALF_LINE) == 0
    assert count_real_roots(T ** 2 - 2, Domain.interval(-2, 2)) == 2
    assert count_real_roots(T - 2, Domain.interval(0, 2)) == 1


def test_zero_polynomial_is_rejected():
    with pytest.raises(ValueError):
        count_real_roots(Polynomial(), HALF_LINE)


def test_count_matches_brute_force_scan():
    rng = np.random.default_rng(2024)
    for _ in range(8):
        roots = rng.choice(np.arange(-20, 21), size=int(rng.integers(1, 5)), replace=False)
        p = Polynomial.constant(int(rng.choice([-3, -1, 2, 5])))
        for k in roots:
            p = p * (T - Fraction(int(k), 4))
        if rng.uniform() < 0.5:
            p = p * (T ** 2 + int(rng.integers(1, 4)))
        if rng.uniform() < 0.5:
            p = p * (T - Fraction(int(roots[0]), 4))
        assert p.degree <= 7
        assert count_real_roots(p, Domain.interval(-6, 6)) == brute_force_count(p, -6, 6, 10 ** 5)


def test_isolating_intervals_are_disjoint_and_bracket_roots():
    p = T * (T - 1) * (T - 2) * (T ** 2 - 3)
    intervals = isolate_real_roots(p, HALF_LINE)
    assert len(intervals) == 4
    squarefree = p.squarefree_part()
    for left, right in zip(intervals, intervals[1:]):
        assert left.hi < right.lo
    for interval in intervals:
        if interval.is_point:
            assert squarefree(interval.lo) == 0
        else:
            assert squarefree(interval.lo) * squarefree(interval.hi) < 0


def test_refine_sqrt_two():
    (interval,) = isolate_real_roots(T ** 2 - 2, HALF_LINE)
    refined = refine_root(T ** 2 - 2, interval, Fraction(1, 1000))
    assert refined.width <= Fraction(1, 1000)
    assert refined.lo ** 2 < 2 < refined.hi ** 2


def test_isolation_on_paper_derivative_numerator(paper_profile):
    critical = paper_profile.sc.derivative().num
    intervals = [refine_root(critical, interval, Fraction(1, 1000)) for interval in isolate_real_roots(critical)]
    assert any(interval.lo <= Fraction(78, 100) and interval.hi >= Fraction(76, 100) for interval in intervals)


def sign_changes(sequence: list[Polynomial], t0) -> int:
    signs = [s for s in (q.sign_at(t0) for q in sequence) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def test_sturm_sequence():
    f = T ** 3 - 2 * T ** 2 + 3 * T - 5
    sequence = sturm_sequence(f)
    assert sequence == [f, 3 * T ** 2 - 4 * T + 3, Fraction(-10, 9) * T + Fraction(13, 3),
                        Polynomial.constant(Fraction(-3303, 100))]
    assert sign_changes(sequence, -10) - sign_changes(sequence, 10) == count_real_roots(f, Domain.interval(-10, 10)) == 1


def test_sturm_sequence_uses_squarefree_part():
    p = (T - 1) ** 2 * (T - 3)
    sequence = sturm_sequence(p)
    assert sequence[0] == (T - 1) * (T - 3)
    assert sign_changes(sequence, 0) - sign_changes(sequence, 4) == 2


def test_refined_intervals_stay_isolating():
    p = (T - Fraction(1, 3)) * (T ** 2 - 5) * (T ** 2 - 7)
    for interval in isolate_real_roots(p, HALF_LINE):
        refined = refine_root(p, interval, Fraction(1, 10 ** 6))
        assert interval.lo <= refined.lo <= refined.hi <= interval.hi
        assert refined.width <= Fraction(1, 10 ** 6)
        if refined.is_point:
            assert p(refined.lo) == 0
        else:
            assert p(refined.lo) * p(refined.hi) < 0
