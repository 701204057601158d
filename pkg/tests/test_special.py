import math
from fractions import Fraction
from math import comb

import mpmath
import pytest
import sympy

from kzeta.errors import CapacityError, DomainError
from kzeta.special import gamma, one_minus_two_pow, sinpi, special_numbers


def test_first_bernoulli_numbers():
    B = special_numbers("bernoulli", 4)
    assert B[2] == Fraction(1, 6)
    assert B[4] == Fraction(-1, 30)
    assert (Fraction(2) ** (1 - 2) - 1) * B[2] == Fraction(-1, 12)


def test_first_euler_numbers():
    assert special_numbers("euler", 4)[:5] == [1, 0, -1, 0, 5]


@pytest.mark.parametrize("n", range(2, 61, 2))
def test_against_sympy(n):
    assert special_numbers("bernoulli", n)[n] == sympy.Rational(sympy.bernoulli(n))
    assert special_numbers("euler", n)[n] == sympy.euler(n)


def test_recurrences_hold_exactly():
    B = special_numbers("bernoulli", 60)
    E = special_numbers("euler", 60)
    for n in range(1, 60):
        assert sum(comb(n + 1, k) * B[k] for k in range(n + 1)) == 0
    for n in range(2, 61, 2):
        assert sum(comb(n, k) * E[k] for k in range(0, n + 1, 2)) == 0


def test_capacity_and_kind():
    with pytest.raises(CapacityError):
        special_numbers("bernoulli", 62)
    with pytest.raises(DomainError):
        special_numbers("catalan", 4)


@pytest.mark.parametrize("x", [0.0, 0.5, 1.0, -1.0, 2.0, -2.5, 3.25, 1e-3, -1.999, 7.0])
def test_sinpi(x):
    assert sinpi(x) == pytest.approx(float(mpmath.sinpi(x)), abs=3e-16)


def test_sinpi_exact_zeros():
    for n in range(-6, 7):
        assert sinpi(float(n)) == 0.0


def test_platform_gamma_meets_tolerance():
    # table generated here at 40 digits; relative error target 1e-13 on (0, 50]
    xs = [i / 8 for i in range(1, 401)]
    worst = max(abs(gamma(x) / float(mpmath.gamma(x)) - 1) for x in xs)
    assert worst <= 1e-13


def test_gamma_pole():
    with pytest.raises(DomainError):
        gamma(-2.0)


def test_one_minus_two_pow_small_argument():
    s = 1e-12
    assert one_minus_two_pow(s) == pytest.approx(s * math.log(2), rel=1e-12)
