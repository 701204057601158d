import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kzeta.errors import DomainError, UnsupportedConfigurationError
from kzeta.selector import (
    dirichlet_kernel,
    dst2_gram,
    expected_selector,
    grid_exponential_average,
    make_grid,
    poisson_reconstruction,
    selector_average,
    selector_value,
)


@pytest.mark.parametrize(
    "J, thetas",
    [
        (1, [math.pi / 2]),
        (2, [math.pi / 4, 3 * math.pi / 4]),
        (4, [math.pi / 8, 3 * math.pi / 8, 5 * math.pi / 8, 7 * math.pi / 8]),
    ],
)
def test_make_grid(J, thetas):
    grid = make_grid(J)
    assert grid.J == J
    np.testing.assert_allclose(grid.thetas, thetas, rtol=0, atol=1e-15)


@given(st.integers(1, 200))
def test_grid_invariants(J):
    grid = make_grid(J)
    assert len(grid.thetas) == J
    assert all(0 < t < math.pi for t in grid.thetas)


def test_make_grid_rejects_zero():
    with pytest.raises(DomainError):
        make_grid(0)


@pytest.mark.parametrize(
    "kind, J, k, expected",
    [("SS", 1, 1, 1.0), ("SS", 1, 3, -1.0), ("SS", 4, 2, 0.0), ("CC", 2, 3, -1.0)],
)
def test_selector_average_examples(kind, J, k, expected):
    assert selector_average(kind, J, k) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize(
    "kind, J, k, expected",
    [("SS", 4, 5, 1), ("SS", 4, 13, -1), ("CC", 2, 5, -1), ("SS", 3, 6, 0)],
)
def test_expected_selector_examples(kind, J, k, expected):
    assert expected_selector(kind, J, k) == expected


def test_cc_rejects_odd_J():
    with pytest.raises(UnsupportedConfigurationError):
        selector_average("CC", 3, 1)
    with pytest.raises(UnsupportedConfigurationError):
        expected_selector("CC", 5, 1)


def test_exactness_all_small_grids():
    for J in range(1, 65):
        for k in range(4 * J):
            assert abs(selector_average("SS", J, k) - expected_selector("SS", J, k)) <= 1e-12
            if J % 2 == 0:
                assert abs(selector_average("CC", J, k) - expected_selector("CC", J, k)) <= 1e-12


@settings(max_examples=200)
@given(st.integers(1, 32), st.integers(0, 127), st.sampled_from(["SS", "CC"]))
def test_periodicity(J, k, kind):
    if kind == "CC" and J % 2:
        J += 1
    k %= 4 * J
    assert abs(selector_average(kind, J, k) - selector_average(kind, J, k + 4 * J)) <= 1e-12


@given(st.integers(1, 32), st.integers(-500, 500))
def test_negative_k_reduces_like_positive(J, k):
    assert abs(selector_average("SS", J, k) - expected_selector("SS", J, k)) <= 1e-12


def test_selector_value_wraps_average():
    v = selector_value("SS", 4, 5)
    assert (v.k, v.J) == (5, 4)
    assert v.value == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=300)
@given(st.integers(0, 60), st.floats(1e-3, math.pi - 1e-3))
def test_dirichlet_kernel_identity(half, theta):
    k = 2 * half + 1
    assert abs(math.sin(k * theta) / math.sin(theta) - dirichlet_kernel(k, theta)) <= 1e-12 * max(1, k)


def test_grid_exponential_average_brute_force():
    for J in (1, 2, 3, 5, 8):
        for n in range(-6 * J, 6 * J + 1, 2):
            brute = sum(complex(math.cos(n * t), math.sin(n * t)) for t in make_grid(J).thetas) / J
            assert abs(brute - grid_exponential_average(J, n)) <= 1e-12


@pytest.mark.parametrize("J, k, expected", [(4, 3, 1.0), (4, 9, -1.0), (1, 1, 1.0)])
def test_poisson_examples(J, k, expected):
    assert poisson_reconstruction(J, k) == pytest.approx(expected, abs=1e-12)


def test_poisson_matches_average():
    for J in range(1, 33):
        for k in range(1, 4 * J, 2):
            assert abs(poisson_reconstruction(J, k) - selector_average("SS", J, k)) <= 1e-12


def test_grid_exponential_average_rejects_odd_n():
    with pytest.raises(DomainError):
        grid_exponential_average(4, 3)


def test_poisson_rejects_even_k():
    with pytest.raises(DomainError):
        poisson_reconstruction(4, 2)


def _gram_brute(J):
    G = [[0.0] * J for _ in range(J)]
    for m in range(1, J + 1):
        for n in range(1, J + 1):
            G[m - 1][n - 1] = math.fsum(
                math.sin((2 * j + 1) * math.pi * m / (2 * J)) * math.sin((2 * j + 1) * math.pi * n / (2 * J))
                for j in range(J)
            )
    return np.array(G)


def test_dst2_examples_J2():
    G = dst2_gram(2)
    assert G[0, 0] == pytest.approx(1.0, abs=1e-14)
    assert G[0, 1] == pytest.approx(0.0, abs=1e-14)
    assert G[1, 1] == pytest.approx(2.0, abs=1e-14)


@pytest.mark.parametrize("J", [1, 2, 3, 4, 8, 16, 33])
def test_dst2_structure(J):
    G = dst2_gram(J)
    np.testing.assert_allclose(G, _gram_brute(J), atol=1e-12)
    off = G - np.diag(np.diag(G))
    assert np.max(np.abs(off)) <= 1e-10 * J
    expected_diag = [J / 2] * (J - 1) + [J]
    np.testing.assert_allclose(np.diag(G), expected_diag, atol=1e-12)
