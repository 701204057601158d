"""Trigonometric selector averages on the midpoint grid.

The grid is ``theta_j = (2j+1) pi / (2J)`` for ``j = 0..J-1``.  Averaging
``sin(k theta)/sin(theta)`` (or the cosine analogue) over it yields 0 or
+/-1 depending on the residue class of ``k`` modulo ``4J``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedConfigurationError

__all__ = [
    "SelectorKind",
    "SelectorGrid",
    "SelectorValue",
    "make_grid",
    "selector_average",
    "selector_value",
    "expected_selector",
    "dirichlet_kernel",
    "grid_exponential_average",
    "poisson_reconstruction",
    "dst2_gram",
]


class SelectorKind(str, enum.Enum):
    SS = "SS"
    CC = "CC"


@dataclass(frozen=True)
class SelectorGrid:
    J: int
    thetas: tuple[float, ...]


@dataclass(frozen=True)
class SelectorValue:
    value: float
    k: int
    J: int


def _check_J(J: int) -> None:
    if isinstance(J, bool) or not isinstance(J, (int, np.integer)):
        raise DomainError(f"J must be an integer, got {J!r}")
    if J < 1:
        raise DomainError(f"J must be >= 1, got {J}")


def _check_kind(kind, J: int) -> SelectorKind:
    kind = SelectorKind(kind)
    if kind is SelectorKind.CC and J % 2 == 1:
        raise UnsupportedConfigurationError(
            f"cos/cos selector needs even J (cos(theta) vanishes on the grid for J={J})"
        )
    return kind


def make_grid(J: int) -> SelectorGrid:
    """Midpoint grid of ``J`` angles in ``(0, pi)``."""
    _check_J(J)
    return SelectorGrid(J, tuple((2 * j + 1) * math.pi / (2 * J) for j in range(J)))


def selector_average(kind, J: int, k: int) -> float:
    """Grid average ``(1/J) sum_j trig(k theta_j) / trig(theta_j)``.

    ``trig`` is ``sin`` for ``SS`` and ``cos`` for ``CC``.  The sum is
    accumulated with ``math.fsum``.
    """
    _check_J(J)
    kind = _check_kind(kind, J)
    trig = math.sin if kind is SelectorKind.SS else math.cos
    # k*theta_j = pi * (k(2j+1)) / (2J); reduce the integer numerator mod 4J first
    period = 4 * J
    terms = []
    for j in range(J):
        num = 2 * j + 1
        m = (k * num) % period
        terms.append(trig(m * math.pi / (2 * J)) / trig(num * math.pi / (2 * J)))
    return math.fsum(terms) / J


def selector_value(kind, J: int, k: int) -> SelectorValue:
    return SelectorValue(selector_average(kind, J, k), k, J)


def expected_selector(kind, J: int, k: int) -> int:
    """Exact case-table value of the selector, after reducing ``k`` mod ``4J``."""
    _check_J(J)
    kind = _check_kind(kind, J)
    r = k % (4 * J)
    if r % 2 == 0:
        return 0
    sign = 1 if r < 2 * J else -1
    if kind is SelectorKind.CC:
        sign *= -1 if ((r - 1) // 2) % 2 else 1
    return sign


def dirichlet_kernel(k: int, theta: float) -> float:
    """``1 + 2 sum_{m=1}^{(k-1)/2} cos(2 m theta)``, equal to sin(k theta)/sin(theta) for odd k."""
    if k < 1 or k % 2 == 0:
        raise DomainError(f"k must be odd and positive, got {k}")
    return math.fsum([1.0] + [2.0 * math.cos(2 * m * theta) for m in range(1, (k - 1) // 2 + 1)])


def grid_exponential_average(J: int, n: int) -> int:
    """Exact grid average of ``exp(i n theta_j)`` for even ``n``.

    The geometric sum vanishes unless ``n`` is a multiple of ``2J``; for
    ``n = 2Jq`` every sample equals ``exp(i pi q) = (-1)**q``.  Odd ``n``
    leaves a nonzero complex remainder and is rejected.
    """
    _check_J(J)
    if n % 2:
        raise DomainError(f"n must be even, got {n}")
    if n % (2 * J):
        return 0
    return -1 if (n // (2 * J)) % 2 else 1


def poisson_reconstruction(J: int, k: int) -> float:
    """Sin/sin selector rebuilt from the Fourier spectrum of ``sin(k theta)/sin(theta)``.

    For odd ``k`` the quotient is ``sum_{|r| <= (k-1)/2} exp(2 i r theta)``.
    Each exponential is averaged over the grid exactly; only frequencies
    aliased onto multiples of ``2J`` survive.
    """
    _check_J(J)
    if k < 1 or k % 2 == 0:
        raise DomainError(f"k must be odd and positive, got {k}")
    half = (k - 1) // 2
    return float(sum(grid_exponential_average(J, 2 * r) for r in range(-half, half + 1)))


def dst2_gram(J: int) -> np.ndarray:
    """Gram matrix ``S^T S`` of the DST-II sampling matrix.

    ``S[j, n-1] = sin((2j+1) pi n / (2J))`` for ``n = 1..J``.  The last
    diagonal entry is ``J`` rather than ``J/2``; it is reported unchanged.
    """
    _check_J(J)
    j = np.arange(J)[:, None]
    n = np.arange(1, J + 1)[None, :]
    S = np.sin((2 * j + 1) * n * np.pi / (2 * J))
    return S.T @ S
