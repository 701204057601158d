"""Midpoint Euler-Maclaurin analysis of ``f(x) = sin(kx)/sin(x)`` on [0, pi]."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .special import bernoulli

__all__ = [
    "Endpoint",
    "EmAnalysis",
    "bernoulli_half",
    "selector_integrand",
    "endpoint_taylor",
    "endpoint_derivative",
    "normalized_integral",
    "midpoint_residual",
    "em_correction",
    "decay_exponent",
]

RESIDUAL_FLOOR = 1e-14


class Endpoint(str, enum.Enum):
    ZERO = "zero"
    PI = "pi"


@dataclass(frozen=True)
class EmAnalysis:
    k: int
    J_values: tuple[int, ...]
    residuals: tuple[float, ...]
    fitted_exponent: float | None
    first_correction: float

    @property
    def rate_defined(self) -> bool:
        return self.fitted_exponent is not None

    @property
    def cubic_decay(self) -> bool | None:
        """Whether the fitted rate is at least as fast as J^-3 (within 0.3)."""
        if self.fitted_exponent is None:
            return None
        return self.fitted_exponent <= -3.0 + 0.3


def _check_odd(k: int) -> None:
    if isinstance(k, bool) or int(k) != k or k < 1 or k % 2 == 0:
        raise DomainError(f"k must be an odd positive integer, got {k!r}")


def bernoulli_half(m: int) -> Fraction:
    """B_{2m}(1/2) = (2^(1-2m) - 1) B_{2m}, exactly."""
    if int(m) != m or not 1 <= m <= 20:
        raise DomainError(f"m must be an integer in 1..20, got {m!r}")
    return (Fraction(2) ** (1 - 2 * m) - 1) * bernoulli(2 * m)


def selector_integrand(k: int, x: float) -> float:
    """sin(kx)/sin(x) with the removable values at 0 and pi filled in."""
    if x == 0.0:
        return float(k)
    if x == math.pi:
        return float(k * (-1) ** (k + 1))
    return math.sin(k * x) / math.sin(x)


@lru_cache(maxsize=512)
def endpoint_taylor(k: int, end, order: int) -> tuple[Fraction, ...]:
    """Taylor coefficients of f about an endpoint, in ``u = x - endpoint``.

    Both sin(ku) and sin(u) are expanded exactly and divided as power
    series after cancelling the common factor u.  About pi,
    f(pi + u) = (-1)^(k+1) sin(ku)/sin(u).
    """
    end = Endpoint(end)

    def sin_over_u(a: int) -> list[Fraction]:
        # sin(a u)/u = sum_n (-1)^n a^(2n+1) u^(2n) / (2n+1)!
        out = []
        for d in range(order + 1):
            if d % 2:
                out.append(Fraction(0))
            else:
                n = d // 2
                out.append(Fraction((-1) ** n * a ** (2 * n + 1), math.factorial(2 * n + 1)))
        return out

    num = sin_over_u(k)
    den = sin_over_u(1)
    q: list[Fraction] = []
    for d in range(order + 1):
        acc = num[d] - sum(q[i] * den[d - i] for i in range(d))
        q.append(acc / den[0])
    if end is Endpoint.PI and k % 2 == 0:
        q = [-c for c in q]
    return tuple(q)


def endpoint_derivative(k: int, end, order: int = 1) -> float:
    """Limit of the ``order``-th derivative of f at 0 or pi, from its Taylor series."""
    _check_odd(k)
    coeffs = endpoint_taylor(int(k), Endpoint(end), order)
    return float(math.factorial(order) * coeffs[order])


def normalized_integral(k: int, panels: int | None = None, nodes: int = 24) -> float:
    """(1/pi) * integral of f over [0, pi] by composite Gauss-Legendre."""
    panels = panels or max(4, int(k))
    x, w = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(0.0, math.pi, panels + 1)
    pieces = []
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        xs = 0.5 * (a + b) + half * x
        vals = np.sin(k * xs) / np.sin(xs)
        pieces.extend((half * w * vals).tolist())
    return math.fsum(pieces) / math.pi


def _grid_average(k: int, J: int) -> float:
    return math.fsum(selector_integrand(k, (2 * j + 1) * math.pi / (2 * J)) for j in range(J)) / J


def midpoint_residual(k: int, J: int) -> float:
    """Midpoint-grid average of f minus (1/pi) * its integral over [0, pi]."""
    _check_odd(k)
    if int(J) != J or J < 1:
        raise DomainError(f"J must be a positive integer, got {J!r}")
    return _grid_average(int(k), int(J)) - normalized_integral(int(k))


def em_correction(k: int, J: int, m: int) -> float:
    """Term m of the midpoint EM series for the grid average.

    With step h = pi/J the term is B_{2m}(1/2)/(2m)! * h^(2m)/pi * [f^(2m-1)]_0^pi.
    """
    _check_odd(k)
    order = 2 * m - 1
    jump = endpoint_derivative(k, Endpoint.PI, order) - endpoint_derivative(k, Endpoint.ZERO, order)
    coef = float(bernoulli_half(m)) / math.factorial(2 * m)
    return coef * (math.pi / J) ** (2 * m) / math.pi * jump + 0.0


def decay_exponent(k: int, J_values) -> EmAnalysis:
    """Residuals over a J sweep and the least-squares log-log slope.

    Only residuals above 1e-14 enter the fit; with fewer than two of them
    the rate is undefined and ``fitted_exponent`` is None.
    """
    _check_odd(k)
    J_values = tuple(int(J) for J in J_values)
    if len(J_values) < 3 or any(b <= a for a, b in zip(J_values, J_values[1:])):
        raise DomainError("J_values must be strictly increasing with at least 3 entries")
    residuals = tuple(midpoint_residual(k, J) for J in J_values)
    pts = [(math.log(J), math.log(abs(r))) for J, r in zip(J_values, residuals) if abs(r) > RESIDUAL_FLOOR]
    slope = None
    if len(pts) >= 2:
        xs, ys = zip(*pts)
        slope = float(np.polyfit(xs, ys, 1)[0])
    first = em_correction(k, J_values[0], 1)
    return EmAnalysis(int(k), J_values, residuals, slope, first)
