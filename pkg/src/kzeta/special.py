"""Exact Bernoulli/Euler numbers and a few argument-reduced elementary helpers."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import CapacityError, DomainError

MAX_INDEX = 60


@lru_cache(maxsize=None)
def _bernoulli_table(n_max: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, B_1 = -1/2 convention
    table = [Fraction(1)]
    for n in range(1, n_max + 1):
        if n > 1 and n % 2 == 1:
            table.append(Fraction(0))
            continue
        acc = sum(comb(n + 1, k) * table[k] for k in range(n))
        table.append(-acc / (n + 1))
    return tuple(table)


@lru_cache(maxsize=None)
def _euler_table(n_max: int) -> tuple[int, ...]:
    # sum_{k even <= n} C(n, k) E_k = 0 for even n >= 2
    table = [1]
    for n in range(1, n_max + 1):
        if n % 2 == 1:
            table.append(0)
            continue
        table.append(-sum(comb(n, k) * table[k] for k in range(0, n, 2)))
    return tuple(table)


def special_numbers(kind: str, n_max: int) -> list[Fraction]:
    """Exact Bernoulli or Euler numbers with indices ``0..n_max``.

    Parameters
    ----------
    kind : {"bernoulli", "euler"}
    n_max : int
        Largest index, at most 60.

    Returns
    -------
    list of Fraction
        ``B_0..B_{n_max}`` (with ``B_1 = -1/2``) or ``E_0..E_{n_max}``.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    if n_max > MAX_INDEX:
        raise CapacityError(f"n_max={n_max} exceeds the supported {MAX_INDEX}")
    kind = kind.lower()
    if kind == "bernoulli":
        return list(_bernoulli_table(MAX_INDEX)[: n_max + 1])
    if kind == "euler":
        return [Fraction(e) for e in _euler_table(MAX_INDEX)[: n_max + 1]]
    raise DomainError(f"unknown kind {kind!r}; expected 'bernoulli' or 'euler'")


def bernoulli(n: int) -> Fraction:
    return special_numbers("bernoulli", n)[n]


def euler(n: int) -> Fraction:
    return special_numbers("euler", n)[n]


def sinpi(x: float) -> float:
    """sin(pi*x) with exact reduction of ``x`` modulo 2."""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    # r in [-1, 1]; fold to [-1/2, 1/2] using sin(pi - a) = sin(a)
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    if r == 0.0:
        return 0.0
    return math.sin(math.pi * r)


def gamma(x: float) -> float:
    """Gamma function; raises DomainError at the poles 0, -1, -2, ..."""
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"gamma has a pole at {x}")
    return math.gamma(x)


def one_minus_two_pow(s: float) -> float:
    """1 - 2**(-s) without cancellation for small ``s``."""
    return -math.expm1(-s * math.log(2.0))
