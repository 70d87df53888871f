"""Exact SU(2)_k Verlinde dimensions and the traces of the lifted involutions.

The exact route is the level-k fusion ring: with the handle matrix
``K = sum_i N_i N_i^T`` one has ``d_g(k) = Tr K^(g-1)`` and
``d'_g(k) = Tr K^(g-1) N_k``.  The trigonometric sums are evaluated
separately in :func:`float_oracle` as a cross-check.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .symplectic import PLUS, SignConvention

Matrix = tuple[tuple[int, ...], ...]

PRECISION_ENV = "VERLINDE_BRICKS_PRECISION_BITS"
DEFAULT_PRECISION_BITS = 128
MIN_PRECISION_BITS = 64


class OraclePrecisionError(ArithmeticError):
    """The float oracle could not certify an integer result."""


@dataclass(frozen=True)
class FusionData:
    level: int
    fusion: tuple[Matrix, ...]
    handle: Matrix


def fusion_coefficient(k: int, i: int, j: int, l: int) -> int:
    if abs(i - j) <= l <= min(i + j, 2 * k - i - j) and (i + j + l) % 2 == 0:
        return 1
    return 0


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_pow(a: Matrix, n: int) -> Matrix:
    result = _identity(len(a))
    base = a
    while n:
        if n & 1:
            result = _matmul(result, base)
        n >>= 1
        if n:
            base = _matmul(base, base)
    return result


def trace(a: Matrix) -> int:
    return sum(a[i][i] for i in range(len(a)))


@lru_cache(maxsize=64)
def fusion_data(k: int) -> FusionData:
    if k < 1:
        raise ValueError(f"level must be positive, got {k}")
    n = k + 1
    fusion = tuple(
        tuple(tuple(fusion_coefficient(k, i, j, l) for l in range(n)) for j in range(n))
        for i in range(n)
    )
    handle = [[0] * n for _ in range(n)]
    for m in fusion:
        prod = _matmul(m, _transpose(m))
        for r in range(n):
            for c in range(n):
                handle[r][c] += prod[r][c]
    return FusionData(k, fusion, tuple(tuple(row) for row in handle))


def _check(g: int, k: int) -> None:
    if g < 1:
        raise ValueError(f"genus must be positive, got {g}")
    if k < 1:
        raise ValueError(f"level must be positive, got {k}")


@lru_cache(maxsize=1024)
def _handle_power(k: int, n: int) -> Matrix:
    return mat_pow(fusion_data(k).handle, n)


def verlinde_dim(g: int, k: int) -> int:
    """``d_g(k)``."""
    _check(g, k)
    return trace(_handle_power(k, g - 1))


def verlinde_dim_twisted(g: int, k: int) -> int:
    """``d'_g(k)``; zero for odd ``k`` by convention (the trace vanishes there too)."""
    _check(g, k)
    if k % 2:
        return 0
    return trace(_matmul(_handle_power(k, g - 1), fusion_data(k).fusion[k]))


def handle_prefactor(g: int, k: int) -> int:
    """``((k+2)/2)^(g-1)`` for even ``k``."""
    if k % 2:
        raise ValueError(f"(k+2)/2 is not an integer for odd k={k}")
    return ((k + 2) // 2) ** (g - 1)


def trace_untwisted(g: int, k: int) -> int:
    """``Tr rho_a^(tensor k)`` for ``a mod 2 != 0``."""
    _check(g, k)
    if k % 2:
        return 0
    return handle_prefactor(g, k)


def trace_twisted(g: int, k: int) -> int:
    """``Tr rho'_alpha^(tensor k/2)`` for ``alpha != 0``; even ``k`` only."""
    _check(g, k)
    if k % 2:
        raise ValueError(f"the twisted trace needs even level, got k={k}")
    sign = -1 if (k // 2) % 2 else 1
    return sign * handle_prefactor(g, k)


# -- floating-point oracle ----------------------------------------------------

def default_precision_bits() -> int:
    bits = int(os.environ.get(PRECISION_ENV, DEFAULT_PRECISION_BITS))
    if bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision must be at least {MIN_PRECISION_BITS} bits, got {bits}")
    return bits


def oracle_sum(g: int, k: int, twisted: bool = False, precision_bits: int | None = None):
    """The trigonometric Verlinde sum as an ``mpf``, together with an error bound.

    The bound is a crude forward estimate: the largest summand times the number
    of terms, scaled by the unit roundoff with a safety factor.
    """
    _check(g, k)
    prec = default_precision_bits() if precision_bits is None else precision_bits
    if prec < MIN_PRECISION_BITS:
        raise ValueError(f"precision must be at least {MIN_PRECISION_BITS} bits, got {prec}")
    with mpmath.workprec(prec):
        pre = mpmath.mpf(k + 2) / 2
        total = mpmath.mpf(0)
        largest = mpmath.mpf(0)
        for j in range(1, k + 2):
            term = pre ** (g - 1) * mpmath.sin(mpmath.pi * j / (k + 2)) ** (2 - 2 * g)
            largest = max(largest, abs(term))
            if twisted and j % 2 == 0:
                term = -term
            total += term
        bound = largest * (k + 1) * (4 * g + 16) * mpmath.mpf(2) ** (-prec)
    return total, bound


def float_oracle(
    g: int,
    k: int,
    twisted: bool = False,
    precision_bits: int | None = None,
    tolerance: float = 0.25,
) -> int:
    """Round the trigonometric sum to the nearest integer, or refuse.

    Raises :class:`OraclePrecisionError` if the rounding error bound is not
    well below ``tolerance`` or if the distance to the nearest integer is at
    least ``tolerance``.
    """
    total, bound = oracle_sum(g, k, twisted, precision_bits)
    if bound >= tolerance / 4:
        raise OraclePrecisionError(
            f"precision budget exceeded for g={g}, k={k}: error bound {mpmath.nstr(bound, 3)}"
        )
    nearest = int(mpmath.nint(total))
    residual = abs(total - nearest)
    if residual >= tolerance:
        raise OraclePrecisionError(
            f"g={g}, k={k}: sum {mpmath.nstr(total, 20)} is {mpmath.nstr(residual, 3)} from an integer"
        )
    return nearest


# -- root of unity normalisation ---------------------------------------------

def root_identity_check(k: int, s: SignConvention = PLUS) -> bool:
    """Check ``(-1)^(k+1) A^((k+2)^2) = (epsilon i)^k`` for ``A = -epsilon exp(2 pi i/(4k+8))``.

    Everything is an exponent of ``zeta = exp(2 pi i/(4k+8))``: ``-1 = zeta^(2k+4)``
    and ``i = zeta^(k+2)``.  Also checks that ``A`` is primitive of order ``4k+8``.
    """
    if k < 1:
        raise ValueError(f"level must be positive, got {k}")
    n = 4 * k + 8
    minus_one = 2 * k + 4
    i = k + 2
    a = (1 + (minus_one if s.epsilon == 1 else 0)) % n
    if math.gcd(a, n) != 1:
        return False
    lhs = ((k + 1) * minus_one + a * (k + 2) ** 2) % n
    eps_i = (i + (0 if s.epsilon == 1 else minus_one)) % n
    rhs = (k * eps_i) % n
    return lhs == rhs
