"""Bessel functions J0, J1, Y0, Y1, I0, I1, K0, K1 for real arguments.

Each function is split into two regions.  For small arguments the value is a
polynomial in x**2 (J, Y, K) or exp(x) times a polynomial in x (I), with
explicit log and pole terms for Y and K.  For large arguments a smooth
amplitude, and for J/Y a phase pair, multiplies the asymptotic factor.  The smooth parts are Chebyshev
series fitted by ``scripts/fit_bessel.py``; absolute error is a few ulps of
the function's natural scale.
"""
from __future__ import annotations

import enum
import math

from jnt.errors import DomainError
from jnt.special import _bessel_tables as T

TWO_OVER_PI = 2.0 / math.pi
INV_SQRT_PI = 1.0 / math.sqrt(math.pi)


class BesselKind(enum.Enum):
    J0 = "J0"
    J1 = "J1"
    Y0 = "Y0"
    Y1 = "Y1"
    I0 = "I0"
    I1 = "I1"
    K0 = "K0"
    K1 = "K1"


def _cheb(coeffs, u):
    # Clenshaw recurrence; coeffs[0] already carries the 1/2 weight
    b1 = 0.0
    b2 = 0.0
    for c in coeffs[:0:-1]:
        b1, b2 = c + 2.0 * u * b1 - b2, b1
    return coeffs[0] + u * b1 - b2


def _u_small(x, xmax):
    return 2.0 * (x / xmax) ** 2 - 1.0


def _phase_pair(x, p_table, q_table):
    u = 128.0 / (x * x) - 1.0
    return _cheb(p_table, u), 8.0 / x * _cheb(q_table, u)


def j0(x: float) -> float:
    x = abs(x)
    if math.isnan(x):
        return math.nan
    if x <= 8.0:
        return _cheb(T.J0_SMALL, _u_small(x, 8.0))
    if math.isinf(x):
        return 0.0
    p, q = _phase_pair(x, T.P0_LARGE, T.Q0_LARGE)
    s, c = math.sin(x), math.cos(x)
    # cos(x - pi/4) = (c + s)/sqrt2, sin(x - pi/4) = (s - c)/sqrt2
    return INV_SQRT_PI / math.sqrt(x) * (p * (c + s) - q * (s - c))


def j1(x: float) -> float:
    if math.isnan(x):
        return math.nan
    ax = abs(x)
    if ax <= 8.0:
        return x * _cheb(T.J1_SMALL, _u_small(ax, 8.0))
    if math.isinf(x):
        return 0.0
    p, q = _phase_pair(ax, T.P1_LARGE, T.Q1_LARGE)
    s, c = math.sin(ax), math.cos(ax)
    # cos(x - 3pi/4) = (s - c)/sqrt2, sin(x - 3pi/4) = -(s + c)/sqrt2
    value = INV_SQRT_PI / math.sqrt(ax) * (p * (s - c) + q * (s + c))
    return value if x > 0 else -value


def _check_positive(name, x):
    if math.isnan(x):
        return True
    if x <= 0.0:
        raise DomainError(f"{name}(x) requires x > 0, got {x!r}")
    return False


def y0(x: float) -> float:
    if _check_positive("Y0", x):
        return math.nan
    if x <= 8.0:
        return _cheb(T.Y0_SMALL, _u_small(x, 8.0)) + TWO_OVER_PI * math.log(x) * j0(x)
    if math.isinf(x):
        return 0.0
    p, q = _phase_pair(x, T.P0_LARGE, T.Q0_LARGE)
    s, c = math.sin(x), math.cos(x)
    return INV_SQRT_PI / math.sqrt(x) * (p * (s - c) + q * (c + s))


def y1(x: float) -> float:
    if _check_positive("Y1", x):
        return math.nan
    if x <= 8.0:
        return x * _cheb(T.Y1_SMALL, _u_small(x, 8.0)) + TWO_OVER_PI * (math.log(x) * j1(x) - 1.0 / x)
    if math.isinf(x):
        return 0.0
    p, q = _phase_pair(x, T.P1_LARGE, T.Q1_LARGE)
    s, c = math.sin(x), math.cos(x)
    return INV_SQRT_PI / math.sqrt(x) * (-p * (s + c) + q * (s - c))


def _exp_scaled(g, x):
    # g * exp(x) / sqrt(x) without overflowing before the true value does
    half = math.exp(0.5 * x)
    return g * half / math.sqrt(x) * half


def i0(x: float) -> float:
    x = abs(x)
    if math.isnan(x):
        return math.nan
    if x <= 8.0:
        return _cheb(T.I0_SMALL, x / 4.0 - 1.0) * math.exp(x)
    if math.isinf(x):
        return math.inf
    return _exp_scaled(_cheb(T.I0_LARGE, 16.0 / x - 1.0), x)


def i1(x: float) -> float:
    if math.isnan(x):
        return math.nan
    ax = abs(x)
    if ax <= 8.0:
        return x * _cheb(T.I1_SMALL, ax / 4.0 - 1.0) * math.exp(ax)
    if math.isinf(x):
        return x
    return math.copysign(_exp_scaled(_cheb(T.I1_LARGE, 16.0 / ax - 1.0), ax), x)


def k0(x: float) -> float:
    if _check_positive("K0", x):
        return math.nan
    if x <= 2.0:
        return _cheb(T.K0_SMALL, _u_small(x, 2.0)) - math.log(x) * i0(x)
    if math.isinf(x):
        return 0.0
    return _cheb(T.K0_LARGE, 4.0 / x - 1.0) * math.exp(-x) / math.sqrt(x)


def k1(x: float) -> float:
    if _check_positive("K1", x):
        return math.nan
    if x <= 2.0:
        return x * _cheb(T.K1_SMALL, _u_small(x, 2.0)) + 1.0 / x + math.log(x) * i1(x)
    if math.isinf(x):
        return 0.0
    return _cheb(T.K1_LARGE, 4.0 / x - 1.0) * math.exp(-x) / math.sqrt(x)


_DISPATCH = {
    BesselKind.J0: j0,
    BesselKind.J1: j1,
    BesselKind.Y0: y0,
    BesselKind.Y1: y1,
    BesselKind.I0: i0,
    BesselKind.I1: i1,
    BesselKind.K0: k0,
    BesselKind.K1: k1,
}


def bessel(kind, x: float) -> float:
    """Evaluate the Bessel function named by ``kind`` ("J0", BesselKind.K1, ...) at x."""
    return _DISPATCH[BesselKind(kind)](float(x))


class BesselFunction:
    """A Bessel function of fixed kind as a univariate function object."""

    def __init__(self, kind):
        self.kind = BesselKind(kind)
        self._f = _DISPATCH[self.kind]

    def eval(self, x: float) -> float:
        return self._f(float(x))

    __call__ = eval
