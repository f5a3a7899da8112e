"""Bracketed root finding for functions of one real variable."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Protocol, Union, runtime_checkable

from jnt.errors import BracketError

EPS = 2.0 ** -52


@runtime_checkable
class UnivariateFunction(Protocol):
    def eval(self, x: float) -> float: ...


Function = Union[UnivariateFunction, Callable[[float], float]]


def as_callable(f: Function) -> Callable[[float], float]:
    if isinstance(f, UnivariateFunction):
        return f.eval
    return f


@dataclass(frozen=True)
class RootResult:
    root: float
    iterations: int
    bracket_width: float
    converged: bool = True
    value: float = math.nan


def find_root(f: Function, a: float, b: float, tol: float = 1e-12, maxiter: int = 100) -> RootResult:
    """Brent's method on the bracket [a, b].

    Each step tries inverse quadratic interpolation (secant when only two
    distinct points are known) and falls back to bisection whenever the
    interpolated point would leave the bracket or shrink it too slowly.  ``f``
    is never evaluated outside [a, b].  On success the final bracket is no
    wider than ``max(tol, 4*eps*|root|)``; an exact zero reports width 0.
    """
    if not a < b:
        raise ValueError(f"need a < b, got [{a!r}, {b!r}]")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    g = as_callable(f)
    fa = float(g(a))
    fb = float(g(b))
    if fa == 0.0:
        return RootResult(a, 0, 0.0, True, fa)
    if fb == 0.0:
        return RootResult(b, 0, 0.0, True, fb)
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise BracketError(f"f({a!r}) = {fa!r} and f({b!r}) = {fb!r} have the same sign")

    # b: best estimate, a: previous b, c: contrapoint with f(c) opposite f(b)
    c, fc = a, fa
    d = e = b - a
    for it in range(1, maxiter + 1):
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 0.5 * max(tol, 4.0 * EPS * abs(b))
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1:
            return RootResult(b, it - 1, abs(c - b), True, fb)
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = xm
        else:
            d = e = xm
        a, fa = b, fb
        b = b + d if abs(d) > tol1 else b + math.copysign(tol1, xm)
        fb = float(g(b))
        if fb == 0.0:
            return RootResult(b, it, 0.0, True, fb)
    if (fb > 0.0) == (fc > 0.0):
        c = a
    width = abs(c - b)
    return RootResult(b, maxiter, width, width <= max(tol, 4.0 * EPS * abs(b)), fb)
