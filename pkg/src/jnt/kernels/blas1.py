"""Level 1 BLAS: daxpy and ddot unroll variants plus auxiliary vector kernels.

Every public routine takes a count ``n`` and :class:`VectorView` operands (a
bare array is treated as a view of the whole thing).  The jitted ``_``-prefixed
cores take ``(data, offset)`` pairs, mirroring the ``daxpy(n, a, x, i, y, i)``
calling sequence, and are what the benchmark harness times directly.
"""
from __future__ import annotations

import math

from numba import njit

from jnt.errors import BoundsError, ConfigurationError, DimensionError
from jnt.kernels.storage import DenseMatrix, as_view

DAXPY_VARIANTS = ("1", "4", "4-inc", "8")
DDOT_VARIANTS = ("1", "4", "8")


@njit(cache=True)
def _daxpy_u1(n, a, x, xo, y, yo):
    for i in range(n):
        y[yo + i] += a * x[xo + i]


@njit(cache=True)
def _daxpy_u4(n, a, x, xo, y, yo):
    m = n % 4
    for i in range(m):
        y[yo + i] += a * x[xo + i]
    for i in range(m, n, 4):
        y[yo + i] += a * x[xo + i]
        y[yo + i + 1] += a * x[xo + i + 1]
        y[yo + i + 2] += a * x[xo + i + 2]
        y[yo + i + 3] += a * x[xo + i + 3]


@njit(cache=True)
def _daxpy_u4inc(n, a, x, xo, y, yo):
    m = n % 4
    ix = xo
    iy = yo
    for _ in range(m):
        y[iy] += a * x[ix]
        ix += 1
        iy += 1
    end = xo + n
    while ix < end:
        y[iy] += a * x[ix]
        ix += 1
        iy += 1
        y[iy] += a * x[ix]
        ix += 1
        iy += 1
        y[iy] += a * x[ix]
        ix += 1
        iy += 1
        y[iy] += a * x[ix]
        ix += 1
        iy += 1


@njit(cache=True)
def _daxpy_u8(n, a, x, xo, y, yo):
    m = n % 8
    for i in range(m):
        y[yo + i] += a * x[xo + i]
    for i in range(m, n, 8):
        y[yo + i] += a * x[xo + i]
        y[yo + i + 1] += a * x[xo + i + 1]
        y[yo + i + 2] += a * x[xo + i + 2]
        y[yo + i + 3] += a * x[xo + i + 3]
        y[yo + i + 4] += a * x[xo + i + 4]
        y[yo + i + 5] += a * x[xo + i + 5]
        y[yo + i + 6] += a * x[xo + i + 6]
        y[yo + i + 7] += a * x[xo + i + 7]


# ddot keeps a single accumulator and adds terms in increasing index order in
# every variant, so the tail is handled after the unrolled body.
@njit(cache=True)
def _ddot_u1(n, x, xo, y, yo):
    s = 0.0
    for i in range(n):
        s += x[xo + i] * y[yo + i]
    return s


@njit(cache=True)
def _ddot_u4(n, x, xo, y, yo):
    s = 0.0
    body = n - n % 4
    for i in range(0, body, 4):
        s += x[xo + i] * y[yo + i]
        s += x[xo + i + 1] * y[yo + i + 1]
        s += x[xo + i + 2] * y[yo + i + 2]
        s += x[xo + i + 3] * y[yo + i + 3]
    for i in range(body, n):
        s += x[xo + i] * y[yo + i]
    return s


@njit(cache=True)
def _ddot_u8(n, x, xo, y, yo):
    s = 0.0
    body = n - n % 8
    for i in range(0, body, 8):
        s += x[xo + i] * y[yo + i]
        s += x[xo + i + 1] * y[yo + i + 1]
        s += x[xo + i + 2] * y[yo + i + 2]
        s += x[xo + i + 3] * y[yo + i + 3]
        s += x[xo + i + 4] * y[yo + i + 4]
        s += x[xo + i + 5] * y[yo + i + 5]
        s += x[xo + i + 6] * y[yo + i + 6]
        s += x[xo + i + 7] * y[yo + i + 7]
    for i in range(body, n):
        s += x[xo + i] * y[yo + i]
    return s


@njit(cache=True)
def _daxpy_strided(n, a, x, xo, incx, y, yo, incy):
    for k in range(n):
        y[yo + k * incy] += a * x[xo + k * incx]


@njit(cache=True)
def _dscal(n, a, x, xo):
    for i in range(n):
        x[xo + i] *= a


@njit(cache=True)
def _dnrm2(n, x, xo, incx):
    # scaled sum of squares; avoids overflow for entries near the float max
    scale = 0.0
    ssq = 1.0
    for k in range(n):
        v = x[xo + k * incx]
        if v != 0.0:
            a = abs(v)
            if scale < a:
                ssq = 1.0 + ssq * (scale / a) ** 2
                scale = a
            else:
                ssq += (a / scale) ** 2
    return scale * math.sqrt(ssq)


@njit(cache=True)
def _idamax(n, x, xo, incx):
    best = 0
    big = abs(x[xo])
    for k in range(1, n):
        v = abs(x[xo + k * incx])
        if v > big:
            big = v
            best = k
    return best


DAXPY_CORES = {"1": _daxpy_u1, "4": _daxpy_u4, "4-inc": _daxpy_u4inc, "8": _daxpy_u8}
DDOT_CORES = {"1": _ddot_u1, "4": _ddot_u4, "8": _ddot_u8}


def _variant(variant, allowed):
    label = str(variant)
    if label not in allowed:
        raise ConfigurationError(f"unknown unroll variant {variant!r}; expected one of {allowed}")
    return label


def _check(n, *views):
    if n < 0:
        raise BoundsError(f"negative count {n}")
    for v in views:
        if n > v.n:
            raise BoundsError(f"count {n} exceeds view of length {v.n}")


def daxpy(n, alpha, x, y, variant="1"):
    """y <- y + alpha*x over the first ``n`` elements of each view.

    ``variant`` selects the unroll depth: ``1``, ``4``, ``4-inc`` or ``8``.
    All variants perform the identical per-element operation and therefore
    produce bit-identical results.  ``alpha == 0`` returns without touching
    y, as in the reference BLAS.
    """
    core = DAXPY_CORES[_variant(variant, DAXPY_VARIANTS)]
    x, y = as_view(x), as_view(y)
    _check(n, x, y)
    if alpha == 0.0:
        return
    core(n, float(alpha), x.data, x.offset, y.data, y.offset)


def ddot(n, x, y, variant="1") -> float:
    """Sum of x[i]*y[i] for i < n, accumulated left to right."""
    core = DDOT_CORES[_variant(variant, DDOT_VARIANTS)]
    x, y = as_view(x), as_view(y)
    _check(n, x, y)
    return float(core(n, x.data, x.offset, y.data, y.offset))


def daxpy_col(n, alpha, A: DenseMatrix, arow, acol, B: DenseMatrix, brow, bcol):
    """Column form: B[brow+k, bcol] += alpha * A[arow+k, acol] for k < n."""
    if n < 0:
        raise BoundsError(f"negative count {n}")
    if n == 0:
        return
    for M, r, c in ((A, arow, acol), (B, brow, bcol)):
        if r < 0 or c < 0 or r + n > M.rows or c >= M.cols:
            raise BoundsError(
                f"column segment rows {r}..{r + n - 1}, col {c} escapes {M.rows}x{M.cols} matrix"
            )
    if alpha == 0.0:
        return
    _daxpy_strided(
        n, float(alpha), A.data, arow * A.cols + acol, A.cols, B.data, brow * B.cols + bcol, B.cols
    )


def dscal(n, alpha, x):
    x = as_view(x)
    _check(n, x)
    _dscal(n, float(alpha), x.data, x.offset)


def dcopy(n, x, y):
    x, y = as_view(x), as_view(y)
    _check(n, x, y)
    y.data[y.offset : y.offset + n] = x.data[x.offset : x.offset + n]


def dnrm2(n, x) -> float:
    x = as_view(x)
    _check(n, x)
    if n == 0:
        return 0.0
    return float(_dnrm2(n, x.data, x.offset, 1))


def idamax(n, x) -> int:
    """Index (relative to the view) of the first element of largest magnitude."""
    x = as_view(x)
    _check(n, x)
    if n == 0:
        raise DimensionError("idamax of an empty vector has no candidate index")
    return int(_idamax(n, x.data, x.offset, 1))
