"""Level 3 BLAS: GEMM loop variants, two-level blocked GEMM and sub-array updates."""
from __future__ import annotations

import os

import numpy as np
from numba import njit

from jnt.errors import BoundsError, ConfigurationError, DimensionError
from jnt.kernels._gemm_variants import VARIANTS, tile2, tile4, tile8
from jnt.kernels.storage import (
    DEFAULT_BLOCKING,
    DenseMatrix,
    GemmConfig,
    Indexing,
    LoopOrder,
    check_block_sizes,
)

BLOCK_ENV = "JNT_BLOCK"


def optimal_block_size():
    """Return the (outer, inner) block pair for this platform.

    Defaults to (40, 8); set ``JNT_BLOCK=outer,inner`` to override.
    """
    raw = os.environ.get(BLOCK_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_BLOCKING
    try:
        outer, inner = (int(part) for part in raw.split(","))
    except ValueError:
        raise ConfigurationError(f"{BLOCK_ENV}={raw!r} is not of the form 'outer,inner'") from None
    try:
        check_block_sizes(outer, inner)
    except ConfigurationError as exc:
        raise ConfigurationError(f"{BLOCK_ENV}={raw!r}: {exc}") from None
    return (outer, inner)


def variant_core(config: GemmConfig):
    """The jitted unblocked kernel implementing ``config``."""
    order = config.loop_order.name.lower()
    indexing = "nested" if config.indexing is Indexing.NESTED else "1d"
    return VARIANTS[(order, indexing, config.unroll)]


@njit(cache=True)
def _edge(a, b, c, n, m, i0, i1, j0, j1, k0, k1):
    for i in range(i0, i1):
        ci = i * m
        ai = i * n
        for j in range(j0, j1):
            s = c[ci + j]
            for k in range(k0, k1):
                s += a[ai + k] * b[k * m + j]
            c[ci + j] = s


@njit(cache=True)
def _tile_generic(a, b, c, n, m, i0, j0, k0, k1, ib, acc):
    for r in range(ib):
        for s in range(ib):
            acc[r, s] = c[(i0 + r) * m + j0 + s]
    for k in range(k0, k1):
        bk = k * m + j0
        for r in range(ib):
            ar = a[(i0 + r) * n + k]
            for s in range(ib):
                acc[r, s] += ar * b[bk + s]
    for r in range(ib):
        for s in range(ib):
            c[(i0 + r) * m + j0 + s] = acc[r, s]


@njit(cache=True)
def _gemm_blocked(a, b, c, l, m, n, ob, ib):
    acc = np.empty((ib, ib))
    for i0 in range(0, l, ob):
        i1 = min(i0 + ob, l)
        ie = i0 + (i1 - i0) // ib * ib
        for j0 in range(0, m, ob):
            j1 = min(j0 + ob, m)
            je = j0 + (j1 - j0) // ib * ib
            for k0 in range(0, n, ob):
                k1 = min(k0 + ob, n)
                for ii in range(i0, ie, ib):
                    for jj in range(j0, je, ib):
                        if ib == 8:
                            tile8(a, b, c, n, m, ii, jj, k0, k1)
                        elif ib == 4:
                            tile4(a, b, c, n, m, ii, jj, k0, k1)
                        elif ib == 2:
                            tile2(a, b, c, n, m, ii, jj, k0, k1)
                        else:
                            _tile_generic(a, b, c, n, m, ii, jj, k0, k1, ib, acc)
                # ragged strips along the matrix edges
                _edge(a, b, c, n, m, ie, i1, j0, j1, k0, k1)
                _edge(a, b, c, n, m, i0, ie, je, j1, k0, k1)


@njit(cache=True)
def _gemm_sub(l, m, n, alpha, a, ao, lda, b, bo, ldb, c, co, ldc):
    # (i,k,j) order: a row-wise daxpy per (i, k) pair
    for i in range(l):
        ci = co + i * ldc
        ai = ao + i * lda
        for k in range(n):
            aik = alpha * a[ai + k]
            bk = bo + k * ldb
            for j in range(m):
                c[ci + j] += aik * b[bk + j]


def _conformal(A, B, C):
    if A.cols != B.rows or C.rows != A.rows or C.cols != B.cols:
        raise DimensionError(
            f"gemm shapes do not conform: A {A.shape}, B {B.shape}, C {C.shape}"
        )


def gemm(A: DenseMatrix, B: DenseMatrix, C: DenseMatrix, config: GemmConfig = GemmConfig()):
    """C <- C + A*B using the traversal described by ``config``.

    A is L x N, B is N x M and C is L x M.  C must not share storage with A
    or B; that is not checked.
    """
    _conformal(A, B, C)
    if config.blocking is not None:
        gemm_blocked(A, B, C, *config.blocking)
        return
    variant_core(config)(A.data, B.data, C.data, A.rows, B.cols, A.cols)


def gemm_blocked(A: DenseMatrix, B: DenseMatrix, C: DenseMatrix, outer_block=None, inner_block=None):
    """Two-level blocked (i,j,k) GEMM: outer cache blocks with unrolled register sub-blocks.

    Block sizes default to :func:`optimal_block_size`.  The inner block must
    divide the outer block; matrix dimensions need not be multiples of either.
    """
    if outer_block is None or inner_block is None:
        outer, inner = optimal_block_size()
        outer_block = outer if outer_block is None else outer_block
        inner_block = inner if inner_block is None else inner_block
    check_block_sizes(outer_block, inner_block)
    _conformal(A, B, C)
    _gemm_blocked(A.data, B.data, C.data, A.rows, B.cols, A.cols, int(outer_block), int(inner_block))


def gemm_sub(l, m, n, alpha, A: DenseMatrix, arow, acol, B: DenseMatrix, brow, bcol, C: DenseMatrix, crow, ccol):
    """Sub-array form: C[crow:+l, ccol:+m] += alpha * A[arow:+l, acol:+n] * B[brow:+n, bcol:+m].

    This is the offset calling sequence used for rank-K trailing updates.
    """
    for M, r, c, rr, cc in ((A, arow, acol, l, n), (B, brow, bcol, n, m), (C, crow, ccol, l, m)):
        if min(r, c, rr, cc) < 0 or r + rr > M.rows or c + cc > M.cols:
            raise BoundsError(f"{rr}x{cc} block at ({r}, {c}) escapes {M.rows}x{M.cols} matrix")
    if l == 0 or m == 0 or n == 0:
        return
    _gemm_sub(
        l, m, n, float(alpha),
        A.data, arow * A.cols + acol, A.cols,
        B.data, brow * B.cols + bcol, B.cols,
        C.data, crow * C.cols + ccol, C.cols,
    )


ALL_GEMM_CONFIGS = tuple(
    GemmConfig(order, indexing, unroll)
    for order in LoopOrder
    for indexing in Indexing
    for unroll in (1, 4, 8)
)

# The nine configurations of the loop-optimization table: plain, 1d, 1d+unroll4.
TABLE_GEMM_CONFIGS = tuple(
    GemmConfig(order, indexing, unroll)
    for order in LoopOrder
    for indexing, unroll in ((Indexing.NESTED, 1), (Indexing.ONE_DIM, 1), (Indexing.ONE_DIM, 4))
)
