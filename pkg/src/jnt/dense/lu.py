"""Right-looking LU factorization with partial pivoting and rank-K trailing updates."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from jnt.errors import DimensionError, SingularMatrixError
from jnt.kernels.blas1 import _idamax
from jnt.kernels.blas3 import _gemm_sub
from jnt.kernels.storage import DenseMatrix, as_view

EPS = np.finfo(np.float64).eps


@dataclass(eq=False)
class LuFactorization:
    """Packed P*A = L*U.

    ``lu`` holds the unit lower triangle L below the diagonal and U on and
    above it.  At step i row i was swapped with row ``pivots[i]``.
    """

    lu: DenseMatrix
    pivots: np.ndarray
    perm_sign: int

    @property
    def n(self):
        return self.lu.rows

    def lower(self) -> DenseMatrix:
        a = np.tril(self.lu.to_array(), -1)
        a[np.diag_indices(self.n)] = 1.0
        return DenseMatrix.from_array(a)

    def upper(self) -> DenseMatrix:
        return DenseMatrix.from_array(np.triu(self.lu.to_array()))

    def permutation(self) -> DenseMatrix:
        """P as an explicit matrix, built by replaying the swaps on the identity."""
        order = np.arange(self.n)
        for i, p in enumerate(self.pivots):
            order[i], order[p] = order[p], order[i]
        return DenseMatrix.from_array(np.eye(self.n)[order])

    def determinant(self) -> float:
        return float(self.perm_sign * np.prod(np.diag(self.lu.to_array())))


@njit(cache=True)
def _swap_rows(a, n, i, p):
    if i != p:
        ri = i * n
        rp = p * n
        for j in range(n):
            t = a[ri + j]
            a[ri + j] = a[rp + j]
            a[rp + j] = t


@njit(cache=True)
def _factor_panel(a, n, j0, j1, pivots, threshold):
    """Unblocked factorization of columns j0..j1-1.

    Returns (failing column or -1, number of row swaps).
    """
    swaps = 0
    for j in range(j0, j1):
        p = j + _idamax(n - j, a, j * n + j, n)
        if abs(a[p * n + j]) <= threshold:
            return j, swaps
        pivots[j] = p
        if p != j:
            _swap_rows(a, n, j, p)
            swaps += 1
        piv = a[j * n + j]
        for i in range(j + 1, n):
            a[i * n + j] /= piv
        for i in range(j + 1, n):
            lij = a[i * n + j]
            for c in range(j + 1, j1):
                a[i * n + c] -= lij * a[j * n + c]
    return -1, swaps


@njit(cache=True)
def _panel_trsm(a, n, j0, j1):
    # U12 <- L11^{-1} A12, row by row
    for k in range(j0, j1):
        for p in range(j0, k):
            lkp = a[k * n + p]
            for c in range(j1, n):
                a[k * n + c] -= lkp * a[p * n + c]


def lu_factor(A: DenseMatrix, rank_k: int = 16) -> LuFactorization:
    """Factor a square matrix as P*A = L*U; ``A`` is left untouched.

    Columns are processed in panels of width ``rank_k``: each panel is
    factored unblocked, then the trailing submatrix receives one rank-K
    update through the GEMM sub-array kernel.  Every entry sees its updates
    in the same order as the unblocked algorithm, so the factors and pivots
    do not depend on ``rank_k``.
    """
    if A.rows != A.cols:
        raise DimensionError(f"LU needs a square matrix, got {A.rows}x{A.cols}")
    if rank_k < 1:
        raise ValueError(f"rank_k must be positive, got {rank_k}")
    n = A.rows
    a = A.data.copy()
    pivots = np.arange(n, dtype=np.int64)
    threshold = n * EPS * (np.max(np.abs(a)) if n else 0.0)
    sign = 1
    for j0 in range(0, n, rank_k):
        j1 = min(j0 + rank_k, n)
        failed, swaps = _factor_panel(a, n, j0, j1, pivots, threshold)
        if failed >= 0:
            raise SingularMatrixError(int(failed))
        if swaps % 2:
            sign = -sign
        if j1 < n:
            _panel_trsm(a, n, j0, j1)
            m = n - j1
            _gemm_sub(m, m, j1 - j0, -1.0, a, j1 * n + j0, n, a, j0 * n + j1, n, a, j1 * n + j1, n)
    return LuFactorization(DenseMatrix(n, n, a), pivots, sign)


@njit(cache=True)
def _lu_solve(a, n, pivots, x):
    for i in range(n):
        p = pivots[i]
        if p != i:
            t = x[i]
            x[i] = x[p]
            x[p] = t
    for i in range(n):
        s = x[i]
        for j in range(i):
            s -= a[i * n + j] * x[j]
        x[i] = s
    for i in range(n - 1, -1, -1):
        s = x[i]
        for j in range(i + 1, n):
            s -= a[i * n + j] * x[j]
        x[i] = s / a[i * n + i]


def lu_solve(f: LuFactorization, b) -> np.ndarray:
    """Solve A*x = b from a factorization; ``b`` is not modified."""
    b = as_view(b)
    if b.n != f.n:
        raise DimensionError(f"right-hand side has {b.n} entries, matrix order is {f.n}")
    x = b.values().copy()
    _lu_solve(f.lu.data, f.n, f.pivots, x)
    return x
