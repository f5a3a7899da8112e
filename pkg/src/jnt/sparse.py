"""Coordinate-format sparse matrices and representation-independent CG."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Protocol, Tuple, runtime_checkable

import numpy as np
from numba import njit

from jnt.errors import BreakdownError, DimensionError, MalformedMatrixError, ZeroDiagonalError
from jnt.kernels.blas2 import dgemv
from jnt.kernels.storage import DenseMatrix, as_view


@dataclass(eq=False)
class CooMatrix:
    """Sparse matrix as (row, col, value) triplets, 0-based.

    Duplicate coordinates are legal and add up.  Stored order is preserved
    and is the order in which ``coo_matvec`` visits entries.
    """

    rows: int
    cols: int
    row_index: np.ndarray
    col_index: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.row_index = np.ascontiguousarray(self.row_index, dtype=np.int64)
        self.col_index = np.ascontiguousarray(self.col_index, dtype=np.int64)
        self.values = np.ascontiguousarray(self.values, dtype=np.float64)
        if not (len(self.row_index) == len(self.col_index) == len(self.values)):
            raise MalformedMatrixError("row, column and value arrays differ in length")
        if self.rows < 0 or self.cols < 0:
            raise MalformedMatrixError(f"negative shape ({self.rows}, {self.cols})")
        self.validate()

    def validate(self):
        bad = np.flatnonzero(
            (self.row_index < 0)
            | (self.row_index >= self.rows)
            | (self.col_index < 0)
            | (self.col_index >= self.cols)
        )
        if len(bad):
            k = int(bad[0])
            raise MalformedMatrixError(
                f"entry {k} at ({self.row_index[k]}, {self.col_index[k]}) "
                f"outside {self.rows}x{self.cols} matrix"
            )

    @property
    def nnz(self) -> int:
        return len(self.values)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @classmethod
    def from_triplets(cls, rows, cols, triplets) -> "CooMatrix":
        triplets = list(triplets)
        if not triplets:
            return cls(rows, cols, [], [], [])
        r, c, v = zip(*triplets)
        return cls(rows, cols, r, c, v)

    @classmethod
    def identity(cls, n) -> "CooMatrix":
        idx = np.arange(n)
        return cls(n, n, idx, idx, np.ones(n))

    @classmethod
    def from_dense(cls, A: DenseMatrix) -> "CooMatrix":
        arr = A.to_array()
        r, c = np.nonzero(arr)
        return cls(A.rows, A.cols, r, c, arr[r, c])


@njit(cache=True)
def _coo_matvec(nnz, ri, ci, v, x, xo, y, yo, r):
    for i in range(r):
        y[yo + i] = 0.0
    for k in range(nnz):
        y[yo + ri[k]] += v[k] * x[xo + ci[k]]


def coo_matvec(A: CooMatrix, x, y):
    """y <- A*x in one pass over the stored entries (2*nnz flops)."""
    x, y = as_view(x), as_view(y)
    if x.n != A.cols or y.n != A.rows:
        raise DimensionError(f"matvec: A is {A.rows}x{A.cols}, x has {x.n}, y has {y.n}")
    _coo_matvec(A.nnz, A.row_index, A.col_index, A.values, x.data, x.offset, y.data, y.offset, A.rows)


def densify(A: CooMatrix) -> DenseMatrix:
    out = np.zeros((A.rows, A.cols))
    np.add.at(out, (A.row_index, A.col_index), A.values)
    return DenseMatrix.from_array(out)


@runtime_checkable
class LinearOperator(Protocol):
    def dims(self) -> Tuple[int, int]: ...

    def apply(self, x: np.ndarray) -> np.ndarray: ...


@runtime_checkable
class Preconditioner(Protocol):
    def apply(self, r: np.ndarray) -> np.ndarray: ...


class CooOperator:
    def __init__(self, A: CooMatrix):
        self.matrix = A

    def dims(self):
        return self.matrix.shape

    def apply(self, x):
        y = np.empty(self.matrix.rows)
        coo_matvec(self.matrix, np.asarray(x, dtype=np.float64), y)
        return y


class DenseOperator:
    def __init__(self, A: DenseMatrix):
        self.matrix = A

    def dims(self):
        return self.matrix.shape

    def apply(self, x):
        y = np.empty(self.matrix.rows)
        dgemv(1.0, self.matrix, np.asarray(x, dtype=np.float64), 0.0, y)
        return y


def coo_as_operator(A: CooMatrix) -> LinearOperator:
    return CooOperator(A)


def dense_as_operator(A: DenseMatrix) -> LinearOperator:
    return DenseOperator(A)


class JacobiPreconditioner:
    """z_i = r_i / d_i with d the (summed) diagonal of A."""

    def __init__(self, diagonal):
        self.diagonal = np.asarray(diagonal, dtype=np.float64)
        zero = np.flatnonzero(self.diagonal == 0.0)
        if len(zero):
            raise ZeroDiagonalError(int(zero[0]))

    def apply(self, r):
        return np.asarray(r, dtype=np.float64) / self.diagonal


def jacobi_preconditioner(A: CooMatrix) -> JacobiPreconditioner:
    if A.rows != A.cols:
        raise DimensionError(f"Jacobi needs a square matrix, got {A.rows}x{A.cols}")
    d = np.zeros(A.rows)
    on_diag = A.row_index == A.col_index
    np.add.at(d, A.row_index[on_diag], A.values[on_diag])
    return JacobiPreconditioner(d)


@dataclass
class CGResult:
    x: np.ndarray
    iterations: int
    residual_history: List[float] = field(default_factory=list)
    converged: bool = False

    def __iter__(self):
        # allows ``x, iterations, history = cg_solve(...)``
        return iter((self.x, self.iterations, self.residual_history))


def cg_solve(
    op: LinearOperator,
    b,
    M: Optional[Preconditioner] = None,
    tol: float = 1e-8,
    maxiter: Optional[int] = None,
    x0=None,
) -> CGResult:
    """Preconditioned conjugate gradient for symmetric positive definite ``op``.

    Stops once ||b - A x||_2 / ||b||_2 <= tol.  When the recurrence residual
    reaches the target the true residual is recomputed; convergence is only
    declared on the true value.  ``residual_history[0]`` is the starting
    residual and the last entry is always a recomputed true residual.  If
    ``maxiter`` runs out the current iterate is returned with
    ``converged=False``.
    """
    r_dim, c_dim = op.dims()
    if r_dim != c_dim:
        raise DimensionError(f"CG needs a square operator, got {r_dim}x{c_dim}")
    b = np.asarray(b, dtype=np.float64)
    if len(b) != r_dim:
        raise DimensionError(f"right-hand side has {len(b)} entries, operator order is {r_dim}")
    n = r_dim
    if maxiter is None:
        maxiter = 10 * max(n, 1)
    bnorm = math.sqrt(float(b @ b))
    x = np.zeros(n) if x0 is None else np.array(x0, dtype=np.float64)
    if bnorm == 0.0:
        return CGResult(np.zeros(n), 0, [0.0], True)

    def precondition(v):
        return v.copy() if M is None else M.apply(v)

    r = b - op.apply(x)
    history = [math.sqrt(float(r @ r)) / bnorm]
    if history[0] <= tol:
        return CGResult(x, 0, history, True)
    z = precondition(r)
    p = z.copy()
    rz = float(r @ z)
    for it in range(1, maxiter + 1):
        q = op.apply(p)
        curvature = float(p @ q)
        if not curvature > 0.0:
            raise BreakdownError(it, curvature)
        alpha = rz / curvature
        x += alpha * p
        r -= alpha * q
        rel = math.sqrt(float(r @ r)) / bnorm
        if rel <= tol:
            r = b - op.apply(x)
            rel = math.sqrt(float(r @ r)) / bnorm
            history.append(rel)
            if rel <= tol:
                return CGResult(x, it, history, True)
            # recurrence drifted: restart from the true residual
            z = precondition(r)
            p = z.copy()
            rz = float(r @ z)
            continue
        history.append(rel)
        z = precondition(r)
        rz_next = float(r @ z)
        p = z + (rz_next / rz) * p
        rz = rz_next
    r = b - op.apply(x)
    history[-1] = math.sqrt(float(r @ r)) / bnorm
    return CGResult(x, maxiter, history, False)
