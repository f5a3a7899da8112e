"""A dense matrix that factors itself on demand and caches the result."""
from __future__ import annotations

from typing import Optional

import numpy as np

from jnt.dense.lu import LuFactorization, lu_factor, lu_solve
from jnt.dense.qr import QrFactorization, qr_factor, qr_solve_lstsq
from jnt.kernels.storage import DenseMatrix


class SmartMatrix:
    """Dense matrix with cached LU and QR factorizations.

    Solving computes a factorization the first time it is needed and reuses
    it afterwards. Every element write goes through :meth:`__setitem__`, which
    bumps ``stamp`` so stale factorizations are never used.  The
    ``factorization_count`` probe counts factorizations actually performed.

    Single writer: concurrent reads are fine between mutations, but nothing
    is locked.
    """

    def __init__(self, matrix: DenseMatrix, rank_k: int = 16):
        self._matrix = matrix.copy()
        self.rank_k = rank_k
        self.stamp = 0
        self.factorization_count = 0
        self._lu: Optional[tuple[int, LuFactorization]] = None
        self._qr: Optional[tuple[int, QrFactorization]] = None

    @classmethod
    def from_rows(cls, rows, **kwargs) -> "SmartMatrix":
        return cls(DenseMatrix.from_rows(rows), **kwargs)

    @property
    def matrix(self) -> DenseMatrix:
        """Read-only view; mutate through item assignment instead."""
        data = self._matrix.data.view()
        data.flags.writeable = False
        return DenseMatrix(self._matrix.rows, self._matrix.cols, data)

    @property
    def shape(self):
        return self._matrix.shape

    def __getitem__(self, ij):
        return self._matrix[ij]

    def __setitem__(self, ij, value):
        self._matrix[ij] = value
        self.stamp += 1

    @property
    def cached_lu(self) -> Optional[LuFactorization]:
        if self._lu is not None and self._lu[0] == self.stamp:
            return self._lu[1]
        return None

    @property
    def cached_qr(self) -> Optional[QrFactorization]:
        if self._qr is not None and self._qr[0] == self.stamp:
            return self._qr[1]
        return None

    def lu(self) -> LuFactorization:
        f = self.cached_lu
        if f is None:
            f = lu_factor(self._matrix, self.rank_k)
            self.factorization_count += 1
            self._lu = (self.stamp, f)
        return f

    def qr(self) -> QrFactorization:
        f = self.cached_qr
        if f is None:
            f = qr_factor(self._matrix)
            self.factorization_count += 1
            self._qr = (self.stamp, f)
        return f

    def solve(self, b) -> np.ndarray:
        return lu_solve(self.lu(), b)

    def lstsq(self, b) -> np.ndarray:
        return qr_solve_lstsq(self.qr(), b)


def smart_solve(S: SmartMatrix, b) -> np.ndarray:
    return S.solve(b)
