"""Householder QR factorization and least-squares solves."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from jnt.errors import DimensionError, RankDeficientError
from jnt.kernels.blas1 import _dnrm2
from jnt.kernels.storage import DenseMatrix, as_view

EPS = np.finfo(np.float64).eps


@dataclass(eq=False)
class QrFactorization:
    """A = Q*R with Q = H_0 H_1 ... H_{n-1}, H_k = I - tau_k v_k v_k^T.

    R occupies the upper triangle of ``qr``; below the diagonal of column k
    sit the tail entries of v_k, whose leading entry is an implicit 1.
    """

    qr: DenseMatrix
    tau: np.ndarray

    @property
    def shape(self):
        return self.qr.shape

    def r(self) -> DenseMatrix:
        m, n = self.shape
        return DenseMatrix.from_array(np.triu(self.qr.to_array()[:n, :]))

    def reflector(self, k) -> np.ndarray:
        m, _ = self.shape
        v = np.zeros(m)
        v[k] = 1.0
        v[k + 1 :] = self.qr.to_array()[k + 1 :, k]
        return v

    def apply_qt(self, b) -> np.ndarray:
        """Q^T b, as a new array."""
        y = np.array(as_view(b).values(), dtype=np.float64)
        if len(y) != self.shape[0]:
            raise DimensionError(f"vector has {len(y)} entries, Q has order {self.shape[0]}")
        _apply_reflectors(self.qr.data, self.shape[0], self.shape[1], self.tau, y, False)
        return y

    def apply_q(self, b) -> np.ndarray:
        y = np.array(as_view(b).values(), dtype=np.float64)
        if len(y) != self.shape[0]:
            raise DimensionError(f"vector has {len(y)} entries, Q has order {self.shape[0]}")
        _apply_reflectors(self.qr.data, self.shape[0], self.shape[1], self.tau, y, True)
        return y

    def q(self, full=False) -> DenseMatrix:
        """Explicit Q: m x n (thin) by default, m x m with ``full=True``."""
        m, n = self.shape
        cols = m if full else n
        out = np.empty((m, cols))
        for j in range(cols):
            e = np.zeros(m)
            e[j] = 1.0
            out[:, j] = self.apply_q(e)
        return DenseMatrix.from_array(out)


@njit(cache=True)
def _householder(a, m, n, tau):
    for k in range(n):
        kk = k * n + k
        alpha = a[kk]
        tail = _dnrm2(m - k - 1, a, kk + n, n) if k + 1 < m else 0.0
        if tail == 0.0:
            tau[k] = 0.0
            continue
        norm = math.hypot(alpha, tail)
        # beta takes the sign opposite alpha so that alpha - beta never cancels
        beta = -norm if alpha >= 0.0 else norm
        scale = 1.0 / (alpha - beta)
        for i in range(k + 1, m):
            a[i * n + k] *= scale
        tau[k] = (beta - alpha) / beta
        a[kk] = beta
        for j in range(k + 1, n):
            w = a[k * n + j]
            for i in range(k + 1, m):
                w += a[i * n + k] * a[i * n + j]
            w *= tau[k]
            a[k * n + j] -= w
            for i in range(k + 1, m):
                a[i * n + j] -= w * a[i * n + k]


@njit(cache=True)
def _apply_reflectors(a, m, n, tau, y, forward_q):
    for step in range(n):
        k = n - 1 - step if forward_q else step
        if tau[k] == 0.0:
            continue
        w = y[k]
        for i in range(k + 1, m):
            w += a[i * n + k] * y[i]
        w *= tau[k]
        y[k] -= w
        for i in range(k + 1, m):
            y[i] -= w * a[i * n + k]


def qr_factor(A: DenseMatrix) -> QrFactorization:
    """Householder QR of an m x n matrix with m >= n, without pivoting."""
    m, n = A.rows, A.cols
    if m < n:
        raise DimensionError(f"QR needs rows >= cols, got {m}x{n}")
    a = A.data.copy()
    tau = np.zeros(n)
    _householder(a, m, n, tau)
    return QrFactorization(DenseMatrix(m, n, a), tau)


@njit(cache=True)
def _back_substitute(a, n, y):
    for i in range(n - 1, -1, -1):
        s = y[i]
        for j in range(i + 1, n):
            s -= a[i * n + j] * y[j]
        y[i] = s / a[i * n + i]


def qr_solve_lstsq(f: QrFactorization, b) -> np.ndarray:
    """Minimize ||A x - b||_2; returns x of length n.

    Raises :class:`RankDeficientError` when a diagonal entry of R is at or
    below m * eps * max|R|.
    """
    m, n = f.shape
    y = f.apply_qt(b)
    diag = np.abs(np.diag(f.qr.to_array()[:n, :n]))
    rmax = np.max(np.abs(np.triu(f.qr.to_array()[:n, :]))) if n else 0.0
    small = np.flatnonzero(diag <= m * EPS * rmax)
    if len(small):
        raise RankDeficientError(int(small[0]))
    x = y[:n].copy()
    _back_substitute(f.qr.data, n, x)
    return x
