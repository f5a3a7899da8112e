"""Benchmark workloads: input generation, verification against a reference, timed repetition.

A workload owns the inputs of one kernel case.  ``verify`` runs the variant
once on fresh inputs, compares it with the case's reference and returns the
checksum of that single application; ``run(reps)`` is what gets timed.
"""
from __future__ import annotations

import os

import numpy as np
from numba import njit

from jnt.kernels import blas1
from jnt.kernels.blas3 import _gemm_blocked, variant_core
from jnt.kernels.storage import GemmConfig
from jnt.kernels.blas2 import dgemv
from jnt.special.rng import rng_fill_uniform, rng_next_uniform, rng_seed
from jnt.sparse import CooMatrix, _coo_matvec, densify

REFERENCE_GEMM = GemmConfig()
GEMM_RTOL = 1e-13


def scaled_error(result, reference, scale):
    """max_i |result_i - reference_i| / scale_i, with scale_i = 0 demanding equality.

    ``scale`` is the absolute-value evaluation of the same expression (e.g.
    |A||x|), the natural yardstick when the exact result can cancel to zero.
    """
    result, reference, scale = (np.asarray(v, dtype=np.float64).ravel() for v in (result, reference, scale))
    diff = np.abs(result - reference)
    if np.any(np.isnan(diff)):
        return np.inf
    exact = scale == 0.0
    if np.any(diff[exact] != 0.0):
        return np.inf
    if np.all(exact):
        return 0.0
    return float(np.max(diff[~exact] / scale[~exact]))


def relative_error(result, reference):
    """Componentwise relative error; 0/0 counts as 0 and x/0 as infinity."""
    result, reference = (np.asarray(v, dtype=np.float64).ravel() for v in (result, reference))
    return scaled_error(result, reference, np.abs(reference))


# Repetition drivers.  ddot and matvec outputs do not feed their next call, so
# each repetition folds its result back into an input via ``+ s * 0.0``: the
# value is unchanged but the compiler must still perform every call.

@njit(cache=True)
def _repeat_daxpy(reps, code, n, a, x, y):
    for _ in range(reps):
        if code == 0:
            blas1._daxpy_u1(n, a, x, 0, y, 0)
        elif code == 1:
            blas1._daxpy_u4(n, a, x, 0, y, 0)
        elif code == 2:
            blas1._daxpy_u4inc(n, a, x, 0, y, 0)
        else:
            blas1._daxpy_u8(n, a, x, 0, y, 0)


@njit(cache=True)
def _repeat_ddot(reps, code, n, x, y):
    total = 0.0
    for _ in range(reps):
        if code == 0:
            s = blas1._ddot_u1(n, x, 0, y, 0)
        elif code == 1:
            s = blas1._ddot_u4(n, x, 0, y, 0)
        else:
            s = blas1._ddot_u8(n, x, 0, y, 0)
        y[0] += s * 0.0
        total += s
    return total


@njit(cache=True)
def _repeat_coo(reps, nnz, ri, ci, v, x, y, r):
    for _ in range(reps):
        _coo_matvec(nnz, ri, ci, v, x, 0, y, 0, r)
        x[0] += y[0] * 0.0


class Level1Workload:
    def __init__(self, kernel, variant, n, seed):
        self.kernel = kernel
        self.variant = str(variant)
        self.n = n
        self.seed = seed
        if kernel == "daxpy":
            self.code = blas1.DAXPY_VARIANTS.index(self.variant)
        else:
            self.code = blas1.DDOT_VARIANTS.index(self.variant)
        self.sink = 0.0

    def _inputs(self):
        st = rng_seed(self.seed)
        x = rng_fill_uniform(st, self.n, -1.0, 1.0)
        y = rng_fill_uniform(st, self.n, -1.0, 1.0)
        alpha = 2.0 * rng_next_uniform(st) - 1.0
        return alpha, x, y

    def verify(self):
        alpha, x, y = self._inputs()
        if self.kernel == "daxpy":
            out = y.copy()
            blas1.daxpy(self.n, alpha, x, out, self.variant)
            ref = y.copy()
            blas1.daxpy(self.n, alpha, x, ref, "1")
            # the unroll-1 kernel itself is checked against numpy's elementwise y + a*x
            ok = np.array_equal(out, ref) and np.array_equal(ref, y + alpha * x)
            return ok, "daxpy output not bit-identical to y + alpha*x", float(np.sum(out))
        value = blas1.ddot(self.n, x, y, self.variant)
        ref = blas1.ddot(self.n, x, y, "1")
        bound = GEMM_RTOL * max(self.n, 1) * float(np.abs(x) @ np.abs(y))
        ok = value == ref and abs(ref - float(x @ y)) <= bound
        return ok, f"ddot {value!r} differs from reference {ref!r}", value

    def prepare(self):
        self.alpha, self.x, self.y = self._inputs()

    def run(self, reps):
        if self.kernel == "daxpy":
            _repeat_daxpy(reps, self.code, self.n, self.alpha, self.x, self.y)
        else:
            self.sink += _repeat_ddot(reps, self.code, self.n, self.x, self.y)


class GemmWorkload:
    """C += A*B with A l x n and B n x m."""

    def __init__(self, config: GemmConfig, l, m, n, seed):
        self.config = config
        self.l, self.m, self.n = l, m, n
        self.seed = seed

    def _inputs(self):
        st = rng_seed(self.seed)
        a = rng_fill_uniform(st, self.l * self.n, -1.0, 1.0)
        b = rng_fill_uniform(st, self.n * self.m, -1.0, 1.0)
        return a, b, np.zeros(self.l * self.m)

    def _kernel(self):
        if self.config.blocking is not None:
            outer, inner = self.config.blocking
            return lambda a, b, c: _gemm_blocked(a, b, c, self.l, self.m, self.n, outer, inner)
        core = variant_core(self.config)
        return lambda a, b, c: core(a, b, c, self.l, self.m, self.n)

    def verify(self):
        a, b, c = self._inputs()
        self._kernel()(a, b, c)
        ref = np.zeros_like(c)
        variant_core(REFERENCE_GEMM)(a, b, ref, self.l, self.m, self.n)
        tol = GEMM_RTOL * self.n
        err = relative_error(c, ref)
        A2, B2 = a.reshape(self.l, self.n), b.reshape(self.n, self.m)
        # the (i,j,k) reference itself is held to numpy's product on the |A||B| scale
        ref_err = scaled_error(ref, A2 @ B2, np.abs(A2) @ np.abs(B2))
        ok = err <= tol and ref_err <= tol
        return ok, f"relative error {err:.3e}, reference error {ref_err:.3e}, tolerance {tol:.1e}", float(np.sum(c))

    def prepare(self):
        self.a, self.b, self.c = self._inputs()
        self.kernel = self._kernel()

    def run(self, reps):
        kernel, a, b, c = self.kernel, self.a, self.b, self.c
        for _ in range(reps):
            kernel(a, b, c)


DENSE_ORACLE_LIMIT = 1000
SPARSE_RTOL = 1e-13


class SparseWorkload:
    def __init__(self, matrix: CooMatrix, seed):
        self.A = matrix
        self.seed = seed

    def _inputs(self):
        st = rng_seed(self.seed)
        return rng_fill_uniform(st, self.A.cols, -1.0, 1.0), np.zeros(self.A.rows)

    def verify(self):
        A = self.A
        x, y = self._inputs()
        _coo_matvec(A.nnz, A.row_index, A.col_index, A.values, x, 0, y, 0, A.rows)
        scale = np.zeros(A.rows)
        np.add.at(scale, A.row_index, np.abs(A.values) * np.abs(x)[A.col_index])
        if max(A.rows, A.cols) <= DENSE_ORACLE_LIMIT:
            ref = np.empty(A.rows)
            dgemv(1.0, densify(A), x, 0.0, ref)
            label = "densify+dgemv"
        else:
            ref = np.zeros(A.rows)
            np.add.at(ref, A.row_index, A.values * x[A.col_index])
            label = "scatter-add"
        err = scaled_error(y, ref, scale)
        return err <= SPARSE_RTOL, f"{label} oracle error {err:.3e}", float(np.sum(y))

    def prepare(self):
        self.x, self.y = self._inputs()

    def run(self, reps):
        A = self.A
        _repeat_coo(reps, A.nnz, A.row_index, A.col_index, A.values, self.x, self.y, A.rows)


def matrix_name(path) -> str:
    base = os.path.basename(os.fspath(path))
    for ext in (".gz", ".mtx"):
        if base.endswith(ext):
            base = base[: -len(ext)]
    return base.upper()
