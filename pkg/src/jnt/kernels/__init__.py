"""BLAS-style kernels with offset-based calling conventions."""
from jnt.kernels.blas1 import (
    DAXPY_VARIANTS,
    DDOT_VARIANTS,
    daxpy,
    daxpy_col,
    dcopy,
    ddot,
    dnrm2,
    dscal,
    idamax,
)
from jnt.kernels.blas2 import dgemv
from jnt.kernels.blas3 import (
    ALL_GEMM_CONFIGS,
    TABLE_GEMM_CONFIGS,
    gemm,
    gemm_blocked,
    gemm_sub,
    optimal_block_size,
)
from jnt.kernels.storage import DenseMatrix, GemmConfig, Indexing, LoopOrder, VectorView

__all__ = [
    "ALL_GEMM_CONFIGS",
    "DAXPY_VARIANTS",
    "DDOT_VARIANTS",
    "DenseMatrix",
    "GemmConfig",
    "Indexing",
    "LoopOrder",
    "TABLE_GEMM_CONFIGS",
    "VectorView",
    "daxpy",
    "daxpy_col",
    "dcopy",
    "ddot",
    "dgemv",
    "dnrm2",
    "dscal",
    "gemm",
    "gemm_blocked",
    "gemm_sub",
    "idamax",
    "optimal_block_size",
]
