"""Dense LU and QR factorizations, linear solves and least squares."""
from jnt.dense.lu import LuFactorization, lu_factor, lu_solve
from jnt.dense.qr import QrFactorization, qr_factor, qr_solve_lstsq
from jnt.dense.smart import SmartMatrix, smart_solve

__all__ = [
    "LuFactorization",
    "QrFactorization",
    "SmartMatrix",
    "lu_factor",
    "lu_solve",
    "qr_factor",
    "qr_solve_lstsq",
    "smart_solve",
]
