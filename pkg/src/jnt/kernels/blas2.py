"""Level 2 BLAS: y <- alpha*A*x + beta*y with row-wise dot products."""
from numba import njit

from jnt.errors import DimensionError
from jnt.kernels.storage import DenseMatrix, as_view


@njit(cache=True)
def _dgemv(r, c, alpha, a, x, xo, beta, y, yo):
    for i in range(r):
        base = i * c
        s = 0.0
        for j in range(c):
            s += a[base + j] * x[xo + j]
        if beta == 0.0:
            y[yo + i] = alpha * s
        else:
            y[yo + i] = alpha * s + beta * y[yo + i]


def dgemv(alpha, A: DenseMatrix, x, beta, y):
    """y <- alpha*A*x + beta*y.

    With ``beta == 0`` the old contents of ``y`` are ignored (NaNs included),
    and ``alpha == 0, beta == 1`` leaves ``y`` untouched.
    """
    x, y = as_view(x), as_view(y)
    if x.n != A.cols or y.n != A.rows:
        raise DimensionError(f"dgemv: A is {A.rows}x{A.cols}, x has {x.n}, y has {y.n}")
    if alpha == 0.0 and beta == 1.0:
        return
    _dgemv(A.rows, A.cols, float(alpha), A.data, x.data, x.offset, float(beta), y.data, y.offset)
