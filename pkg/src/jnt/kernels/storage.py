"""Vector views, row-major dense matrices and GEMM configuration."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from jnt.errors import BoundsError, ConfigurationError, DimensionError

DEFAULT_BLOCKING = (40, 8)


def as_float_array(data) -> np.ndarray:
    """Return ``data`` as a contiguous 1-D float64 array, without copying if possible."""
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != 1:
        arr = arr.reshape(-1)
    return np.ascontiguousarray(arr)


@dataclass(eq=False)
class VectorView:
    """Window of ``n`` elements of ``data`` starting at ``offset``.

    This is the toolkit's substitute for passing the address of an array
    element: the whole storage and its offset travel together.  Kernels
    that mutate their output write through to ``data``.
    """

    data: np.ndarray
    offset: int = 0
    n: Optional[int] = None

    def __post_init__(self):
        self.data = as_float_array(self.data)
        if self.n is None:
            self.n = len(self.data) - self.offset
        if self.offset < 0 or self.n < 0 or self.offset + self.n > len(self.data):
            raise BoundsError(
                f"view offset={self.offset}, n={self.n} exceeds storage of length {len(self.data)}"
            )

    def __len__(self):
        return self.n

    def values(self) -> np.ndarray:
        """The viewed elements (a numpy view, not a copy)."""
        return self.data[self.offset : self.offset + self.n]

    def copy(self) -> "VectorView":
        return VectorView(self.values().copy())


def as_view(x) -> VectorView:
    if isinstance(x, VectorView):
        return x
    return VectorView(x)


@dataclass(eq=False)
class DenseMatrix:
    """``rows`` x ``cols`` matrix stored row-major in one contiguous array.

    Element (i, j) lives at ``data[i * cols + j]``; indexing is 0-based.
    """

    rows: int
    cols: int
    data: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative matrix shape ({self.rows}, {self.cols})")
        if self.data is None:
            self.data = np.zeros(self.rows * self.cols)
        else:
            self.data = as_float_array(self.data)
        if len(self.data) != self.rows * self.cols:
            raise DimensionError(
                f"storage of length {len(self.data)} does not hold a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def zeros(cls, rows, cols) -> "DenseMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n) -> "DenseMatrix":
        m = cls(n, n)
        m.data[:: n + 1] = 1.0
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "DenseMatrix":
        arr = np.array(rows, dtype=np.float64)
        if arr.ndim != 2:
            raise DimensionError("from_rows expects a rectangular nested sequence")
        return cls.from_array(arr)

    @classmethod
    def from_array(cls, arr) -> "DenseMatrix":
        arr = np.asarray(arr, dtype=np.float64)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-D array, got ndim={arr.ndim}")
        return cls(arr.shape[0], arr.shape[1], arr.copy().reshape(-1))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def _flat(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise BoundsError(f"index ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return i * self.cols + j

    def __getitem__(self, ij):
        return float(self.data[self._flat(*ij)])

    def __setitem__(self, ij, value):
        self.data[self._flat(*ij)] = value

    def to_array(self) -> np.ndarray:
        """2-D numpy view sharing storage with this matrix."""
        return self.data.reshape(self.rows, self.cols)

    def copy(self) -> "DenseMatrix":
        return DenseMatrix(self.rows, self.cols, self.data.copy())

    def row(self, i) -> VectorView:
        if not 0 <= i < self.rows:
            raise BoundsError(f"row {i} outside {self.rows}x{self.cols} matrix")
        return VectorView(self.data, i * self.cols, self.cols)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix.from_array(self.to_array().T)


class LoopOrder(enum.Enum):
    IJK = "(i,j,k)"
    KIJ = "(k,i,j)"
    IKJ = "(i,k,j)"

    @classmethod
    def parse(cls, value) -> "LoopOrder":
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower().replace("(", "").replace(")", "").replace(",", "")
        try:
            return cls[text.upper()]
        except KeyError:
            raise ConfigurationError(f"unknown loop order {value!r}") from None


class Indexing(enum.Enum):
    NESTED = "nested"
    ONE_DIM = "1d"


GEMM_UNROLLS = (1, 4, 8)


@dataclass(frozen=True)
class GemmConfig:
    """How ``gemm`` traverses the iteration space.

    ``blocking=None`` selects the plain triple loop; a pair
    ``(outer_block, inner_block)`` selects the two-level blocked kernel.
    """

    loop_order: LoopOrder = LoopOrder.IJK
    indexing: Indexing = Indexing.NESTED
    unroll: int = 1
    blocking: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "loop_order", LoopOrder.parse(self.loop_order))
        object.__setattr__(self, "indexing", Indexing(self.indexing))
        if self.unroll not in GEMM_UNROLLS:
            raise ConfigurationError(f"unroll must be one of {GEMM_UNROLLS}, got {self.unroll}")
        if self.blocking is not None:
            outer, inner = self.blocking
            check_block_sizes(outer, inner)
            object.__setattr__(self, "blocking", (int(outer), int(inner)))

    @property
    def label(self) -> str:
        """Variant label as used in benchmark tables, e.g. ``(i,k,j)+1d+unroll4``."""
        if self.blocking is not None:
            return f"blocked-{self.blocking[0]}x{self.blocking[1]}"
        parts = [self.loop_order.value]
        if self.indexing is Indexing.ONE_DIM:
            parts.append("1d")
        if self.unroll != 1:
            parts.append(f"unroll{self.unroll}")
        return "+".join(parts)


def check_block_sizes(outer, inner):
    if outer <= 0 or inner <= 0:
        raise ConfigurationError(f"block sizes must be positive, got ({outer}, {inner})")
    if outer % inner:
        raise ConfigurationError(f"inner block {inner} does not divide outer block {outer}")
