"""Matrix Market exchange format: coordinate and array, real, general or symmetric."""
from __future__ import annotations

import gzip
import io
import math
import os
from dataclasses import dataclass
from typing import Iterator, Tuple, Union

import numpy as np

from jnt.errors import MatrixMarketError, ParseError
from jnt.kernels.storage import DenseMatrix
from jnt.matio.floats import parse_float
from jnt.sparse import CooMatrix

BANNER = "%%MatrixMarket"
FORMATS = ("coordinate", "array")
FIELDS = ("real",)
SYMMETRIES = ("general", "symmetric")


@dataclass(frozen=True)
class MatrixMarketHeader:
    format: str
    field: str = "real"
    symmetry: str = "general"
    object: str = "matrix"

    def __post_init__(self):
        if self.object != "matrix":
            raise MatrixMarketError(f"unsupported object {self.object!r}")
        if self.format not in FORMATS:
            raise MatrixMarketError(f"unsupported format {self.format!r}")
        if self.field not in FIELDS:
            raise MatrixMarketError(f"unsupported field {self.field!r}; only real matrices are read")
        if self.symmetry not in SYMMETRIES:
            raise MatrixMarketError(f"unsupported symmetry {self.symmetry!r}")

    @classmethod
    def parse(cls, line: str) -> "MatrixMarketHeader":
        words = line.split()
        if not words or words[0] != BANNER:
            raise MatrixMarketError(f"missing {BANNER} banner")
        if len(words) != 5:
            raise MatrixMarketError(f"banner needs 4 qualifiers, got {line.strip()!r}")
        obj, fmt, fld, sym = (w.lower() for w in words[1:])
        return cls(fmt, fld, sym, obj)

    def banner(self) -> str:
        return f"{BANNER} {self.object} {self.format} {self.field} {self.symmetry}"


def _open_text(source, mode):
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        if path.endswith(".gz"):
            return gzip.open(path, mode + "t", encoding="ascii", newline=""), True
        return open(path, mode, encoding="ascii", newline=""), True
    return source, False


def _data_lines(stream) -> Iterator[Tuple[int, list]]:
    for lineno, line in enumerate(stream, start=2):
        if line.startswith("%"):
            continue
        words = line.split()
        if words:
            yield lineno, words


def _int(word, lineno):
    try:
        return int(word)
    except ValueError:
        raise MatrixMarketError(f"line {lineno}: expected an integer, got {word!r}") from None


def _real(word, lineno):
    try:
        return parse_float(word)
    except ParseError as exc:
        raise MatrixMarketError(f"line {lineno}: {exc}") from None


def read_matrix_market(source) -> Union[CooMatrix, DenseMatrix]:
    """Read a Matrix Market file (path, ``.gz`` path or text stream).

    Coordinate files give a :class:`CooMatrix` with 0-based indices, in file
    order; for symmetric files each off-diagonal entry is followed by its
    mirror.  Array files give a :class:`DenseMatrix`.
    """
    stream, owned = _open_text(source, "r")
    try:
        header = MatrixMarketHeader.parse(stream.readline())
        lines = _data_lines(stream)
        try:
            lineno, size = next(lines)
        except StopIteration:
            raise MatrixMarketError("missing size line") from None
        if header.format == "coordinate":
            return _read_coordinate(header, lineno, size, lines)
        return _read_array(header, lineno, size, lines)
    finally:
        if owned:
            stream.close()


def _read_coordinate(header, lineno, size, lines):
    if len(size) != 3:
        raise MatrixMarketError(f"line {lineno}: coordinate size line needs 'rows cols entries'")
    rows, cols, declared = (_int(w, lineno) for w in size)
    if min(rows, cols, declared) < 0:
        raise MatrixMarketError(f"line {lineno}: negative size")
    symmetric = header.symmetry == "symmetric"
    if symmetric and rows != cols:
        raise MatrixMarketError("symmetric matrix must be square")
    cap = 2 * declared if symmetric else declared
    ri = np.empty(cap, dtype=np.int64)
    ci = np.empty(cap, dtype=np.int64)
    vals = np.empty(cap)
    k = 0
    count = 0
    for lineno, words in lines:
        if count == declared:
            raise MatrixMarketError(f"line {lineno}: more entries than the {declared} declared")
        if len(words) != 3:
            raise MatrixMarketError(f"line {lineno}: expected 'row col value'")
        i, j = _int(words[0], lineno), _int(words[1], lineno)
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise MatrixMarketError(f"line {lineno}: index ({i}, {j}) outside {rows}x{cols}")
        v = _real(words[2], lineno)
        ri[k], ci[k], vals[k] = i - 1, j - 1, v
        k += 1
        if symmetric and i != j:
            ri[k], ci[k], vals[k] = j - 1, i - 1, v
            k += 1
        count += 1
    if count != declared:
        raise MatrixMarketError(f"file declares {declared} entries but holds {count}")
    return CooMatrix(rows, cols, ri[:k], ci[:k], vals[:k])


def _read_array(header, lineno, size, lines):
    if len(size) != 2:
        raise MatrixMarketError(f"line {lineno}: array size line needs 'rows cols'")
    rows, cols = (_int(w, lineno) for w in size)
    if min(rows, cols) < 0:
        raise MatrixMarketError(f"line {lineno}: negative size")
    symmetric = header.symmetry == "symmetric"
    if symmetric and rows != cols:
        raise MatrixMarketError("symmetric matrix must be square")
    # file order is column-major; symmetric files hold the lower triangle only
    if symmetric:
        positions = [(i, j) for j in range(cols) for i in range(j, rows)]
    else:
        positions = [(i, j) for j in range(cols) for i in range(rows)]
    out = np.zeros((rows, cols))
    count = 0
    for lineno, words in lines:
        for w in words:
            if count == len(positions):
                raise MatrixMarketError(f"line {lineno}: more values than a {rows}x{cols} array holds")
            i, j = positions[count]
            out[i, j] = _real(w, lineno)
            if symmetric:
                out[j, i] = out[i, j]
            count += 1
    if count != len(positions):
        raise MatrixMarketError(f"array holds {count} values, expected {len(positions)}")
    return DenseMatrix.from_array(out)


def _fmt(v: float) -> str:
    if not math.isfinite(v):
        raise MatrixMarketError(f"cannot write non-finite value {v!r}")
    return "%.17g" % v


def write_matrix_market(A: Union[CooMatrix, DenseMatrix], target, comment: str = None):
    """Write ``A`` with 1-based indices and 17 significant digits.

    Sparse matrices are written as coordinate/general with entries in stored
    order (duplicates kept); dense matrices as array/general.
    """
    stream, owned = _open_text(target, "w")
    try:
        fmt = "coordinate" if isinstance(A, CooMatrix) else "array"
        stream.write(MatrixMarketHeader(fmt).banner() + "\n")
        if comment:
            for line in comment.splitlines():
                stream.write(f"% {line}\n")
        if isinstance(A, CooMatrix):
            stream.write(f"{A.rows} {A.cols} {A.nnz}\n")
            for i, j, v in zip(A.row_index.tolist(), A.col_index.tolist(), A.values.tolist()):
                stream.write(f"{i + 1} {j + 1} {_fmt(v)}\n")
        else:
            stream.write(f"{A.rows} {A.cols}\n")
            for v in A.to_array().T.reshape(-1).tolist():
                stream.write(_fmt(v) + "\n")
    finally:
        if owned:
            stream.close()


def dumps(A) -> str:
    buf = io.StringIO()
    write_matrix_market(A, buf)
    return buf.getvalue()


def loads(text: str):
    return read_matrix_market(io.StringIO(text))
