import gzip
import math
import os
import struct

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jnt.bench.fixtures import COLLECTION_SHAPES, load_bundled, synthesize
from jnt.errors import DimensionError, MatrixMarketError, ParseError
from jnt.kernels import DenseMatrix
from jnt.matio import (
    ColumnSpec,
    MatrixMarketHeader,
    TableSpec,
    dumps,
    format_table,
    loads,
    parse_float,
    read_matrix_market,
    to_csv,
    write_matrix_market,
)
from jnt.sparse import CooMatrix

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def same_coo(A, B):
    return (
        A.shape == B.shape
        and np.array_equal(A.row_index, B.row_index)
        and np.array_equal(A.col_index, B.col_index)
        and A.values.tobytes() == B.values.tobytes()
    )


# ---- parse_float -------------------------------------------------------------

@pytest.mark.parametrize("token,value", [
    ("2.13e+6", 2130000.0),
    ("1", 1.0),
    ("-4.5E-3", -0.0045),
    ("+.5", 0.5),
    ("7.", 7.0),
    ("1e400", math.inf),
    ("-0", -0.0),
])
def test_parse_float_accepts(token, value):
    assert parse_float(token) == value


@pytest.mark.parametrize("token,position", [
    ("", 0), ("e5", 0), (".", 1), ("1e", 2), ("1e+", 3), ("1.2.3", 3), (" 1", 0), ("1,5", 1),
    ("nan", 0), ("inf", 0), ("12x", 2), ("0x10", 1),
])
def test_parse_float_rejects_with_position(token, position):
    with pytest.raises(ParseError) as info:
        parse_float(token)
    assert info.value.position == position


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_parse_float_round_trips_17_digits(x):
    assert struct.pack("<d", parse_float("%.17g" % x)) == struct.pack("<d", x)


def test_parse_float_round_trips_random_bit_patterns():
    g = np.random.default_rng(5)
    bits = g.integers(0, 2**63, 100_000, dtype=np.uint64) | (g.integers(0, 2, 100_000, dtype=np.uint64) << np.uint64(63))
    xs = bits.view(np.float64)
    xs = xs[np.isfinite(xs)]
    for x in xs.tolist():
        assert struct.pack("<d", parse_float("%.17g" % x)) == struct.pack("<d", x)


# ---- Matrix Market -----------------------------------------------------------

def test_header_parsing():
    h = MatrixMarketHeader.parse("%%MatrixMarket matrix coordinate real symmetric")
    assert (h.format, h.symmetry) == ("coordinate", "symmetric")
    assert h.banner() == "%%MatrixMarket matrix coordinate real symmetric"
    for bad in ("%%MatrixMarket matrix coordinate integer general",
                "%%MatrixMarket matrix coordinate pattern general",
                "%%MatrixMarket matrix coordinate complex general",
                "%%MatrixMarket vector coordinate real general",
                "%%MatrixMarket matrix coordinate real hermitian",
                "%MatrixMarket matrix coordinate real general"):
        with pytest.raises(MatrixMarketError):
            MatrixMarketHeader.parse(bad)


def test_read_identity():
    A = loads("%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 1 1.0\n2 2 1.0\n")
    assert isinstance(A, CooMatrix)
    assert A.shape == (2, 2)
    assert list(A.row_index) == [0, 1] and list(A.values) == [1.0, 1.0]


def test_read_symmetric_mirrors():
    A = loads("%%MatrixMarket matrix coordinate real symmetric\n3 3 2\n1 1 4\n3 1 2.5\n")
    assert A.nnz == 3
    assert np.array_equal(
        [tuple(t) for t in zip(A.row_index, A.col_index, A.values)],
        [(0, 0, 4.0), (2, 0, 2.5), (0, 2, 2.5)],
    )


def test_read_array_is_column_major():
    A = loads("%%MatrixMarket matrix array real general\n2 3\n1\n2\n3\n4\n5\n6\n")
    assert isinstance(A, DenseMatrix)
    assert np.array_equal(A.to_array(), [[1, 3, 5], [2, 4, 6]])


def test_read_symmetric_array():
    A = loads("%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n")
    assert np.array_equal(A.to_array(), [[1, 2], [2, 3]])


@pytest.mark.parametrize("text", [
    "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n",
    "%%MatrixMarket matrix coordinate real general\n2 2 1\n0 1 1.0\n",
    "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n",
    "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 1.0\n2 2 1.0\n",
    "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 2.13 e+6\n",
    "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 abc\n",
    "%%MatrixMarket matrix coordinate real general\n",
    "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n",
    "%%MatrixMarket matrix coordinate real symmetric\n2 3 0\n",
])
def test_read_rejects_malformed(text):
    with pytest.raises(MatrixMarketError):
        loads(text)


def test_write_empty():
    text = dumps(CooMatrix(3, 4, [], [], []))
    assert text.splitlines()[-1] == "3 4 0"
    assert loads(text).shape == (3, 4)


def test_duplicates_preserved():
    A = CooMatrix.from_triplets(2, 2, [(0, 0, 1.0), (0, 0, 2.0), (1, 0, -3.0)])
    assert same_coo(loads(dumps(A)), A)


@given(st.integers(0, 2**32 - 1), st.integers(1, 30), st.integers(1, 30), st.integers(0, 60))
def test_round_trip_random_coo(seed, r, c, nnz):
    g = np.random.default_rng(seed)
    vals = g.standard_normal(nnz) * 10.0 ** g.integers(-300, 300, nnz)
    A = CooMatrix(r, c, g.integers(0, r, nnz), g.integers(0, c, nnz), vals)
    assert same_coo(loads(dumps(A)), A)


def test_round_trip_dense(rng):
    A = DenseMatrix.from_array(rng.standard_normal((4, 3)))
    B = loads(dumps(A))
    assert B.to_array().tobytes() == A.to_array().tobytes()


def test_write_rejects_non_finite():
    with pytest.raises(MatrixMarketError):
        dumps(CooMatrix(1, 1, [0], [0], [math.nan]))


def test_gzip_and_path_io(tmp_path):
    A = synthesize(30, 50, seed=3)
    for name in ("a.mtx", "a.mtx.gz"):
        path = tmp_path / name
        write_matrix_market(A, str(path))
        assert same_coo(read_matrix_market(str(path)), A)
    with gzip.open(tmp_path / "a.mtx.gz", "rt") as fh:
        assert fh.readline().startswith("%%MatrixMarket")


def test_bundled_west0156():
    A = load_bundled("west0156")
    assert A.shape == (156, 156) and A.nnz == 371


@pytest.mark.parametrize("name", sorted(COLLECTION_SHAPES))
def test_standins_have_collection_shapes(name):
    order, entries = COLLECTION_SHAPES[name]
    A = loads(dumps(synthesize(order, entries)))
    assert A.shape == (order, order) and A.nnz == entries
    assert len(set(zip(A.row_index.tolist(), A.col_index.tolist()))) == entries


# ---- tables ------------------------------------------------------------------

def test_single_cell_padding():
    text = format_table(TableSpec([ColumnSpec("x", width=8, precision=1)], rule=False), [[96.0]])
    assert text.splitlines()[1] == "    96.0"


def test_negative_widens_column():
    lines = format_table(TableSpec([ColumnSpec("v", width=4, precision=2)], rule=False), [[-123.456]]).splitlines()
    assert lines == ["      v", "-123.46"]


def test_arity_mismatch():
    with pytest.raises(DimensionError):
        format_table(TableSpec([ColumnSpec("a"), ColumnSpec("b")]), [[1.0]])


def _level1_shaped():
    names = ["daxpy:1", "daxpy:4", "daxpy:4-inc", "daxpy:8", "ddot:1", "ddot:4", "ddot:8"]
    spec = TableSpec.numeric(names, width=8, precision=1, label="Environment", label_width=40)
    rows = [
        ["Pentium II, 266 MHz, gcc 2.7.1 -O3, Linux", 88.1, 134.2, 120.0, 132.5, 147.1, 147.1, 148.1],
        ["Pentium Pro, 200 MHz, Sun JDK 1.1.3", 10.4, 14.6, 15.7, 14.7, 13.5, 21.6, 22.0],
        ["Intel BLAS", 96.0, None, None, None, 193.0, None, None],
    ]
    return format_table(spec, rows)


def test_level1_shaped_table_matches_golden():
    with open(os.path.join(GOLDEN, "level1_shape.txt"), encoding="utf-8") as fh:
        assert _level1_shaped() == fh.read()


def test_table_is_reproducible():
    assert _level1_shaped() == _level1_shaped()


def test_csv_quoting_and_floats():
    text = to_csv(["name", "value"], [["a,b", 0.1], ['say "hi"', 2]])
    assert text == 'name,value\r\n"a,b",0.1\r\n"say ""hi""",2\r\n'
