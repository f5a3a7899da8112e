import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra import numpy as hnp

from jnt.errors import BoundsError, ConfigurationError, DimensionError
from jnt.kernels import (
    ALL_GEMM_CONFIGS,
    DAXPY_VARIANTS,
    DDOT_VARIANTS,
    TABLE_GEMM_CONFIGS,
    DenseMatrix,
    GemmConfig,
    Indexing,
    LoopOrder,
    VectorView,
    daxpy,
    daxpy_col,
    dcopy,
    ddot,
    dgemv,
    dnrm2,
    dscal,
    gemm,
    gemm_blocked,
    gemm_sub,
    idamax,
    optimal_block_size,
)

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)
vectors = st.integers(0, 70).flatmap(
    lambda n: st.tuples(
        hnp.arrays(np.float64, n, elements=finite),
        hnp.arrays(np.float64, n, elements=finite),
    )
)


def product(A, B, config=GemmConfig()):
    C = DenseMatrix.zeros(A.rows, B.cols)
    gemm(A, B, C, config)
    return C.to_array()


# ---- storage -----------------------------------------------------------------

def test_vector_view_bounds():
    data = np.arange(10.0)
    v = VectorView(data, 3, 4)
    assert list(v.values()) == [3.0, 4.0, 5.0, 6.0]
    with pytest.raises(BoundsError):
        VectorView(data, 8, 4)
    with pytest.raises(BoundsError):
        VectorView(data, -1)


def test_dense_matrix_is_row_major():
    A = DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert A.shape == (2, 3)
    assert list(A.data) == [1, 2, 3, 4, 5, 6]
    assert A[1, 0] == 4.0
    A[0, 2] = 9.0
    assert A.to_array()[0, 2] == 9.0
    with pytest.raises(BoundsError):
        A[2, 0]
    assert np.array_equal(A.transpose().to_array(), A.to_array().T)


def test_gemm_config_labels():
    assert GemmConfig().label == "(i,j,k)"
    assert GemmConfig(LoopOrder.IKJ, Indexing.ONE_DIM, 4).label == "(i,k,j)+1d+unroll4"
    assert GemmConfig(blocking=(40, 8)).label == "blocked-40x8"
    assert len(ALL_GEMM_CONFIGS) == 18
    assert len(TABLE_GEMM_CONFIGS) == 9
    with pytest.raises(ConfigurationError):
        GemmConfig(unroll=3)


# ---- level 1 -----------------------------------------------------------------

def test_daxpy_small_example():
    y = np.array([1.0, 1.0, 1.0])
    daxpy(3, 2.0, np.array([1.0, 2.0, 3.0]), y)
    assert list(y) == [3.0, 5.0, 7.0]


def test_daxpy_zero_length_and_zero_alpha_leave_y():
    y = np.array([1.0, 2.0])
    daxpy(0, 5.0, np.array([7.0, 7.0]), y)
    daxpy(2, 0.0, np.array([np.inf, 1.0]), y)
    assert list(y) == [1.0, 2.0]


def test_daxpy_offset_view_example():
    y = np.array([10.0, 10.0])
    daxpy(2, 1.0, VectorView(np.array([9.0, 1.0, 2.0]), 1), y)
    assert list(y) == [11.0, 12.0]


@given(pair=vectors, a=st.floats(-4, 4), b=st.floats(-4, 4))
def test_daxpy_linearity_within_one_ulp(pair, a, b):
    x, y = pair
    twice, once = y.copy(), y.copy()
    daxpy(len(x), a, x, twice)
    daxpy(len(x), b, x, twice)
    daxpy(len(x), a + b, x, once)
    # two roundings against one: compare on the scale of the operands
    scale = np.abs(y) + (abs(a) + abs(b)) * np.abs(x)
    assert np.all(np.abs(twice - once) <= 4 * np.spacing(scale))


@given(
    data=hnp.arrays(np.float64, st.integers(1, 40), elements=finite),
    cut=st.data(),
)
def test_views_equal_fresh_copies(data, cut):
    off = cut.draw(st.integers(0, len(data) - 1))
    n = cut.draw(st.integers(0, len(data) - off))
    view = VectorView(data, off, n)
    fresh = data[off:off + n].copy()
    assert ddot(n, view, view) == ddot(n, fresh, fresh)
    assert dnrm2(n, view) == dnrm2(n, fresh)
    if n:
        assert idamax(n, view) == idamax(n, fresh)


def test_ddot_example():
    assert ddot(2, np.array([3.0, 4.0]), np.array([3.0, 4.0])) == 25.0
    assert ddot(2, np.array([1.0, 0.0]), np.array([0.0, 1.0])) == 0.0
    assert ddot(3, np.array([1.0, 2.0, 3.0]), np.array([4.0, 5.0, 6.0])) == 32.0
    assert ddot(0, np.array([]), np.array([])) == 0.0


def test_offsets_address_the_right_elements():
    x = VectorView(np.arange(10.0), 5, 3)
    y = VectorView(np.zeros(8), 2, 3)
    daxpy(3, 1.0, x, y)
    assert list(y.data) == [0, 0, 5, 6, 7, 0, 0, 0]
    assert ddot(3, x, VectorView(np.ones(4), 1)) == 18.0
    with pytest.raises(BoundsError):
        daxpy(4, 1.0, x, y)


@pytest.mark.parametrize("variant", DAXPY_VARIANTS)
@given(pair=vectors, alpha=finite)
def test_daxpy_variants_bit_identical(variant, pair, alpha):
    x, y = pair
    ref, out = y.copy(), y.copy()
    daxpy(len(x), alpha, x, ref, "1")
    daxpy(len(x), alpha, x, out, variant)
    assert np.array_equal(ref, out)
    assert np.array_equal(ref, y + alpha * x)


@pytest.mark.parametrize("variant", DDOT_VARIANTS)
@given(pair=vectors)
def test_ddot_variants_bit_identical(variant, pair):
    x, y = pair
    assert ddot(len(x), x, y, variant) == ddot(len(x), x, y, "1")


def test_unknown_variant_rejected():
    with pytest.raises(ConfigurationError):
        daxpy(1, 1.0, np.ones(1), np.ones(1), "16")


def test_daxpy_col_example():
    A = DenseMatrix.from_rows([[1, 2], [3, 4]])
    B = DenseMatrix.zeros(2, 2)
    daxpy_col(2, 1.0, A, 0, 1, B, 0, 0)
    assert np.array_equal(B.to_array(), [[2, 0], [4, 0]])
    daxpy_col(2, 0.0, A, 0, 0, B, 0, 0)
    daxpy_col(0, 1.0, A, 0, 0, B, 0, 0)
    assert np.array_equal(B.to_array(), [[2, 0], [4, 0]])
    with pytest.raises(BoundsError):
        daxpy_col(3, 1.0, A, 0, 0, B, 0, 0)


def test_daxpy_col_updates_one_column():
    A = DenseMatrix.from_rows([[1, 2], [3, 4], [5, 6]])
    B = DenseMatrix.zeros(3, 2)
    daxpy_col(2, 10.0, A, 1, 0, B, 0, 1)
    assert np.array_equal(B.to_array(), [[0, 30], [0, 50], [0, 0]])


def test_dnrm2_avoids_overflow_and_underflow():
    assert dnrm2(2, np.array([3.0, 4.0])) == 5.0
    assert dnrm2(2, np.array([3e200, 4e200])) == pytest.approx(5e200, rel=1e-15)
    assert dnrm2(2, np.array([3e-200, 4e-200])) == pytest.approx(5e-200, rel=1e-15)
    assert dnrm2(0, np.array([])) == 0.0


def test_idamax_first_maximum():
    assert idamax(4, np.array([1.0, -7.0, 7.0, 2.0])) == 1
    with pytest.raises(DimensionError):
        idamax(0, np.array([]))


def test_dscal_dcopy():
    x = np.array([1.0, 2.0])
    dscal(2, 3.0, x)
    y = np.zeros(2)
    dcopy(2, x, y)
    assert list(y) == [3.0, 6.0]


# ---- level 2 -----------------------------------------------------------------

def test_dgemv_example():
    A = DenseMatrix.from_rows([[1, 2], [3, 4]])
    y = np.array([1.0, 1.0])
    dgemv(2.0, A, np.array([1.0, 1.0]), 3.0, y)
    assert list(y) == [9.0, 17.0]


def test_dgemv_identity_and_noop():
    x = np.array([1.5, -2.0, 3.0])
    y = np.zeros(3)
    dgemv(1.0, DenseMatrix.identity(3), x, 0.0, y)
    assert np.array_equal(y, x)
    dgemv(0.0, DenseMatrix.from_array(np.full((3, 3), np.nan)), x, 1.0, y)
    assert np.array_equal(y, x)


def test_dgemv_beta_zero_ignores_nan_in_y():
    A = DenseMatrix.identity(2)
    y = np.array([np.nan, np.nan])
    dgemv(1.0, A, np.array([1.0, 2.0]), 0.0, y)
    assert list(y) == [1.0, 2.0]


def test_dgemv_dimension_mismatch():
    with pytest.raises(DimensionError):
        dgemv(1.0, DenseMatrix.zeros(2, 3), np.ones(2), 0.0, np.zeros(2))


@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_dgemv_matches_numpy(m, n, seed):
    g = np.random.default_rng(seed)
    A = g.uniform(-1, 1, (m, n))
    x, y = g.uniform(-1, 1, n), g.uniform(-1, 1, m)
    out = y.copy()
    dgemv(0.5, DenseMatrix.from_array(A), x, -2.0, out)
    exact = 0.5 * A @ x - 2.0 * y
    assert np.all(np.abs(out - exact) <= 1e-14 * (np.abs(A) @ np.abs(x) + np.abs(y) + 1))


# ---- level 3 -----------------------------------------------------------------

def test_gemm_2x2_example():
    A = DenseMatrix.from_rows([[1, 2], [3, 4]])
    B = DenseMatrix.from_rows([[5, 6], [7, 8]])
    for config in ALL_GEMM_CONFIGS:
        assert np.array_equal(product(A, B, config), [[19, 22], [43, 50]])


def test_gemm_identity_factor(rng):
    B = DenseMatrix.from_array(rng.uniform(-1, 1, (5, 3)))
    for config in ALL_GEMM_CONFIGS:
        assert np.array_equal(product(DenseMatrix.identity(5), B, config), B.to_array())


def test_blocked_single_block_equals_reference(rng):
    A = DenseMatrix.from_array(rng.uniform(-1, 1, (40, 40)))
    C = DenseMatrix.zeros(40, 40)
    gemm_blocked(A, A, C)
    assert np.array_equal(C.to_array(), product(A, A))


def test_gemm_accumulates_into_c():
    A = DenseMatrix.identity(2)
    C = DenseMatrix.from_rows([[1, 1], [1, 1]])
    gemm(A, A, C)
    assert np.array_equal(C.to_array(), [[2, 1], [1, 2]])


def test_gemm_shape_mismatch():
    with pytest.raises(DimensionError):
        gemm(DenseMatrix.zeros(2, 3), DenseMatrix.zeros(2, 3), DenseMatrix.zeros(2, 3))


@given(st.integers(1, 23), st.integers(1, 23), st.integers(1, 23), st.integers(0, 2**32 - 1))
def test_all_configs_bit_identical(l, m, n, seed):
    g = np.random.default_rng(seed)
    A = DenseMatrix.from_array(g.uniform(-1, 1, (l, n)))
    B = DenseMatrix.from_array(g.uniform(-1, 1, (n, m)))
    ref = product(A, B)
    for config in ALL_GEMM_CONFIGS:
        assert np.array_equal(product(A, B, config), ref), config.label


@pytest.mark.parametrize("blocks", [(40, 8), (64, 8), (8, 8), (6, 3), (4, 2), (2, 1), (10, 5)])
@given(st.integers(1, 90), st.integers(1, 90), st.integers(1, 90), st.integers(0, 2**32 - 1))
def test_blocked_bit_identical(blocks, l, m, n, seed):
    g = np.random.default_rng(seed)
    A = DenseMatrix.from_array(g.uniform(-1, 1, (l, n)))
    B = DenseMatrix.from_array(g.uniform(-1, 1, (n, m)))
    C = DenseMatrix.zeros(l, m)
    gemm_blocked(A, B, C, *blocks)
    assert np.array_equal(C.to_array(), product(A, B))


def test_blocked_matches_numpy_on_ragged_100(rng):
    A = rng.uniform(-1, 1, (100, 100))
    B = rng.uniform(-1, 1, (100, 100))
    C = DenseMatrix.zeros(100, 100)
    gemm_blocked(DenseMatrix.from_array(A), DenseMatrix.from_array(B), C, 40, 8)
    assert np.all(np.abs(C.to_array() - A @ B) <= 1e-13 * 100 * (np.abs(A) @ np.abs(B)))


def test_block_size_validation():
    A = DenseMatrix.identity(3)
    with pytest.raises(ConfigurationError):
        gemm_blocked(A, A, DenseMatrix.zeros(3, 3), 40, 7)
    with pytest.raises(ConfigurationError):
        gemm_blocked(A, A, DenseMatrix.zeros(3, 3), 0, 0)


def test_optimal_block_size_env(monkeypatch):
    assert optimal_block_size() == (40, 8)
    monkeypatch.setenv("JNT_BLOCK", "64,8")
    assert optimal_block_size() == (64, 8)
    monkeypatch.setenv("JNT_BLOCK", "64x8")
    with pytest.raises(ConfigurationError):
        optimal_block_size()
    monkeypatch.setenv("JNT_BLOCK", "30,8")
    with pytest.raises(ConfigurationError):
        optimal_block_size()


def test_gemm_sub_updates_submatrix():
    A = DenseMatrix.from_array(np.arange(16.0).reshape(4, 4))
    C = DenseMatrix.zeros(4, 4)
    # C[1:3, 2:4] -= A[0:2, 1:3] @ A[2:4, 0:2]
    gemm_sub(2, 2, 2, -1.0, A, 0, 1, A, 2, 0, C, 1, 2)
    a = A.to_array()
    expected = np.zeros((4, 4))
    expected[1:3, 2:4] = -(a[0:2, 1:3] @ a[2:4, 0:2])
    assert np.array_equal(C.to_array(), expected)


def test_oracle_agreement_at_order_1000(rng):
    n = 1000
    A = DenseMatrix.from_array(rng.uniform(-1, 1, (n, n)))
    B = DenseMatrix.from_array(rng.uniform(-1, 1, (n, n)))
    ref = product(A, B)
    for blocks in ((40, 8), (64, 8)):
        C = DenseMatrix.zeros(n, n)
        gemm_blocked(A, B, C, *blocks)
        assert np.array_equal(C.to_array(), ref)
    assert np.array_equal(product(A, B, GemmConfig(LoopOrder.IKJ, Indexing.ONE_DIM, 4)), ref)
