import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from jnt.errors import BracketError, DomainError
from jnt.special import (
    BesselFunction,
    BesselKind,
    bessel,
    find_root,
    i0,
    i1,
    j0,
    j1,
    k0,
    k1,
    rng_fill_uniform,
    rng_next_gaussian,
    rng_next_uniform,
    rng_seed,
    sign,
    y0,
    y1,
)

mpmath.mp.dps = 40

REFERENCE = {
    "J0": lambda x: mpmath.besselj(0, x),
    "J1": lambda x: mpmath.besselj(1, x),
    "Y0": lambda x: mpmath.bessely(0, x),
    "Y1": lambda x: mpmath.bessely(1, x),
    "I0": lambda x: mpmath.besseli(0, x),
    "I1": lambda x: mpmath.besseli(1, x),
    "K0": lambda x: mpmath.besselk(0, x),
    "K1": lambda x: mpmath.besselk(1, x),
}
LOG_GRID = np.geomspace(1e-3, 50.0, 400)


def test_sign():
    assert sign(-3.5) == -1.0 and sign(2.5) == 1.0
    assert sign(3.5) == 1.0 and sign(-0.1) == -1.0 and sign(0.0) == 0.0 and sign(-0.0) == 0.0
    assert math.isnan(sign(math.nan))


# ---- Bessel ------------------------------------------------------------------

def test_j0_at_one():
    assert abs(j0(1.0) - 0.7651976865579666) <= 1e-10


def test_values_at_zero():
    assert j0(0.0) == 1.0 and j1(0.0) == 0.0 and i1(0.0) == 0.0
    # x = 0 is an endpoint of the fitted range, so I0 there is good to a few ulps
    assert i0(0.0) == pytest.approx(1.0, rel=1e-15)


def test_first_zero_of_j0():
    r = find_root(j0, 2.0, 3.0)
    assert r.root == pytest.approx(2.404825557695773, abs=1e-12)


@pytest.mark.parametrize("kind", list(REFERENCE))
def test_against_mpmath(kind):
    f = BesselFunction(kind)
    xs = np.concatenate([np.geomspace(1e-6, 700, 300), [7.999999, 8.0, 8.000001, 2.0, 1.999999]])
    if kind in ("I0", "I1"):
        xs = xs[xs < 700]
    for x in xs:
        ref = REFERENCE[kind](mpmath.mpf(float(x)))
        # oscillatory kinds: absolute error against the envelope, others relative
        if kind[0] in "JY":
            scale = max(1.0, abs(float(ref))) if x < 8 else math.sqrt(2 / (math.pi * x))
        else:
            scale = abs(float(ref))
        assert abs(f.eval(x) - float(ref)) <= 2e-14 * scale, (kind, x)


def test_odd_and_even_symmetry():
    for x in (0.3, 5.0, 12.0):
        assert j0(-x) == j0(x) and i0(-x) == i0(x)
        assert j1(-x) == -j1(x) and i1(-x) == -i1(x)


@pytest.mark.parametrize("f", [y0, y1, k0, k1])
@pytest.mark.parametrize("x", [0.0, -1.0])
def test_domain_errors(f, x):
    with pytest.raises(DomainError):
        f(x)


def test_wronskian_j_y():
    for x in LOG_GRID:
        w = j1(x) * y0(x) - j0(x) * y1(x)
        assert w == pytest.approx(2.0 / (math.pi * x), rel=1e-9)


def test_wronskian_i_k():
    for x in LOG_GRID:
        w = i0(x) * k1(x) + i1(x) * k0(x)
        assert w == pytest.approx(1.0 / x, rel=1e-9)


def test_wronskians_at_two_and_a_half():
    x = 2.5
    assert abs(j1(x) * y0(x) - j0(x) * y1(x) - 2.0 / (math.pi * x)) <= 1e-10
    assert abs(i0(x) * k1(x) + i1(x) * k0(x) - 1.0 / x) <= 1e-10


def test_j1_from_j0_by_finite_differences():
    # J0' = -J1 on the well-conditioned range
    for x in np.linspace(0.5, 10.0, 40):
        h = 1e-5
        assert -(j0(x + h) - j0(x - h)) / (2 * h) == pytest.approx(j1(x), abs=1e-6)


@pytest.mark.parametrize("f,df", [(j0, lambda x: -j1(x)), (i0, i1), (y0, lambda x: -y1(x)), (k0, lambda x: -k1(x))])
def test_derivative_identities_by_finite_differences(f, df):
    for x in (0.5, 3.0, 7.5, 9.0, 20.0):
        h = 1e-5 * x
        fd = (f(x + h) - f(x - h)) / (2 * h)
        assert fd == pytest.approx(df(x), rel=1e-7, abs=1e-9)


def test_dispatch_by_name_and_enum():
    assert bessel("K1", 2.0) == k1(2.0)
    assert bessel(BesselKind.Y0, 3.0) == y0(3.0)
    assert BesselFunction("J1")(2.0) == j1(2.0)


def test_special_values():
    assert math.isnan(j0(math.nan)) and j0(math.inf) == 0.0
    assert i0(800.0) == math.inf
    assert k0(800.0) == 0.0


# ---- roots -------------------------------------------------------------------

def test_root_sqrt2():
    r = find_root(lambda x: x * x - 2.0, 0.0, 2.0, tol=1e-12)
    assert abs(r.root - math.sqrt(2.0)) <= 1e-12
    assert r.iterations <= 100 and r.converged


def test_root_sqrt2_on_unit_bracket():
    r = find_root(lambda x: x * x - 2.0, 1.0, 2.0, tol=1e-12)
    assert abs(r.root - 1.4142135623730951) <= 1e-12
    assert r.bracket_width <= 1e-12


def test_root_maxiter_flags_non_convergence():
    r = find_root(lambda x: x ** 3 - 2.0, 0.0, 2.0, tol=1e-15, maxiter=2)
    assert not r.converged and r.iterations == 2


def test_root_linear_and_cos():
    assert find_root(lambda x: x - 1.0, 0.0, 2.0).root == 1.0
    assert abs(find_root(math.cos, 1.0, 2.0).root - math.pi / 2) <= 1e-12


def test_root_exact_endpoint():
    r = find_root(lambda x: x, 0.0, 1.0)
    assert r.root == 0.0 and r.iterations == 0 and r.bracket_width == 0.0


def test_root_bracket_error():
    with pytest.raises(BracketError):
        find_root(lambda x: x * x + 1.0, -1.0, 1.0)


def test_root_function_object():
    class Shifted:
        def eval(self, x):
            return math.exp(x) - 3.0

    assert find_root(Shifted(), 0.0, 2.0).root == pytest.approx(math.log(3.0), abs=1e-12)


@given(st.floats(-50, 50), st.floats(0.01, 10), st.floats(0.01, 10))
def test_root_of_cubic_stays_in_bracket(r0, left, right):
    seen = []

    def f(x):
        seen.append(x)
        return (x - r0) ** 3 + (x - r0)

    a, b = r0 - left, r0 + right
    res = find_root(f, a, b, tol=1e-12)
    assert all(a <= x <= b for x in seen)
    t = max(1e-12, 4 * np.finfo(float).eps * abs(res.root))
    assert f(res.root - t) * f(res.root + t) <= 0.0
    assert abs(res.root - r0) <= max(1e-12, 4 * np.finfo(float).eps * abs(r0)) * 2
    assert res.iterations <= 100


# ---- RNG ---------------------------------------------------------------------

def test_rng_frozen_stream():
    st = rng_seed(1)
    assert [rng_next_uniform(st) for _ in range(3)] == [0.7308782011132529, 0.10047321594995395, 0.4100808165854666]
    assert st.state == 115427488297881
    st = rng_seed(12345)
    assert [rng_next_uniform(st) for _ in range(3)] == [0.36180310480432, 0.5132095332002606, 0.9329934795847556]


def test_rng_determinism_and_bulk_agreement():
    a, b = rng_seed(7), rng_seed(7)
    scalar = [rng_next_uniform(a) for _ in range(10_000)]
    bulk = rng_fill_uniform(b, 10_000)
    assert scalar == list(bulk)
    assert a.state == b.state


def test_rng_mean():
    draws = rng_fill_uniform(rng_seed(42), 1_000_000)
    assert 0.497 <= draws.mean() <= 0.503
    assert draws.min() >= 0.0 and draws.max() < 1.0


def test_rng_state_does_not_repeat():
    # each uniform is state / 2**48 exactly, so distinct uniforms mean distinct states
    draws = rng_fill_uniform(rng_seed(1), 1_000_000)
    assert len(np.unique(draws)) == len(draws)


def test_rng_range_scaling():
    draws = rng_fill_uniform(rng_seed(3), 1000, -2.0, 5.0)
    assert draws.min() >= -2.0 and draws.max() < 5.0


def test_gaussian_pairs_and_moments():
    st = rng_seed(11)
    z = np.array([rng_next_gaussian(st) for _ in range(40_000)])
    assert abs(z.mean()) < 0.02 and abs(z.std() - 1.0) < 0.02
    a, b = rng_seed(11), rng_seed(11)
    rng_next_gaussian(a)
    copy = a.copy()
    assert rng_next_gaussian(a) == rng_next_gaussian(copy)
    assert [rng_next_gaussian(b) for _ in range(2)][0] == z[0]


@given(st.integers(0, 2**63 - 1))
def test_uniform_in_unit_interval(seed):
    st = rng_seed(seed)
    for _ in range(20):
        u = rng_next_uniform(st)
        assert 0.0 <= u < 1.0
