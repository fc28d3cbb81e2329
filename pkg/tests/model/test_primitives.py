"""Test primitive model functions."""

import pytest

import numpy as np
import numpy.testing as npt

from recyclopt.model import (
    ModelParams,
    constant_c,
    demand,
    drift_R,
    F,
    F_prime,
    G,
    G_prime,
    profit,
)

# unit market potential
PARAMS = ModelParams(a0=1.0)
CAPPED = ModelParams(a0=1.0, a1=0.3, p0=1.0, c_v=0.2)


# drift
@pytest.mark.parametrize(
    "u, r, expected", [(0.0, 0.0, 0.0), (1.0, 0.0, 5.0), (1.0, 0.5, 2.25)]
)
def test_drift(u, r, expected):
    assert drift_R(u, r, PARAMS) == pytest.approx(expected)


@pytest.mark.parametrize("u, r", [(-1.0, 0.5), (1.0, -0.1), (1.0, 1.1)])
def test_drift_domain(u, r):
    with pytest.raises(ValueError):
        drift_R(u, r, PARAMS)


# demand
def test_demand_values():
    assert demand(1.0, 1.0, PARAMS) == pytest.approx(1.0)
    assert demand(1.0, 0.0, PARAMS) == 0.0
    assert demand(2.0, 0.5, PARAMS) == pytest.approx(2.0**-1.1 * 0.5**5, rel=1e-12)
    assert demand(2.0, 0.5, PARAMS) == pytest.approx(0.01457, abs=2e-5)


@pytest.mark.parametrize("p", [0.0, -1.0])
def test_demand_domain(p):
    with pytest.raises(ValueError, match="price p must be positive"):
        demand(p, 0.5, PARAMS)


def test_demand_monotonicity():
    ps = np.linspace(0.1, 5.0, 50)
    rs = np.linspace(0.0, 1.0, 50)
    for r in rs[1:]:
        assert np.all(np.diff(demand(ps, r, PARAMS)) < 0)
    for p in ps:
        assert np.all(np.diff(demand(p, rs, PARAMS)) >= 0)


# profit
def test_profit_values():
    assert profit(3.0, 0.0, 0.0, PARAMS) == 0.0
    assert profit(1.0, 0.0, 1.0, PARAMS) == pytest.approx(1.0)
    expected = (1.1 - 0.1) * 1.1**-1.1 * 0.5**5 - 0.2
    assert profit(1.1, 0.2, 0.5, PARAMS) == pytest.approx(expected, rel=1e-12)
    assert profit(1.1, 0.2, 0.5, PARAMS) == pytest.approx(-0.1719, abs=1e-3)


def test_profit_domain():
    with pytest.raises(ValueError):
        profit(1.0, -0.1, 0.5, PARAMS)
    with pytest.raises(ValueError):
        profit(0.0, 0.1, 0.5, PARAMS)


# F, F'
def test_F_values():
    assert F(0.0, PARAMS) == 0.0
    assert F_prime(0.0, PARAMS) == 0.0
    assert F(-3.0, PARAMS) == 0.0
    assert F_prime(-3.0, PARAMS) == 0.0
    assert F(1.0, PARAMS) == 1.0
    assert F_prime(1.0, PARAMS) == pytest.approx(1.25)


def test_F_is_nonnegative_and_nondecreasing():
    xs = np.linspace(-5.0, 5.0, 1001)
    values = F(xs, PARAMS)
    assert np.all(values >= 0)
    assert np.all(np.diff(values) >= 0)
    assert np.all(F_prime(xs, PARAMS) >= 0)


def test_F_prime_matches_finite_difference():
    xs = np.linspace(0.01, 10.0, 200)
    h = 1e-6 * xs
    fd = (F(xs + h, PARAMS) - F(xs - h, PARAMS)) / (2 * h)
    npt.assert_allclose(F_prime(xs, PARAMS), fd, rtol=1e-6)


# c
def test_constant_c():
    ratio = 11.0
    expected = 0.2**-0.1 * (ratio**-0.1 - ratio**-1.1)
    assert constant_c(PARAMS) == pytest.approx(expected, rel=1e-12)
    assert constant_c(PARAMS) == pytest.approx(0.8401, abs=1e-3)


def test_constant_c_undefined_for_low_a1():
    with pytest.raises(ValueError, match="a1 > 1"):
        constant_c(ModelParams(a1=1.0))


def test_constant_c_linear_in_a0():
    assert constant_c(PARAMS.replace(a0=2.0)) == pytest.approx(2 * constant_c(PARAMS))


@pytest.mark.parametrize("a1", [1.05, 1.5, 2.0, 4.0])
def test_constant_c_positive(a1):
    assert constant_c(PARAMS.replace(a1=a1)) > 0


# G, G'
def test_G_values():
    assert G(0.0, PARAMS) == 0.0
    assert G(0.0, CAPPED) == 0.0
    assert G(1.0, CAPPED) == pytest.approx(1.0)
    expected = constant_c(PARAMS) * 0.5**-0.1 * 0.5**5
    assert G(0.5, PARAMS) == pytest.approx(expected, rel=1e-12)
    assert G(0.5, PARAMS) / constant_c(PARAMS) == pytest.approx(0.5**4.9, rel=1e-12)


def test_G_singular_endpoint():
    with pytest.raises(ValueError, match="singular"):
        G(1.0, PARAMS)
    with pytest.raises(ValueError, match="singular"):
        G_prime(1.0, PARAMS)


@pytest.mark.parametrize("params", [PARAMS, CAPPED], ids=["a1=1.1", "a1=0.3"])
def test_G_nonnegative_and_increasing(params):
    rs = np.linspace(0.0, 1.0 - 1e-6, 1000)
    assert np.all(G(rs, params) >= 0)
    rs = np.linspace(1e-6, 1.0 - 1e-6, 1000)
    assert np.all(G_prime(rs, params) >= 0)


@pytest.mark.parametrize("params", [PARAMS, CAPPED], ids=["a1=1.1", "a1=0.3"])
def test_G_prime_matches_finite_difference(params):
    rs = np.linspace(0.05, 0.95, 100)
    h = 1e-6
    fd = (G(rs + h, params) - G(rs - h, params)) / (2 * h)
    npt.assert_allclose(G_prime(rs, params), fd, rtol=1e-5)
