"""Test closed-form optimizers against the Hamiltonian."""

import pytest

import numpy as np

from recyclopt.model import ModelParams
from recyclopt.policy import (
    P_MIN,
    argmax_hamiltonian_bruteforce,
    hamiltonian,
    optimal_investment,
    optimal_price,
)

# unit market potential
PARAMS = ModelParams(a0=1.0)
CAPPED = ModelParams(a0=1.0, a1=0.3, p0=1.0)


def test_optimal_price_values():
    assert optimal_price(0.5, PARAMS) == pytest.approx(1.1)
    assert optimal_price(1.0, PARAMS) == P_MIN
    assert optimal_price(0.3, CAPPED) == 1.0
    assert np.all(optimal_price(np.linspace(0, 1, 7), CAPPED) == 1.0)


def test_optimal_price_is_affine():
    rs = np.linspace(0.0, 0.9, 10)
    slopes = np.diff(optimal_price(rs, PARAMS)) / np.diff(rs)
    np.testing.assert_allclose(slopes, -1.1 * 0.2 / 0.1, rtol=1e-9)


def test_optimal_investment_values():
    assert optimal_investment(0.3, PARAMS, 0.0) == 0.0
    assert optimal_investment(1.0, PARAMS, 2.0) == 0.0
    assert optimal_investment(0.0, PARAMS, 0.5) == pytest.approx(0.5**1.25)
    assert optimal_investment(0.0, PARAMS, 0.5) == pytest.approx(0.42045, abs=1e-5)


def test_hamiltonian_values():
    assert hamiltonian(0.0, 2.0, 0.0, 0.0, 0.0, 0.0, PARAMS) == 0.0
    assert hamiltonian(0.0, 1.0, 1.0, 0.0, 0.0, 0.0, PARAMS) == pytest.approx(1.0)


@pytest.mark.parametrize("qp", [0.3, 1.0])
def test_stationarity(qp):
    r, q, qpp = 0.5, 1.0, -0.2
    u = optimal_investment(r, PARAMS, qp)
    p = optimal_price(r, PARAMS)
    h = 1e-6
    dH_du = (
        hamiltonian(u + h, p, r, q, qp, qpp, PARAMS)
        - hamiltonian(u - h, p, r, q, qp, qpp, PARAMS)
    ) / (2 * h)
    dH_dp = (
        hamiltonian(u, p + h, r, q, qp, qpp, PARAMS)
        - hamiltonian(u, p - h, r, q, qp, qpp, PARAMS)
    ) / (2 * h)
    assert abs(dH_du) <= 1e-6
    assert abs(dH_dp) <= 1e-6


def test_bruteforce_rejects_coarse_grid():
    with pytest.raises(ValueError, match="grid must be >= 100"):
        argmax_hamiltonian_bruteforce(0.5, 0.0, 0.1, 0.0, PARAMS, 1.0, 2.0, grid=50)


def test_bruteforce_zero_slope_never_invests():
    u, _ = argmax_hamiltonian_bruteforce(0.5, 0.0, 0.0, 0.0, PARAMS, 1.0, 2.0)
    assert u == 0.0


@pytest.mark.parametrize("capped", [False, True], ids=["a1=1.1", "a1=0.3"])
def test_closed_form_matches_bruteforce(
    capped, params, params_capped, solution, solution_capped
):
    model_params = params_capped if capped else params
    sol = solution_capped if capped else solution
    grid = 400
    p_max = model_params.p0 if capped else 3.0
    for r in np.linspace(0.05, 0.95, 20):
        q, qp = float(sol.Q(r)), float(sol.Q_prime(r))
        qpp = 0.0
        u_star = optimal_investment(r, model_params, qp)
        p_star = optimal_price(r, model_params)
        u_max = max(1.0, 1.5 * u_star)
        u_bf, p_bf = argmax_hamiltonian_bruteforce(
            r, q, qp, qpp, model_params, u_max, p_max, grid
        )
        # within one lattice cell
        assert abs(u_star - u_bf) <= u_max / (grid - 1)
        assert abs(p_star - p_bf) <= p_max / (grid - 1)
        h_star = hamiltonian(u_star, p_star, r, q, qp, qpp, model_params)
        h_bf = hamiltonian(u_bf, p_bf, r, q, qp, qpp, model_params)
        assert h_star >= h_bf - 1e-6 * (1 + abs(h_bf))
        if capped:
            assert p_bf == p_max
