"""Test the regulated path simulator."""

import time
import pytest

import numpy as np
import numpy.testing as npt

from recyclopt import ValidationError
from recyclopt.model import ModelParams, drift_R
from recyclopt.policy import fixed_policy, make_policy, zero_policy
from recyclopt.sde import (
    RegulatedPath,
    SimConfig,
    simulate_many,
    simulate_path,
    simulate_unregulated,
    unregulated_config,
)

from helpers import are_equal


@pytest.fixture(scope="module")
def optimal(solution, params):
    return make_policy(solution, params)


@pytest.fixture(scope="module")
def paths(optimal, params):
    return simulate_many(optimal, params, SimConfig(), 1000)


def test_config_validation():
    with pytest.raises(ValidationError, match="r0"):
        SimConfig(r0=1.5)
    with pytest.raises(ValidationError, match="dt must not exceed T"):
        SimConfig(T=0.1, dt=0.2)
    with pytest.raises(ValidationError, match="seed"):
        SimConfig(seed=-1)


def test_horizon(params):
    assert SimConfig().n_steps(params) == 1000
    assert SimConfig(T=None).horizon(params) == pytest.approx(160.0)


def test_path_shape(optimal, params):
    path = simulate_path(optimal, params, SimConfig())
    assert isinstance(path, RegulatedPath)
    for series in (path.rs, path.Ls, path.Us, path.us, path.ps, path.dWs):
        assert series.shape == (1001,)
    assert path.ts[-1] == pytest.approx(2.0)
    assert path.rs[0] == 0.5
    assert np.isnan(path.j_realized)
    assert list(path.to_frame().columns) == ["t", "r", "L", "U", "u", "p"]
    assert list(path.to_frame(path_id=3).columns)[0] == "path_id"


def test_path_length_mismatch():
    with pytest.raises(ValueError, match="expected 3"):
        RegulatedPath(*[np.zeros(3)] * 6, dWs=np.zeros(2))


def test_regulated_invariants(paths, params):
    start = time.perf_counter()
    violations = 0
    for path in paths:
        assert path.rs.min() >= 0.0 and path.rs.max() <= 1.0
        assert path.Ls[0] == 0.0 and path.Us[0] == 0.0
        assert np.all(path.dL >= 0) and np.all(path.dU >= 0)

        # reflection identity
        drift = drift_R(path.us[:-1], path.rs[:-1], params) * np.diff(path.ts)
        increments = drift + params.sigma * path.dWs[:-1] + path.dL - path.dU
        npt.assert_allclose(np.diff(path.rs), increments, atol=1e-12)

        # complementarity: pushes only where the proposal left [0, 1]
        proposal = path.rs[:-1] + drift + params.sigma * path.dWs[:-1]
        violations += int(np.any((path.dL > 0) & (proposal >= 0)))
        violations += int(np.any((path.dU > 0) & (proposal <= 1)))
        violations += int(np.any((path.dL > 0) & (path.rs[1:] != 0.0)))
        violations += int(np.any((path.dU > 0) & (path.rs[1:] != 1.0)))
    assert violations == 0
    assert time.perf_counter() - start < 10.0


def test_boundaries_are_visited(paths):
    assert any(path.Ls[-1] > 0 for path in paths)


def test_seed_determinism(optimal, params):
    cfg = SimConfig(seed=42)
    assert are_equal(simulate_path(optimal, params, cfg), simulate_path(optimal, params, cfg))
    other = simulate_path(optimal, params, SimConfig(seed=43))
    assert not np.array_equal(other.rs, simulate_path(optimal, params, cfg).rs)


def test_simulate_many_uses_path_streams(optimal, params):
    cfg = SimConfig(T=0.2)
    many = simulate_many(optimal, params, cfg, 3)
    assert are_equal(many[2], simulate_path(optimal, params, cfg, path_index=2))
    with pytest.raises(ValueError):
        simulate_many(optimal, params, cfg, 0)


def test_deterministic_decay():
    params = ModelParams(sigma=0.0)
    cfg = SimConfig(r0=0.5, T=2.0, dt=0.002)
    path = simulate_path(zero_policy(params), params, cfg)
    exact = 0.5 * np.exp(-0.5 * path.ts)
    assert np.abs(path.rs - exact).max() <= 5 * cfg.dt
    assert path.Ls[-1] == 0.0 and path.Us[-1] == 0.0


@pytest.mark.parametrize("r0", [0.0, 0.3, 1.0])
def test_no_local_time_without_noise(r0):
    params = ModelParams(sigma=0.0)
    for policy in (zero_policy(params), fixed_policy(1.0, 2.0, params)):
        path = simulate_path(policy, params, SimConfig(r0=r0))
        assert path.Ls[-1] == 0.0 and path.Us[-1] == 0.0


def test_unregulated_requires_flag(params):
    with pytest.raises(ValidationError, match="regulated=False"):
        simulate_unregulated(params, SimConfig(), 0.1, 1.0)


def test_unregulated_leaves_interval(params):
    cfg = unregulated_config(SimConfig(r0=0.5))
    escaped = False
    for index in range(20):
        path = simulate_unregulated(params, cfg, 0.1, 1.0, path_index=index)
        assert path.Ls[-1] == 0.0 and path.Us[-1] == 0.0
        assert not path.regulated
        escaped = escaped or path.rs.min() < 0 or path.rs.max() > 1
    assert escaped


def test_unregulated_without_noise_matches_regulated():
    params = ModelParams(sigma=0.0)
    cfg = SimConfig(r0=0.2)
    free = simulate_unregulated(params, unregulated_config(cfg), 0.5, 1.0)
    reflected = simulate_path(fixed_policy(0.5, 1.0, params), params, cfg)
    npt.assert_array_equal(free.rs, reflected.rs)


def test_capped_price_is_constant(solution_capped, params_capped):
    policy = make_policy(solution_capped, params_capped)
    for path in simulate_many(policy, params_capped, SimConfig(), 20):
        assert np.all(path.ps == params_capped.p0)


def test_weak_convergence(optimal, params):
    n_paths = 2000
    coarse = simulate_many(optimal, params, SimConfig(T=1.0, dt=0.004), n_paths)
    fine = simulate_many(optimal, params, SimConfig(T=1.0, dt=0.002), n_paths)
    shift = abs(
        np.mean([path.rs[-1] for path in coarse]) - np.mean([path.rs[-1] for path in fine])
    )
    # O(dt) bias plus the sampling noise of two independent means
    assert shift <= 10 * 0.004 + 4 * np.sqrt(2 * 0.25 / n_paths)
