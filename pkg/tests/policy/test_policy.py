"""Test feedback policies."""

import pytest

import numpy as np
import numpy.testing as npt

from recyclopt import SolverError
from recyclopt.hjb import integrate_W
from recyclopt.hjb import WTrajectory
from recyclopt.model._kernels import pack
from recyclopt.policy import (
    PolicyKind,
    fixed_policy,
    make_policy,
    optimal_investment,
    optimal_price,
    policy_from_trajectory,
    zero_policy,
)
from recyclopt.policy._policy import evaluate_controls


def test_interpolant_nodes_and_midpoints(solution, params):
    policy = make_policy(solution, params)
    assert policy.kind is PolicyKind.OPTIMAL
    xs, ws = policy.xs, policy.qprime_values
    npt.assert_array_equal(policy.qprime(xs[10:20]), ws[10:20])
    mid = 0.5 * (xs[100] + xs[101])
    assert policy.qprime(mid) == pytest.approx(0.5 * (ws[100] + ws[101]), rel=1e-12)
    assert np.all(policy.qprime(np.linspace(0, 1, 1001)) >= 0)
    # flat beyond the last node
    assert policy.qprime(1.0) == ws[-1]


def test_controls(solution, params):
    policy = make_policy(solution, params)
    rs = np.linspace(0.0, 1.0, 11)
    u, p = policy(rs)
    npt.assert_allclose(u, optimal_investment(rs, params, policy.qprime(rs)))
    npt.assert_allclose(p, optimal_price(rs, params))
    assert u[-1] == 0.0
    assert np.all(u >= 0)


def test_trajectory_policy_clamps_negative_slope(params, shoot_cfg, solution):
    traj = integrate_W(solution.k_star - 0.05, params, shoot_cfg)
    if traj.truncated:
        pytest.skip("trajectory blew up")
    policy = policy_from_trajectory(traj, params)
    assert policy.kind is PolicyKind.SHOT
    assert np.all(policy.qprime_values >= 0)
    assert policy.label.startswith("k=")


def test_truncated_trajectory_rejected(params):
    xs = np.linspace(0.0, 0.5, 5)
    traj = WTrajectory(-3.0, 0.0, xs, -xs, xs, truncated=True)
    with pytest.raises(SolverError, match="blew up"):
        policy_from_trajectory(traj, params)


def test_zero_and_fixed_policies(params):
    u, p = zero_policy(params)(np.array([0.2, 0.8]))
    npt.assert_array_equal(u, 0.0)
    npt.assert_allclose(p, optimal_price(np.array([0.2, 0.8]), params))

    u, p = fixed_policy(1.0, 2.0, params)(0.3)
    assert (u, p) == (1.0, 2.0)
    with pytest.raises(ValueError):
        fixed_policy(-1.0, 2.0, params)
    with pytest.raises(ValueError):
        fixed_policy(1.0, 0.0, params)


def test_compiled_controls_match(solution, params):
    theta = pack(params)
    for policy in (
        make_policy(solution, params),
        zero_policy(params),
        fixed_policy(0.1, 1.1, params),
    ):
        args = policy.kernel_args()
        for r in np.linspace(0.0, 1.0, 37):
            u, p = evaluate_controls(r, *args, theta)
            u_ref, p_ref = policy(r)
            assert u == pytest.approx(u_ref, rel=1e-12, abs=1e-15)
            assert p == pytest.approx(p_ref, rel=1e-12)
