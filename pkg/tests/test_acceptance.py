"""Long-running end-to-end checks (run with ``pytest -m slow``)."""

import time
import pytest

import numpy as np
import numpy.testing as npt

from recyclopt.evaluation import (
    compare_policies,
    evaluate_policies,
    paired_difference,
    verification_inequality,
)
from recyclopt.policy import fixed_policy, make_policy, policy_from_trajectory, zero_policy
from recyclopt.hjb import integrate_W
from recyclopt.sde import SimConfig, simulate_many

pytestmark = pytest.mark.slow

N_PATHS = 10_000
CFG = SimConfig(r0=0.5, T=None, dt=0.002, seed=0)


@pytest.fixture(scope="module")
def comparison(solution, params):
    start = time.perf_counter()
    reports = compare_policies(
        [-0.5, 0.5], params, CFG, N_PATHS, sol=solution, include_k_star=True
    )
    return reports, time.perf_counter() - start


def test_optimum_dominates_neighbours(comparison):
    reports, elapsed = comparison
    *others, best = reports
    assert best.policy_label == "k*"
    for other in others:
        mean, se = paired_difference(best, other)
        assert mean >= -se
    assert elapsed < 300.0


def test_optimum_attains_value(comparison, solution):
    best = comparison[0][-1]
    q = float(solution.Q(0.5))
    assert abs(best.j_mean - q) <= 3 * best.j_se + 0.02 * abs(q)


@pytest.mark.parametrize(
    "make",
    [
        lambda params, sol: zero_policy(params),
        lambda params, sol: fixed_policy(1.0, 2.0, params),
        lambda params, sol: fixed_policy(0.1, 1.1, params),
        lambda params, sol: policy_from_trajectory(
            integrate_W(-0.5, params, sol.config), params
        ),
        lambda params, sol: policy_from_trajectory(
            integrate_W(0.5, params, sol.config), params
        ),
    ],
    ids=["zero", "fixed(1,2)", "fixed(0.1,1.1)", "k=-0.5", "k=0.5"],
)
def test_upper_bound(make, solution, params):
    result = verification_inequality(
        make(params, solution), params, CFG, N_PATHS, None, solution
    )
    assert result.holds


def test_capped_price_dominates_investment(solution_capped, params_capped):
    policy = make_policy(solution_capped, params_capped)
    for path in simulate_many(policy, params_capped, SimConfig(), 200):
        assert np.all(path.ps == params_capped.p0)
        assert path.us.max() < params_capped.p0


def test_thread_count_does_not_change_results(solution, params):
    policies = [
        make_policy(solution, params),
        policy_from_trajectory(integrate_W(0.5, params, solution.config), params),
    ]
    one = evaluate_policies(policies, params, CFG, 2000, threads=1)
    many = evaluate_policies(policies, params, CFG, 2000, threads=8)
    for a, b in zip(one, many):
        assert a.j_mean == b.j_mean
        npt.assert_array_equal(a.samples, b.samples)
