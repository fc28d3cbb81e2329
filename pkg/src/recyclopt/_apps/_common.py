"""Helpers shared by the subcommands."""

from recyclopt.hjb import shoot_kstar
from recyclopt.policy import fixed_policy, make_policy, zero_policy


def solve_and_select_policy(config, params, logger):
    """Solve for ``k*`` and build the policy named by ``config.policy``."""
    sol = shoot_kstar(params, config.shoot_config(), r0=config.r0)
    logger.info(f"Solved k*={sol.k_star:.12g}, Q({config.r0})={sol.Q_of_r0:.6g}")
    if config.policy == "zero":
        policy = zero_policy(params)
    elif config.policy == "fixed":
        policy = fixed_policy(config.u_fixed, config.p_fixed, params)
    else:
        policy = make_policy(sol, params)
    return sol, policy


def solution_summary(sol):
    """Scalar description of a solved value function."""
    return {
        "k_star": sol.k_star,
        "K_k": sol.K_k,
        "terminal_W": sol.trajectory.terminal_value,
        "residual_sup": sol.residual_sup,
        "Q_of_r0": sol.Q_of_r0,
    }
