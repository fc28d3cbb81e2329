"""Simulate sample paths of the recycling rate."""

__all__ = ["simulate"]

import pandas as pd

from recyclopt._runner import write_csv
from recyclopt.evaluation import discounted_profit
from recyclopt.model import validate
from recyclopt.sde import simulate_many, simulate_unregulated

from recyclopt._apps._common import solution_summary, solve_and_select_policy


def simulate(config, logger):
    """
    Simulate regulated paths under the configured policy, or free paths.

    Writes ``paths.csv`` in long format with columns
    ``path_id, t, r, L, U, u, p``. With ``regulated = false`` the state is not
    reflected and the constant controls ``u_fixed, p_fixed`` are applied;
    no value function is solved in that case.

    Parameters
    ----------
    config : RunConfig
        Resolved run configuration.
    logger : logging.Logger
        Subcommand logger.

    Returns
    -------
    dict
        Realized discounted profit and terminal local times of each path.

    """
    params = validate(config.model_params())
    sim = config.sim_config()
    results = {"k_star": None}
    if sim.regulated:
        sol, policy = solve_and_select_policy(config, params, logger)
        results.update(solution_summary(sol))
        paths = simulate_many(policy, params, sim, config.n_sim_paths)
    else:
        paths = [
            simulate_unregulated(params, sim, config.u_fixed, config.p_fixed, index)
            for index in range(config.n_sim_paths)
        ]

    for index, path in enumerate(paths):
        path.j_realized = discounted_profit(path, params)
        logger.info(
            f"path {index}: J={path.j_realized:.6g}, L(T)={path.Ls[-1]:.4g},"
            f" U(T)={path.Us[-1]:.4g}, r in [{path.rs.min():.4g}, {path.rs.max():.4g}]"
        )
    frames = [path.to_frame(path_id=index) for index, path in enumerate(paths)]
    write_csv(pd.concat(frames, ignore_index=True), config.output_dir, "paths.csv", logger)

    results.update(
        j_realized=[path.j_realized for path in paths],
        L_T=[path.Ls[-1] for path in paths],
        U_T=[path.Us[-1] for path in paths],
        artifacts=["paths.csv"],
    )
    return results
