"""Solve the HJB equation by shooting."""

__all__ = ["solve"]

import pandas as pd

from recyclopt._runner import write_csv
from recyclopt.hjb import scan_trajectories, shoot_kstar
from recyclopt.model import validate

from recyclopt._apps._common import solution_summary


def solve(config, logger):
    """
    Locate k* and write the value function and a family of shot trajectories.

    Writes ``hjb_solution.csv`` (columns ``x, W, Y``) for the optimal slope and
    ``w_family.csv`` (columns ``k, x, W, Y, classification, c_k``) for the
    slopes in ``config.k_family`` together with ``k*``.

    Parameters
    ----------
    config : RunConfig
        Resolved run configuration.
    logger : logging.Logger
        Subcommand logger.

    Returns
    -------
    dict
        Solution summary for the manifest.

    """
    params = validate(config.model_params())
    shoot_cfg = config.shoot_config()
    sol = shoot_kstar(params, shoot_cfg, r0=config.r0)
    logger.info(f"k*={sol.k_star:.12g}, residual={sol.residual_sup:.3e}")

    traj = sol.trajectory
    solution = pd.DataFrame({"x": traj.xs, "W": traj.Ws, "Y": traj.Ys})
    write_csv(solution, config.output_dir, "hjb_solution.csv", logger)

    k_values = sorted(set(config.k_family) | {sol.k_star})
    frames = []
    for shot in scan_trajectories(k_values, params, shoot_cfg):
        kind = shot.classification
        frames.append(
            pd.DataFrame(
                {
                    "k": shot.k,
                    "x": shot.xs,
                    "W": shot.Ws,
                    "Y": shot.Ys,
                    "classification": kind.kind.value,
                    "c_k": kind.c_k,
                }
            )
        )
        logger.debug(f"k={shot.k:.6g}: {kind.kind.value}, c_k={kind.c_k}")
    write_csv(pd.concat(frames, ignore_index=True), config.output_dir, "w_family.csv", logger)

    return {
        **solution_summary(sol),
        "artifacts": ["hjb_solution.csv", "w_family.csv"],
    }
