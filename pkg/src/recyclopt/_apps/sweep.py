"""Parameter sensitivity sweep."""

__all__ = ["sweep"]

from recyclopt._runner import write_csv
from recyclopt.evaluation import sensitivity_sweep
from recyclopt.model import validate


def sweep(config, logger):
    """
    Re-solve and re-evaluate the optimal policy over ``config.values`` of ``config.param_name``.

    Writes ``sweep.csv``; rows whose solve failed carry the error message.

    Parameters
    ----------
    config : RunConfig
        Resolved run configuration.
    logger : logging.Logger
        Subcommand logger.

    Returns
    -------
    dict
        ``k*`` of each row for the manifest.

    """
    params = validate(config.model_params())
    df = sensitivity_sweep(
        config.param_name,
        config.values,
        params,
        config.eval_config(),
        config.n_paths,
        config.resolved_seed,
        shoot_cfg=config.shoot_config(),
        threads=config.threads,
    )
    failed = df["error"].astype(bool).sum()
    if failed:
        logger.warning(f"{failed} of {len(df)} sweep rows failed")
    write_csv(df, config.output_dir, "sweep.csv", logger)

    return {
        "k_star": df["k_star"].tolist(),
        "failed_rows": int(failed),
        "artifacts": ["sweep.csv"],
    }
