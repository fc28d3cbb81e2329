"""Paired comparison of shot-trajectory policies."""

__all__ = ["compare"]

from recyclopt._runner import write_csv
from recyclopt.evaluation import compare_policies, paired_difference, reports_to_frame
from recyclopt.hjb import shoot_kstar
from recyclopt.model import validate

from recyclopt._apps._common import solution_summary


def compare(config, logger):
    """
    Compare the policies induced by ``W_k`` for ``k`` in ``config.k_values`` and ``k*``.

    All policies are evaluated on common random numbers. Writes
    ``comparison.csv`` with one row per slope and the paired difference of
    the ``k*`` policy against each row.

    Parameters
    ----------
    config : RunConfig
        Resolved run configuration.
    logger : logging.Logger
        Subcommand logger.

    Returns
    -------
    dict
        Report summaries for the manifest.

    """
    params = validate(config.model_params())
    shoot_cfg = config.shoot_config()
    sol = shoot_kstar(params, shoot_cfg, r0=config.r0)
    reports = compare_policies(
        config.k_values,
        params,
        config.eval_config(),
        config.n_paths,
        config.resolved_seed,
        shoot_cfg=shoot_cfg,
        sol=sol,
        include_k_star=True,
        threads=config.threads,
    )

    best = next(report for report in reports if report.policy_label == "k*")
    df = reports_to_frame(reports)
    diffs = [paired_difference(best, report) for report in reports]
    df["diff_k_star"] = [diff for diff, _ in diffs]
    df["diff_k_star_se"] = [se for _, se in diffs]
    for report, (diff, se) in zip(reports, diffs):
        logger.info(
            f"{report.policy_label}: J={report.j_mean:.6g} +/- {report.j_se:.3g},"
            f" J(k*) - J = {diff:.4g} +/- {se:.3g}"
        )
    write_csv(df, config.output_dir, "comparison.csv", logger)

    return {
        **solution_summary(sol),
        "reports": [report.summary() for report in reports],
        "artifacts": ["comparison.csv"],
    }
