"""Monte Carlo evaluation of a policy against the value function."""

__all__ = ["evaluate"]

from recyclopt._runner import write_csv
from recyclopt.evaluation import reports_to_frame, verification_inequality
from recyclopt.model import validate

from recyclopt._apps._common import solution_summary, solve_and_select_policy


def evaluate(config, logger):
    """
    Estimate the discounted profit of the configured policy.

    The estimate is checked against the solved value function,
    ``J(r0) <= Q(r0) + 3 SE + disc_allowance |Q(r0)|``. Writes
    ``evaluation.csv`` with one row holding the report and the check.

    Parameters
    ----------
    config : RunConfig
        Resolved run configuration.
    logger : logging.Logger
        Subcommand logger.

    Returns
    -------
    dict
        Report summary and upper-bound check for the manifest.

    """
    params = validate(config.model_params())
    sol, policy = solve_and_select_policy(config, params, logger)
    check = verification_inequality(
        policy,
        params,
        config.eval_config(),
        config.n_paths,
        config.resolved_seed,
        sol,
        disc_allowance=config.disc_allowance,
        threads=config.threads,
    )
    report = check.report
    logger.info(
        f"{report.policy_label}: J={report.j_mean:.6g} +/- {report.j_se:.3g},"
        f" Q(r0)={check.q_of_r0:.6g}, margin={check.margin:.4g}"
    )

    df = reports_to_frame([report])
    df["margin"] = check.margin
    df["holds"] = check.holds
    write_csv(df, config.output_dir, "evaluation.csv", logger)

    return {
        **solution_summary(sol),
        "report": report.summary(),
        "verification": {"holds": check.holds, "margin": check.margin},
        "artifacts": ["evaluation.csv"],
    }
