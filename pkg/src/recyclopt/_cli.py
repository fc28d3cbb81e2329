"""Command Line Interface for recyclopt."""

__all__ = ["cli", "run"]

import click

from . import _runner
from ._exceptions import RecycloptError

EXIT_STATUS = """
\b
Exit codes:
  0  success
  2  configuration error (unreadable file, unknown key, bad value)
  3  validation error (parameters violate a model invariant)
  4  solver error (shooting failed or was inconsistent)
  5  I/O error (output cannot be written)
"""

CONTEXT_SETTINGS = dict(ignore_unknown_options=True, allow_extra_args=True)


@click.group(epilog=EXIT_STATUS)
def cli():
    """
    Solve, simulate and evaluate the recycling control problem.

    Every subcommand reads a flat YAML config (--config, or the
    RECYCLOPT_CONFIG environment variable); any key can be overridden with
    --key=value. Each run writes its artifacts and a manifest.json, which
    can be passed back as --config to reproduce the run.
    """
    pass


def _common_options(func):
    options = [
        click.option(
            "--config",
            "config_path",
            default=None,
            type=click.Path(dir_okay=False),
            help="Location of the YAML config (or manifest.json) file.",
        ),
        click.option("--threads", default=None, type=int, help="Cap on worker threads."),
        click.option("--seed", default=None, type=int, help="Random seed."),
        click.option("--out", default=None, help="Output directory."),
        click.pass_context,
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run(ctx, subcommand, config_path, threads, seed, out, **flags):
    try:
        file_values = _runner.read_config_file(config_path)
        overrides = _runner.parse_overrides(ctx.args)
        for key, value in (("threads", threads), ("seed", seed), ("output_dir", out)):
            if value is not None:
                overrides[key] = value
        overrides.update(flags)
        config = _runner.resolve_config(file_values, overrides)
    except (RecycloptError, ValueError) as err:
        click.echo(f"Error: {err}", err=True)
        ctx.exit(_runner.exit_code(err))
    ctx.exit(_runner.run_app(subcommand, config))


@cli.command(context_settings=CONTEXT_SETTINGS, epilog=EXIT_STATUS)
@_common_options
def solve(ctx, config_path, threads, seed, out):
    """
    Locate k* and write hjb_solution.csv and w_family.csv.
    """
    _run(ctx, "solve", config_path, threads, seed, out)


@cli.command(context_settings=CONTEXT_SETTINGS, epilog=EXIT_STATUS)
@_common_options
@click.option(
    "--unregulated",
    is_flag=True,
    default=False,
    help="Simulate the free state under constant controls u_fixed, p_fixed.",
)
def simulate(ctx, config_path, threads, seed, out, unregulated):
    """
    Simulate sample paths and write paths.csv.
    """
    flags = {"regulated": False} if unregulated else {}
    _run(ctx, "simulate", config_path, threads, seed, out, **flags)


@cli.command(context_settings=CONTEXT_SETTINGS, epilog=EXIT_STATUS)
@_common_options
def evaluate(ctx, config_path, threads, seed, out):
    """
    Monte Carlo estimate of J for a policy, checked against Q(r0).
    """
    _run(ctx, "evaluate", config_path, threads, seed, out)


@cli.command(context_settings=CONTEXT_SETTINGS, epilog=EXIT_STATUS)
@_common_options
def compare(ctx, config_path, threads, seed, out):
    """
    Paired comparison of the W_k policies for k_values and k*.
    """
    _run(ctx, "compare", config_path, threads, seed, out)


@cli.command(context_settings=CONTEXT_SETTINGS, epilog=EXIT_STATUS)
@_common_options
def sweep(ctx, config_path, threads, seed, out):
    """
    Sensitivity of k*, Q(r0) and J to one model parameter.
    """
    _run(ctx, "sweep", config_path, threads, seed, out)


def run(argv: list[str] | None = None) -> int:
    """
    Run the command line and return its exit status instead of exiting.

    Parameters
    ----------
    argv : list[str], optional
        Arguments, e.g. ``["solve", "--config", "example1.yaml"]``.
        The default is ``None`` (``sys.argv[1:]``).

    Returns
    -------
    int
        Exit status, see ``recyclopt --help``.

    """
    try:
        status = cli.main(args=argv, prog_name="recyclopt", standalone_mode=False)
    except click.ClickException as err:
        err.show()
        return err.exit_code
    except click.Abort:
        return 1
    return status if isinstance(status, int) else 0


if __name__ == "__main__":
    cli()
