"""
Command line entry point.

    cotype-bench <suite> [--n N] [--m M] [--k K] [--q Q] [--p P] [--d D] [--seed S] [--mode exact|float]
                         [--budget B] [--out PATH] [--config FILE] [--threads T] ...

Exit status: 0 when every check passed or was skipped, 1 when a check
failed, 2 when the configuration is invalid.
"""

import logging
import os
import sys
from typing import Any, Optional

import click

from cotype_bench.configuration import FAMILIES, SUITES, RunConfig, load_run_config
from cotype_bench.errors import ConfigError
from cotype_bench.reports import emit_report, write_atomic
from cotype_bench.runner import prepare, run_suite

logger = logging.getLogger(__name__)

EXIT_CONFIG = 2


def _print_config_help(ctx: click.Context, _param: click.Parameter, value: bool) -> None:
    if not value or ctx.resilient_parsing:
        return
    RunConfig.print_help(lambda text: click.echo(text, nl=False))
    ctx.exit(0)


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--n", type=int, default=None, help="Torus dimension.")
@click.option("--m", type=int, default=None, help="Modulus of the torus.")
@click.option("--k", type=int, default=None, help="Odd box half-width.")
@click.option("--q", type=float, default=None, help="Power exponent q.")
@click.option("--p", type=float, default=None, help="Codomain norm l_p; a positive integer or inf.")
@click.option("--d", type=int, default=None, help="Codomain dimension of random families.")
@click.option("--seed", type=int, default=None, help="Seed of random families and sampled sweeps.")
@click.option("--mode", type=click.Choice(["exact", "float"]), default=None, help="Arithmetic.")
@click.option("--budget", type=int, default=None, help="Largest exhaustively enumerated domain.")
@click.option("--samples", type=int, default=None, help="Sampled tuples beyond the budget.")
@click.option("--no-sampling", "no_sampling", is_flag=True, help="Fail instead of sampling beyond the budget.")
@click.option("--functions", type=int, default=None, help="Size of the random function family.")
@click.option("--radius", type=int, default=None, help="Random values are integers in [-radius, radius].")
@click.option("--family", type=click.Choice(FAMILIES), default=None, help="Function family.")
@click.option("--family-file", type=click.Path(dir_okay=False), default=None, help="JSON TorusFunction document.")
@click.option("--jigsaw-s", type=int, default=None, help="Plateau width of the jigsaw family.")
@click.option("--bernoulli-n", type=int, default=None, help="Size N of the Bernoulli table.")
@click.option("--series-n", type=int, default=None, help="Truncation of the generating function check.")
@click.option("--threads", type=int, default=None, help="Worker threads (env COTYPE_BENCH_THREADS).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Report path; stdout when unset.")
@click.option("--config", "config_file", type=click.Path(dir_okay=False), default=None, help="YAML or JSON file.")
@click.option(
    "--help-config",
    is_flag=True,
    expose_value=False,
    is_eager=True,
    callback=_print_config_help,
    help="Describe every configuration key and its environment variable.",
)
@click.pass_context
def main(ctx: click.Context, suite: str, config_file: Optional[str], no_sampling: bool, **options: Any) -> None:
    """Run a cotype-bench verification SUITE and write its JSON report."""
    logging.basicConfig(level=os.environ.get("LOGLEVEL", "WARNING").upper())
    overrides = {"suite": suite, **options}
    if no_sampling:
        overrides["allow_sampling"] = False
    try:
        config = load_run_config(config_file, overrides)
        prepare(config)
    except ConfigError as err:
        click.echo(f"cotype-bench: {err}", err=True)
        ctx.exit(EXIT_CONFIG)

    report = run_suite(config)
    text = emit_report(report)
    if config.out:
        write_atomic(config.out, text)
    else:
        click.echo(text, nl=False)
    ctx.exit(report.exit_status)


if __name__ == "__main__":
    sys.exit(main())
