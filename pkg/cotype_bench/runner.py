"""Run a configured suite (or every suite) through the executor and assemble the report."""

import asyncio
import functools
import logging
from typing import Dict, List

from cotype_bench import suites  # noqa: F401  registers the suite bodies
from cotype_bench.configuration import RunConfig
from cotype_bench.errors import ConfigError
from cotype_bench.execution import SuiteExecutor, SuiteStep
from cotype_bench.families import load_family_file
from cotype_bench.registry import registry
from cotype_bench.reports import SuiteOutcome, SuiteReport, build_report, failed_suite, summarize

logger = logging.getLogger(__name__)


def suite_names(config: RunConfig) -> List[str]:
    if config.suite == "all":
        return registry.list_suites()
    if not registry.is_registered(config.suite):
        raise ConfigError(f"unknown suite {config.suite!r}")
    return [config.suite]


def prepare(config: RunConfig) -> None:
    """Checks that need more than the configuration itself; raises ConfigError."""
    if config.family == "file" and config.family_file:
        load_family_file(config.family_file, config)


def plan(config: RunConfig) -> List[SuiteStep]:
    steps = []
    for name in suite_names(config):
        suite = registry.get(name)
        assert suite is not None
        steps.append(SuiteStep(name=name, body=functools.partial(suite.body, config)))
    return steps


async def execute_suites(config: RunConfig) -> SuiteReport:
    steps = plan(config)
    result = await SuiteExecutor(max_parallel=config.threads).execute(steps)

    outcomes: Dict[str, SuiteOutcome] = {}
    for step in steps:
        if step.name in result.results:
            outcomes[step.name] = result.results[step.name]
        else:
            outcomes[step.name] = failed_suite(step.name, result.errors[step.name])
    if config.suite == "all":
        outcome = SuiteOutcome()
        for step in steps:
            outcome.extend(step.name, outcomes[step.name])
    else:
        outcome = outcomes[config.suite]

    report = build_report(config.suite, config.echo(), outcome, config.mode == "float", result.total_duration_ms)
    logger.info("%s finished in %d ms: %s", config.suite, result.total_duration_ms, summarize(report.checks))
    return report


def run_suite(config: RunConfig) -> SuiteReport:
    """Execute the configured suite; report.exit_status is 0 iff no check failed."""
    return asyncio.run(execute_suites(config))
