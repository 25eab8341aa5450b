# SPDX-License-Identifier: Apache-2.0
"""Sweeps checking the closed forms against brute-force enumeration."""

import dataclasses
import json
import logging
import sys

import click

from descentcodes.app._utils import EXIT_FAILURE, OUTPUT_FORMAT
from descentcodes.exceptions import InvalidArgumentError
from descentcodes.utils import dump_json
from descentcodes.verify import (
    DEFAULT_BOUNDS,
    IDENTITIES,
    format_report,
    report_to_json,
    stream_reports,
    summarize,
)

L = logging.getLogger("descentcodes")


def _bounds(identity, max_value, max_gamma, tolerance):
    overrides = {}
    if max_value is not None:
        if identity == "all":
            raise click.UsageError("--max applies to a single identity, not to 'all'")
        overrides[IDENTITIES[identity].bound] = max_value
    if max_gamma is not None:
        overrides["max_gamma"] = max_gamma
    if tolerance is not None:
        overrides["tolerance"] = tolerance
    try:
        return dataclasses.replace(DEFAULT_BOUNDS, **overrides)
    except InvalidArgumentError as e:
        raise click.BadParameter(str(e)) from e


@click.command()
@click.argument("identity", type=click.Choice([*IDENTITIES, "all"]))
@click.option(
    "--max",
    "max_value",
    type=click.IntRange(min=0),
    default=None,
    help="Upper bound of the sweep of IDENTITY (total length, gamma, alpha and beta, ...)",
)
@click.option("--max-gamma", type=click.IntRange(min=1), default=None, help="Largest gamma")
@click.option(
    "--tolerance",
    type=click.FloatRange(min=0, min_open=True),
    default=None,
    help="Absolute tolerance of the numeric checks",
)
@click.option("--jobs", "n_jobs", type=int, default=1, show_default=True, help="joblib workers")
@click.option("--progress", is_flag=True, help="Show a progress bar")
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Also write every report to this JSON file",
)
@OUTPUT_FORMAT
def app(identity, max_value, max_gamma, tolerance, n_jobs, progress, output, output_format):
    """Verify IDENTITY ('all' for every identity); exit 1 if any report fails"""
    # pylint: disable=too-many-arguments
    bounds = _bounds(identity, max_value, max_gamma, tolerance)
    L.info("Sweep bounds: %s", bounds)

    reports = []
    for report in stream_reports(identity, bounds, n_jobs=n_jobs, display_progress=progress):
        reports.append(report)
        click.echo(report_to_json(report) if output_format == "json" else format_report(report))

    passed = sum(1 for r in reports if r.passed)
    failed = len(reports) - passed
    if output_format == "json":
        click.echo(json.dumps({"summary": {"passed": passed, "failed": failed}}))
    else:
        click.echo(summarize(reports).to_string(index=False))
        click.echo(f"{passed} passed, {failed} failed")

    if output is not None:
        dump_json(output, [r.to_dict() for r in reports])

    sys.exit(int(failed > 0) * EXIT_FAILURE)
