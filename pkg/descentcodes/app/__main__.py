# SPDX-License-Identifier: Apache-2.0
"""
Deletion-correcting codes from descent statistics: calculator and verification harness.
"""

import logging

import click

from descentcodes.app import codes, polynomials, verify
from descentcodes.version import __version__


@click.group("descentcodes")
@click.version_option(__version__)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default="WARNING",
    show_default=True,
    help="Logging level",
)
def main(log_level):
    """Deletion-correcting codes from descent statistics"""
    logging.basicConfig(level=log_level.upper())


for name, app in {
    "qbinom": polynomials.qbinom,
    "code": codes.code,
    "decode": codes.decode,
    "vt": codes.vt,
    "verify": verify.app,
}.items():
    main.add_command(app, name)
