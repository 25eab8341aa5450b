# SPDX-License-Identifier: Apache-2.0
"""Gaussian binomial coefficients."""

import json

import click

from descentcodes.app._utils import OUTPUT_FORMAT
from descentcodes.qpoly import q_binomial, reduce_mod


@click.command()
@click.argument("i", type=click.IntRange(min=0))
@click.argument("j", type=click.IntRange(min=0))
@click.option(
    "--mod",
    "modulus",
    type=click.IntRange(min=1),
    default=None,
    help="Reduce modulo q^MOD - 1",
)
@OUTPUT_FORMAT
def qbinom(i, j, modulus, output_format):
    """Print the q-binomial [I over J], ascending in q"""
    polynomial = q_binomial(i, j)
    if modulus is not None:
        polynomial = reduce_mod(polynomial, modulus)

    if output_format == "json":
        click.echo(
            json.dumps(
                {
                    "i": i,
                    "j": j,
                    "modulus": modulus,
                    "coefficients": polynomial.to_json(),
                }
            )
        )
    else:
        click.echo(str(polynomial))
