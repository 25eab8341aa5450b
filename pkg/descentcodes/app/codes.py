# SPDX-License-Identifier: Apache-2.0
"""The codes C_(alpha, beta, m) and VT_(n, m): listing, counting and decoding."""

import json
import logging
import sys

import click

from descentcodes.app._utils import (
    EXIT_FAILURE,
    EXIT_NOT_FOUND,
    EXIT_UNIQUENESS,
    OUTPUT_FORMAT,
    WORD,
    bit_string,
)
from descentcodes.codes import (
    CodeSpec,
    VTSpec,
    cardinality_closed_form,
    decode_single_deletion,
    decode_vt_single_deletion,
    enumerate_vt,
    sphere_cardinality,
    sphere_ratio,
)
from descentcodes.exceptions import IntegrityError, UniquenessViolationError
from descentcodes.words import dm_distribution, enumerate_code

L = logging.getLogger("descentcodes")


def _echo(output_format, plain, data):
    if output_format == "json":
        click.echo(json.dumps(data))
    else:
        click.echo(plain)


def _sphere(spec, output_format):
    try:
        sphere = sphere_cardinality(spec).sphere
        ratio = sphere_ratio(spec)
    except IntegrityError as e:
        L.error("%s", e)
        sys.exit(EXIT_FAILURE)

    rendered = "n/a" if ratio is None else str(ratio)
    _echo(
        output_format,
        f"sphere={sphere} ratio={rendered}",
        {"code": str(spec), "sphere": str(sphere), "ratio": rendered},
    )
    if spec.alpha == spec.beta and ratio != spec.alpha + 1:
        L.error("Sphere ratio %s of %s differs from %d", rendered, spec, spec.alpha + 1)
        sys.exit(EXIT_FAILURE)


@click.command()
@click.argument("alpha", type=click.IntRange(min=1))
@click.argument("beta", type=click.IntRange(min=1))
@click.option("--m", "m", type=int, default=0, show_default=True, help="Major index residue")
@click.option("--list", "mode", flag_value="list", default=True, help="List the codewords")
@click.option("--card", "mode", flag_value="card", help="Closed-form and enumerated size")
@click.option("--dm", "mode", flag_value="dm", help="Descent moment distribution")
@click.option("--sphere", "mode", flag_value="sphere", help="Deletion sphere size and ratio")
@OUTPUT_FORMAT
def code(alpha, beta, m, mode, output_format):
    """Inspect C_(ALPHA, BETA, m), the words whose major index is m mod ALPHA + BETA"""
    spec = CodeSpec(alpha, beta, m)
    codewords = list(enumerate_code(spec))
    L.info("%s has %d codewords", spec, len(codewords))

    if mode == "list":
        words = [str(w) for w in codewords]
        _echo(output_format, " ".join(words), {"code": str(spec), "codewords": words})
    elif mode == "card":
        try:
            closed_form = cardinality_closed_form(spec)
        except IntegrityError as e:
            L.error("%s", e)
            sys.exit(EXIT_FAILURE)
        enumerated = len(codewords)
        _echo(
            output_format,
            f"closed_form={closed_form} enumerated={enumerated}",
            {"code": str(spec), "closed_form": str(closed_form), "enumerated": str(enumerated)},
        )
        if closed_form != enumerated:
            L.error("Closed form %d and count %d of %s disagree", closed_form, enumerated, spec)
            sys.exit(EXIT_FAILURE)
    elif mode == "dm":
        distribution = dm_distribution(codewords)
        _echo(
            output_format,
            str(distribution),
            {"code": str(spec), "coefficients": distribution.to_json()},
        )
    else:
        _sphere(spec, output_format)


@click.command()
@click.argument("alpha", type=click.IntRange(min=1))
@click.argument("beta", type=click.IntRange(min=1))
@click.argument("m", type=int)
@click.argument("received", type=WORD)
@OUTPUT_FORMAT
def decode(alpha, beta, m, received, output_format):
    """Recover the codeword of C_(ALPHA, BETA, M) that lost one symbol to give RECEIVED"""
    spec = CodeSpec(alpha, beta, m)
    if len(received) != spec.length - 1:
        raise click.BadParameter(
            f"expected a word of length {spec.length - 1}, got {len(received)}",
            param_hint="RECEIVED",
        )
    try:
        codeword = decode_single_deletion(received, spec)
    except UniquenessViolationError as e:
        L.error("%s", e)
        sys.exit(EXIT_UNIQUENESS)

    rendered = "NOT_FOUND" if codeword is None else str(codeword)
    _echo(output_format, rendered, {"received": str(received), "codeword": rendered})
    if codeword is None:
        sys.exit(EXIT_NOT_FOUND)


@click.command()
@click.argument("length", type=click.IntRange(min=0))
@click.argument("m", type=int)
@click.option("--list", "mode", flag_value="list", help="List the codewords (default)")
@click.option("--card", "mode", flag_value="card", help="Number of codewords")
@click.option("--decode", "received", type=WORD, default=None, help="Decode a received word")
@OUTPUT_FORMAT
def vt(length, m, mode, received, output_format):
    """Inspect VT_(LENGTH, M), the 01 words of LENGTH with moment M mod LENGTH + 1"""
    spec = VTSpec.for_length(length, m)

    if received is not None:
        if mode:
            raise click.UsageError(f"--decode cannot be combined with --{mode}")
        if len(received) != length - 1:
            raise click.BadParameter(
                f"expected a word of length {length - 1}, got {len(received)}",
                param_hint="--decode",
            )
        codeword = bit_string(decode_vt_single_deletion(received.symbols, spec))
        _echo(
            output_format,
            codeword,
            {"received": bit_string(received.symbols), "codeword": codeword},
        )
        return

    codewords = [bit_string(y) for y in enumerate_vt(spec)]
    if mode == "card":
        data = {"length": length, "m": spec.m, "size": str(len(codewords))}
        _echo(output_format, str(len(codewords)), data)
    else:
        data = {"length": length, "m": spec.m, "codewords": codewords}
        _echo(output_format, " ".join(codewords), data)
