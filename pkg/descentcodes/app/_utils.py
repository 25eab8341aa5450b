# SPDX-License-Identifier: Apache-2.0
"""utils"""

import click

from descentcodes.exceptions import InvalidArgumentError
from descentcodes.words import Word

EXIT_FAILURE = 1
EXIT_NOT_FOUND = 3
EXIT_UNIQUENESS = 4


class WordType(click.ParamType):
    """Word written over {A, B}, or over {0, 1} with 0 for A and 1 for B."""

    name = "word"

    def convert(self, value, param, ctx):
        if isinstance(value, Word):
            return value
        try:
            return Word.from_string(value)
        except InvalidArgumentError as e:
            self.fail(str(e), param, ctx)
            return None


WORD = WordType()

OUTPUT_FORMAT = click.option(
    "--format",
    "output_format",
    type=click.Choice(["plain", "json"]),
    default="plain",
    show_default=True,
    help="Output format; json prints one object per line, integers as strings",
)


def bit_string(symbols):
    """Render a 0/1 sequence as '0110'."""
    return "".join(str(s) for s in symbols)
