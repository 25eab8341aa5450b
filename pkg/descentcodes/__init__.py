# SPDX-License-Identifier: Apache-2.0
""" descentcodes """

from descentcodes.exceptions import DescentCodesError  # noqa
from descentcodes.version import __version__  # noqa
