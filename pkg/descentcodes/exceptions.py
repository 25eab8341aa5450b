# SPDX-License-Identifier: Apache-2.0
""" Exceptions used throughout package. """


class DescentCodesError(Exception):
    """Base class for descentcodes exceptions."""


class InvalidArgumentError(DescentCodesError, ValueError):
    """An argument is outside the domain of the operation."""


class IntegrityError(DescentCodesError):
    """An exact identity that must hold did not.

    Raised when a quotient that must be exact leaves a remainder, or when a proven
    property of the codes is contradicted by a computation.
    """


class UniquenessViolationError(IntegrityError):
    """A received word lies in the deletion spheres of two distinct codewords."""
