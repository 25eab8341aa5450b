# SPDX-License-Identifier: Apache-2.0
"""Exact integer polynomials in q: q-integers, q-factorials and q-binomials.

Coefficients are Python integers, so arithmetic never wraps. Two representations are
provided:

- ``QPoly``: a polynomial, coefficient of q^k at index k, trailing zeros stripped.
- ``ResiduePoly``: a polynomial reduced modulo q^n - 1, exactly n coefficients.

Besides the algebra, the module holds two independent witnesses of the q-binomial:
the lattice-path weight distribution and the numeric evaluation at roots of unity.
"""

import enum
import functools
import itertools
import logging
import math
import operator
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from descentcodes.exceptions import IntegrityError, InvalidArgumentError
from descentcodes.numtheory import gcd

L = logging.getLogger(__name__)


def _render_terms(coefficients, variable="q"):
    """Render ascending-degree text: '2 + q + 2q^2 - q^3'; '0' when there is no term."""
    text = ""
    for exponent, coefficient in enumerate(coefficients):
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        if exponent == 0:
            term = str(magnitude)
        else:
            power = variable if exponent == 1 else f"{variable}^{exponent}"
            term = power if magnitude == 1 else f"{magnitude}{power}"
        if not text:
            text = term if coefficient > 0 else f"-{term}"
        else:
            text += f" + {term}" if coefficient > 0 else f" - {term}"
    return text or "0"


@dataclass(frozen=True)
class QPoly:
    """Polynomial in q with exact integer coefficients, in canonical form.

    ``coefficients[k]`` is the coefficient of q^k; the highest stored coefficient is
    nonzero, the zero polynomial has no coefficients.
    """

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = [operator.index(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def from_terms(cls, terms):
        """Build from a mapping {exponent: coefficient}; repeated exponents must be summed."""
        if not terms:
            return cls()
        degree = max(terms)
        if min(terms) < 0:
            raise InvalidArgumentError("Negative exponents are not polynomial terms")
        coefficients = [0] * (degree + 1)
        for exponent, coefficient in terms.items():
            coefficients[exponent] += coefficient
        return cls(tuple(coefficients))

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        """coefficient * q^exponent"""
        return cls.from_terms({exponent: coefficient})

    @property
    def degree(self):
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self):
        """True for the zero polynomial."""
        return not self.coefficients

    def __getitem__(self, exponent):
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return 0

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        pairs = itertools.zip_longest(self.coefficients, other.coefficients, fillvalue=0)
        return QPoly(tuple(a + b for a, b in pairs))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self.coefficients))
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPoly()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return QPoly(tuple(product))

    __rmul__ = __mul__

    def shift(self, exponent):
        """Multiply by q^exponent."""
        if exponent < 0:
            raise InvalidArgumentError("Shift exponent must be non-negative")
        if self.is_zero():
            return self
        return QPoly((0,) * exponent + self.coefficients)

    def __divmod__(self, divisor):
        """Long division by a polynomial whose leading coefficient is 1 or -1.

        Returns:
            (quotient, remainder) with self = quotient * divisor + remainder and
            deg(remainder) < deg(divisor)
        """
        if not isinstance(divisor, QPoly):
            return NotImplemented
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        lead = divisor.coefficients[-1]
        if lead not in (1, -1):
            raise InvalidArgumentError("Divisor must have leading coefficient 1 or -1")

        remainder = list(self.coefficients)
        shift_max = len(remainder) - len(divisor.coefficients)
        quotient = [0] * (shift_max + 1) if shift_max >= 0 else []
        for shift in range(shift_max, -1, -1):
            factor = remainder[shift + divisor.degree] * lead
            if factor == 0:
                continue
            quotient[shift] = factor
            for k, c in enumerate(divisor.coefficients):
                remainder[shift + k] -= factor * c
        return QPoly(tuple(quotient)), QPoly(tuple(remainder))

    def exact_quotient(self, divisor):
        """Quotient of a division that must leave no remainder."""
        quotient, remainder = divmod(self, divisor)
        if not remainder.is_zero():
            raise IntegrityError(f"Division of {self} by {divisor} leaves remainder {remainder}")
        return quotient

    def evaluate(self, value):
        """Exact value at an integer (or any number) by Horner's rule."""
        result = 0
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def at_one(self):
        """Value at q = 1, the sum of the coefficients."""
        return sum(self.coefficients)

    def __str__(self):
        return _render_terms(self.coefficients)

    def to_json(self):
        """Coefficients as decimal strings, ascending by degree."""
        return [str(c) for c in self.coefficients]


@dataclass(frozen=True)
class ResiduePoly:
    """A polynomial reduced modulo q^modulus - 1; exactly `modulus` coefficients."""

    modulus: int
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidArgumentError(f"Modulus must be positive, got {self.modulus}")
        coefficients = tuple(operator.index(c) for c in self.coefficients)
        if len(coefficients) != self.modulus:
            raise InvalidArgumentError(
                f"Expected {self.modulus} coefficients, got {len(coefficients)}"
            )
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_counts(cls, modulus, counts):
        """Build from a mapping {residue: coefficient}; residues are reduced mod `modulus`."""
        coefficients = [0] * modulus
        for residue, coefficient in counts.items():
            coefficients[residue % modulus] += coefficient
        return cls(modulus, tuple(coefficients))

    def __add__(self, other):
        if not isinstance(other, ResiduePoly):
            return NotImplemented
        if other.modulus != self.modulus:
            raise InvalidArgumentError(
                f"Cannot add residues modulo q^{self.modulus} - 1 and q^{other.modulus} - 1"
            )
        return ResiduePoly(
            self.modulus, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def lift(self):
        """The canonical representative, of degree < modulus."""
        return QPoly(self.coefficients)

    def __str__(self):
        return _render_terms(self.coefficients)

    def to_json(self):
        """Coefficients as decimal strings, ascending by degree."""
        return [str(c) for c in self.coefficients]


class Step(enum.Enum):
    """Unit step of a lattice path."""

    EAST = "E"
    NORTH = "N"


@dataclass(frozen=True)
class LatticePath:
    """Path from (0, 0) made of unit East and North steps."""

    steps: Tuple[Step, ...]

    @property
    def weight(self):
        """Number of unit squares of the bounding rectangle north-west of the path.

        Every East step contributes the squares above it, that is the number of North
        steps still to come.
        """
        weight = 0
        norths_left = sum(1 for step in self.steps if step is Step.NORTH)
        for step in self.steps:
            if step is Step.NORTH:
                norths_left -= 1
            else:
                weight += norths_left
        return weight

    def __str__(self):
        return "".join(step.value for step in self.steps)


def _check_q_integer_argument(i):
    if i < 1:
        raise InvalidArgumentError(f"q-integer is defined for positive integers, got {i}")


@functools.lru_cache(maxsize=None)
def q_integer(i):
    """[i] = 1 + q + ... + q^(i-1)"""
    _check_q_integer_argument(i)
    return QPoly((1,) * i)


@functools.lru_cache(maxsize=None)
def q_factorial(i):
    """[i]! = [i][i-1]...[1], with [0]! = 1"""
    if i < 0:
        raise InvalidArgumentError(f"q-factorial is defined for non-negative integers, got {i}")
    if i == 0:
        return QPoly((1,))
    return q_factorial(i - 1) * q_integer(i)


@functools.lru_cache(maxsize=None)
def q_binomial(i, j):
    """Gaussian binomial coefficient [i over j].

    Computed as the exact quotient [i]! / ([j]! [i-j]!); a remainder raises an
    IntegrityError. Outside 0 <= j <= i the result is the zero polynomial.
    """
    if i < 0 or j < 0 or j > i:
        return QPoly()
    result = q_factorial(i).exact_quotient(q_factorial(j) * q_factorial(i - j))
    assert result.degree == j * (i - j)
    return result


def reduce_mod(p, n):
    """Reduce `p` modulo q^n - 1 by folding every exponent e onto e mod n.

    Returns:
        ResiduePoly with modulus `n`
    """
    if n < 1:
        raise InvalidArgumentError(f"Modulus must be positive, got {n}")
    return ResiduePoly.from_counts(n, dict(enumerate(p.coefficients)))


def primitive_root_indices(d):
    """Indices k in [0, d) such that exp(2 pi i k / d) is a primitive d-th root of unity."""
    if d < 1:
        raise InvalidArgumentError(f"Root order must be positive, got {d}")
    return [k for k in range(d) if gcd(k, d) == 1]


def eval_at_root_of_unity(p, d, k):
    """Evaluate `p` at exp(2 pi i k / d) by Horner's rule in double precision.

    Returns:
        complex
    """
    if d < 1:
        raise InvalidArgumentError(f"Root order must be positive, got {d}")
    if p.is_zero():
        return complex(0.0)
    root = np.exp(2j * np.pi * k / d)
    # np.polyval expects the highest degree first
    return complex(np.polyval(np.array(p.coefficients[::-1], dtype=np.float64), root))


def q_binomial_limit_at_primitive_root(alpha, beta, d):
    """Value of [alpha + beta over beta] at a primitive d-th root of unity, d | alpha + beta.

    binom((alpha + beta) / d, beta / d) when d divides both alpha and beta, 0 otherwise.
    """
    if d < 1 or (alpha + beta) % d:
        raise InvalidArgumentError(f"{d} does not divide alpha + beta = {alpha + beta}")
    if alpha % d == 0 and beta % d == 0:
        return math.comb((alpha + beta) // d, beta // d)
    return 0


def lattice_paths(i, j):
    """Generate the paths from (0, 0) to (j, i - j), East step positions in lexicographic order."""
    if j < 0 or j > i:
        raise InvalidArgumentError(f"Need 0 <= j <= i, got i={i}, j={j}")
    for east_positions in itertools.combinations(range(i), j):
        steps = [Step.NORTH] * i
        for position in east_positions:
            steps[position] = Step.EAST
        yield LatticePath(tuple(steps))


def lattice_path_weight_distribution(i, j):
    """Sum of q^S(p) over all lattice paths p from (0, 0) to (j, i - j)."""
    weights = Counter(path.weight for path in lattice_paths(i, j))
    L.debug("%d lattice paths to (%d, %d)", sum(weights.values()), j, i - j)
    return QPoly.from_terms(weights)
