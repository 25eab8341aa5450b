# SPDX-License-Identifier: Apache-2.0
"""Elementary arithmetic functions: divisors, gcd, Möbius and Euler functions.

All inputs are small (at most the length of a codeword); the arithmetic functions come
from sympy and are cached.
"""

import functools
import math

import sympy
from sympy.functions.combinatorial.numbers import mobius as _sympy_mobius

from descentcodes.exceptions import InvalidArgumentError


def _check_positive(n, name="n"):
    if n < 1:
        raise InvalidArgumentError(f"{name} must be a positive integer, got {n}")


def divisors(n):
    """Return the divisors of `n` in increasing order.

    Args:
        n(int): positive integer

    Returns:
        list of int, starting with 1 and ending with `n`
    """
    _check_positive(n)
    return [int(d) for d in sympy.divisors(n)]


def gcd(a, b):
    """Greatest common divisor of two non-negative integers, with gcd(a, 0) = a."""
    if a < 0 or b < 0:
        raise InvalidArgumentError(f"gcd arguments must be non-negative, got ({a}, {b})")
    return math.gcd(a, b)


@functools.lru_cache(maxsize=None)
def mobius(n):
    """Möbius function of `n`: 0 on non square-free integers, else (-1)^(number of primes)."""
    _check_positive(n)
    return int(_sympy_mobius(n))


@functools.lru_cache(maxsize=None)
def euler_phi(n):
    """Euler totient: count of k in [1, n] coprime to `n`."""
    _check_positive(n)
    return int(sympy.totient(n))


def ramanujan_sum(t, m):
    """Sum of the m-th powers of the primitive t-th roots of unity.

    Equals mu(t / <t, m>) * phi(t) / phi(t / <t, m>); in particular phi(t) for m = 0.

    Args:
        t(int): order of the roots, positive
        m(int): exponent, any integer (only its residue mod t matters)
    """
    _check_positive(t, "t")
    reduced = t // gcd(t, m % t)
    return mobius(reduced) * (euler_phi(t) // euler_phi(reduced))
