# SPDX-License-Identifier: Apache-2.0
"""The codes C_(alpha, beta, m) and the VT codes they are built from.

C_(alpha, beta, m) is the set of words with alpha A's and beta B's whose major index is
congruent to m modulo alpha + beta; equivalently the words whose descent vector lies in
the VT code VT_(alpha + beta - 1, m). Each such set corrects a single deletion.
"""

import logging
import math
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from descentcodes.exceptions import IntegrityError, InvalidArgumentError, UniquenessViolationError
from descentcodes.numtheory import divisors, gcd, ramanujan_sum
from descentcodes.qpoly import q_binomial
from descentcodes.words import (
    Word,
    deletion_sphere,
    descent_vector,
    enumerate_code,
    major_index,
    moment,
    run_number,
    single_deletions,
)

L = logging.getLogger(__name__)

SphereCardinality = namedtuple("SphereCardinality", ["sphere", "run_sum"])


@dataclass(frozen=True)
class CodeSpec:
    """Parameters (alpha, beta, m) of C_(alpha, beta, m); m is normalized into [0, alpha + beta)."""

    alpha: int
    beta: int
    m: int = 0

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise InvalidArgumentError(
                f"alpha and beta must be positive, got ({self.alpha}, {self.beta})"
            )
        object.__setattr__(self, "m", self.m % self.length)

    @property
    def length(self):
        """Codeword length alpha + beta, also the modulus of the major index."""
        return self.alpha + self.beta

    def __str__(self):
        return f"C_({self.alpha},{self.beta},{self.m})"


@dataclass(frozen=True)
class VTSpec:
    """Parameters of VT_(length, m): 01 words of `length` with moment = m mod `modulus`."""

    length: int
    modulus: int
    m: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise InvalidArgumentError(f"Negative VT code length {self.length}")
        if self.modulus != self.length + 1:
            raise InvalidArgumentError(
                f"VT modulus must be length + 1 = {self.length + 1}, got {self.modulus}"
            )
        object.__setattr__(self, "m", self.m % self.modulus)

    @classmethod
    def for_length(cls, length, m=0):
        """VT_(length, m) with its modulus length + 1."""
        return cls(length, length + 1, m)


def vt_membership(y, spec):
    """True iff the 01-sequence `y` belongs to VT_(spec.length, spec.m)."""
    if len(y) != spec.length:
        raise InvalidArgumentError(f"Expected a sequence of length {spec.length}, got {len(y)}")
    return moment(y) % spec.modulus == spec.m


def enumerate_vt(spec):
    """Generate the 01 tuples of VT_(spec.length, spec.m) in lexicographic order."""
    for bits in range(1 << spec.length):
        y = Word(spec.length, bits).symbols
        if moment(y) % spec.modulus == spec.m:
            yield y


def code_membership(w, spec):
    """True iff `w` belongs to C_(alpha, beta, m)."""
    if len(w) != spec.length or w.weight != spec.beta:
        return False
    return major_index(w) % spec.length == spec.m


def cardinality_closed_form(spec):
    """#C_(alpha, beta, m) from the divisor sum over d | gcd(alpha, beta).

    (1 / (alpha + beta)) * sum binom((alpha + beta) / d, beta / d) * c_d(m), where c_d(m) is
    the Ramanujan sum mu(d / <d, m>) phi(d) / phi(d / <d, m>).
    """
    total = sum(
        math.comb(spec.length // d, spec.beta // d) * ramanujan_sum(d, spec.m)
        for d in divisors(gcd(spec.alpha, spec.beta))
    )
    if total % spec.length:
        raise IntegrityError(f"Divisor sum {total} for {spec} is not divisible by {spec.length}")
    return total // spec.length


def cardinality_m0(alpha, beta):
    """#C_(alpha, beta, 0): the divisor sum with c_d(0) = phi(d), the largest class size."""
    return cardinality_closed_form(CodeSpec(alpha, beta, 0))


def r_poly_closed_form(alpha, beta, r):
    """Closed form of R_r(q), the descent moment distribution of the r-run words of C_(alpha, beta).

    q^e [alpha-1 over a][beta-1 over b] + q^(beta+e) [alpha-1 over b][beta-1 over a], with
    e = floor((r-1)^2 / 4), a = floor((r-2) / 2) and b = floor((r-1) / 2).
    """
    if r < 2:
        raise InvalidArgumentError(f"Words of C_(alpha, beta) have at least 2 runs, got r={r}")
    exponent = (r - 1) ** 2 // 4
    a, b = (r - 2) // 2, (r - 1) // 2
    starting_with_a = q_binomial(alpha - 1, a) * q_binomial(beta - 1, b)
    starting_with_b = q_binomial(alpha - 1, b) * q_binomial(beta - 1, a)
    return starting_with_a.shift(exponent) + starting_with_b.shift(beta + exponent)


def sphere_cardinality(spec):
    """Size of the deletion sphere of C_(alpha, beta, m), with the sum of run numbers.

    The sphere size is a genuine set size; a difference with the run-number sum means the
    code is not single-deletion-correcting and raises an IntegrityError.

    Returns:
        SphereCardinality(sphere, run_sum)
    """
    code = list(enumerate_code(spec))
    result = SphereCardinality(len(deletion_sphere(code)), sum(run_number(w) for w in code))
    if result.sphere != result.run_sum:
        raise IntegrityError(
            f"#dS({spec}) = {result.sphere} differs from the run-number sum {result.run_sum}"
        )
    return result


def sphere_ratio(spec):
    """#dS(C) / #C as an exact Fraction, None for an empty code."""
    size = sum(1 for _ in enumerate_code(spec))
    if size == 0:
        return None
    return Fraction(sphere_cardinality(spec).sphere, size)


def decode_single_deletion(received, spec):
    """Recover the codeword of C_(alpha, beta, m) from a word with one symbol deleted.

    Every single-symbol insertion is tried; the insertions that are codewords are the
    candidates.

    Returns:
        the codeword, or None when no insertion lands in the code

    Raises:
        InvalidArgumentError: `received` is not of length alpha + beta - 1
        UniquenessViolationError: two distinct codewords contain `received` in their sphere
    """
    if len(received) != spec.length - 1:
        raise InvalidArgumentError(
            f"Received word {received} should have length {spec.length - 1}, got {len(received)}"
        )
    candidates = {
        received.insert(position, symbol)
        for position in range(1, spec.length + 1)
        for symbol in (0, 1)
    }
    matches = sorted(c for c in candidates if code_membership(c, spec))
    if len(matches) > 1:
        raise UniquenessViolationError(
            f"{received} decodes to several codewords of {spec}: {', '.join(map(str, matches))}"
        )
    if not matches:
        L.debug("%s is not in the deletion sphere of %s", received, spec)
        return None
    return matches[0]


def decode_vt_single_deletion(received, spec):
    """Levenshtein's decoder for VT_(n, m): restore the symbol deleted from a codeword.

    With w the weight of `received` and D = (m - moment(received)) mod (n + 1): when D <= w a
    0 was deleted and goes back with D ones to its right, otherwise a 1 was deleted and goes
    back with D - w - 1 zeros to its left.

    Args:
        received: 01 sequence of length n - 1
        spec(VTSpec): the code VT_(n, m)

    Returns:
        tuple of 0/1 of length n, a codeword of VT_(n, m)
    """
    received = tuple(received)
    if len(received) != spec.length - 1:
        raise InvalidArgumentError(
            f"Received sequence should have length {spec.length - 1}, got {len(received)}"
        )
    weight = sum(received)
    deficiency = (spec.m - moment(received)) % spec.modulus
    if deficiency <= weight:
        # scan from the right until `deficiency` ones have been passed
        ones = 0
        position = len(received)
        while ones < deficiency:
            position -= 1
            ones += received[position]
        return received[:position] + (0,) + received[position:]
    zeros_left = deficiency - weight - 1
    zeros = 0
    position = 0
    while zeros < zeros_left:
        zeros += 1 - received[position]
        position += 1
    return received[:position] + (1,) + received[position:]


def is_single_deletion_correcting(words):
    """True iff the single-deletion spheres of `words` are pairwise disjoint."""
    words = list(words)
    lengths = {len(w) for w in words}
    if len(lengths) > 1 or 0 in lengths:
        raise InvalidArgumentError("Words must share one positive length")
    union = set()
    for w in words:
        sphere = single_deletions(w)
        if not union.isdisjoint(sphere):
            return False
        union.update(sphere)
    return True


def code_membership_via_vt(w, spec):
    """Membership of `w` in C_(alpha, beta, m) through its descent vector and VT_(l-1, m)."""
    if len(w) != spec.length or w.weight != spec.beta:
        return False
    return vt_membership(descent_vector(w), VTSpec.for_length(spec.length - 1, spec.m))
