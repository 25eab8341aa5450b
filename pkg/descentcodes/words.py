# SPDX-License-Identifier: Apache-2.0
"""Binary words over the ordered alphabet A < B and their statistics.

A word is packed into an integer with A -> 0 and B -> 1, position 1 being the most
significant bit, so that numeric order of equal-length words is lexicographic order.
Positions are 1-based everywhere in the public interface: the moment of a descent
vector y is y_1 + 2 y_2 + ... + (l - 1) y_(l-1).
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass

from descentcodes.exceptions import InvalidArgumentError
from descentcodes.qpoly import QPoly

L = logging.getLogger(__name__)

ALPHABET = "AB"
_SYMBOL_VALUES = {"A": 0, "B": 1, "0": 0, "1": 1}


@dataclass(frozen=True, order=True)
class Word:
    """Finite word over {A, B}, packed as bits (A -> 0, B -> 1).

    Ordering compares the length first, then the packed bits: lexicographic order
    with A < B among words of equal length.
    """

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise InvalidArgumentError(f"Negative word length {self.length}")
        if not 0 <= self.bits < (1 << self.length):
            raise InvalidArgumentError(f"Bits {self.bits} do not fit in {self.length} symbols")

    @classmethod
    def from_string(cls, text):
        """Parse a word written over {A, B}; the characters 0 and 1 are synonyms of A and B."""
        bits = 0
        for char in text.strip().upper():
            if char not in _SYMBOL_VALUES:
                raise InvalidArgumentError(f"Invalid symbol {char!r} in word {text!r}")
            bits = (bits << 1) | _SYMBOL_VALUES[char]
        return cls(len(text.strip()), bits)

    @classmethod
    def from_symbols(cls, symbols):
        """Build from a sequence of 0 (A) and 1 (B)."""
        bits = 0
        length = 0
        for symbol in symbols:
            if symbol not in (0, 1):
                raise InvalidArgumentError(f"Invalid symbol {symbol!r}, expected 0 or 1")
            bits = (bits << 1) | symbol
            length += 1
        return cls(length, bits)

    def __len__(self):
        return self.length

    def __str__(self):
        return "".join(ALPHABET[s] for s in self.symbols)

    def symbol(self, position):
        """Symbol (0 for A, 1 for B) at 1-based `position`."""
        return (self.bits >> (self.length - position)) & 1

    @property
    def symbols(self):
        """Tuple of 0/1 symbols, position 1 first."""
        return tuple(self.symbol(p) for p in range(1, self.length + 1))

    @property
    def weight(self):
        """Number of B's (Hamming weight under A = 0, B = 1)."""
        return bin(self.bits).count("1")

    def delete(self, position):
        """Word obtained by deleting the symbol at 1-based `position`."""
        if not 1 <= position <= self.length:
            raise InvalidArgumentError(f"Cannot delete position {position} of {self}")
        tail = self.length - position
        prefix = self.bits >> (tail + 1)
        suffix = self.bits & ((1 << tail) - 1)
        return Word(self.length - 1, (prefix << tail) | suffix)

    def insert(self, position, symbol):
        """Word obtained by inserting `symbol` (0 or 1) so that it lands at 1-based `position`."""
        if not 1 <= position <= self.length + 1:
            raise InvalidArgumentError(f"Cannot insert at position {position} of {self}")
        if symbol not in (0, 1):
            raise InvalidArgumentError(f"Invalid symbol {symbol!r}, expected 0 or 1")
        tail = self.length - position + 1
        prefix = self.bits >> tail
        suffix = self.bits & ((1 << tail) - 1)
        return Word(self.length + 1, (((prefix << 1) | symbol) << tail) | suffix)


def _descent_bits(w):
    """Packed descents: bit (l - i) is set iff x_i = B and x_(i+1) = A."""
    if w.length < 2:
        return 0
    inner = ((1 << w.length) - 1) ^ 1  # the last position has no successor
    return w.bits & ~(w.bits << 1) & inner


def descent_vector(w):
    """Descent vector of `w`: tuple of l - 1 bits, bit i set iff x_i > x_(i+1)."""
    descents = _descent_bits(w)
    return tuple((descents >> (w.length - i)) & 1 for i in range(1, w.length))


def moment(y):
    """Moment of a 01-sequence, sum of i * y_i over 1-based positions (an integer)."""
    return sum(i * bit for i, bit in enumerate(y, start=1))


def major_index(w):
    """Sum of the descent positions of `w`, i.e. moment(descent_vector(w))."""
    descents = _descent_bits(w)
    total = 0
    while descents:
        low = descents & -descents
        total += w.length - (low.bit_length() - 1)
        descents ^= low
    return total


def run_number(w):
    """Number of maximal blocks of equal consecutive symbols; 0 for the empty word."""
    if w.length == 0:
        return 0
    changes = (w.bits ^ (w.bits >> 1)) & ((1 << (w.length - 1)) - 1)
    return bin(changes).count("1") + 1


def single_deletions(w):
    """Deletion sphere of a single nonempty word."""
    if w.length == 0:
        raise InvalidArgumentError("The empty word has no single deletion")
    return frozenset(w.delete(p) for p in range(1, w.length + 1))


def deletion_sphere(words):
    """All words obtained by deleting exactly one symbol from a word of `words`."""
    sphere = set()
    for w in words:
        sphere.update(single_deletions(w))
    return frozenset(sphere)


def enumerate_words(length):
    """Generate all 2^length words of the given length in lexicographic order."""
    if length < 0:
        raise InvalidArgumentError(f"Negative word length {length}")
    for bits in range(1 << length):
        yield Word(length, bits)


def enumerate_constant_weight(alpha, beta):
    """Generate the words with `alpha` A's and `beta` B's in lexicographic order."""
    if alpha < 0 or beta < 0:
        raise InvalidArgumentError(f"Symbol counts must be non-negative, got ({alpha}, {beta})")
    length = alpha + beta
    full = (1 << length) - 1
    # lexicographic order of the A positions is lexicographic order of the words
    for a_positions in itertools.combinations(range(length), alpha):
        a_mask = 0
        for position in a_positions:
            a_mask |= 1 << (length - 1 - position)
        yield Word(length, full ^ a_mask)


def enumerate_code(spec):
    """Generate C_(alpha, beta, m): words of C_(alpha, beta) with major index = m mod alpha + beta.

    Args:
        spec: object with `alpha`, `beta` and `m` attributes (typically a CodeSpec)
    """
    modulus = spec.alpha + spec.beta
    if modulus < 1:
        raise InvalidArgumentError("C_(alpha, beta, m) needs alpha + beta >= 1")
    residue = spec.m % modulus
    for w in enumerate_constant_weight(spec.alpha, spec.beta):
        if major_index(w) % modulus == residue:
            yield w


def dm_distribution(words):
    """Descent moment distribution: sum of q^major_index(w) over `words`."""
    return QPoly.from_terms(Counter(major_index(w) for w in words))


def run_weighted_dm(words):
    """Sum of run_number(w) * q^major_index(w) over `words`."""
    terms = Counter()
    for w in words:
        terms[major_index(w)] += run_number(w)
    return QPoly.from_terms(terms)


def run_class_dm(alpha, beta, r):
    """Brute-force R_r(q): DM distribution of the words of C_(alpha, beta) with r runs."""
    return dm_distribution(
        w for w in enumerate_constant_weight(alpha, beta) if run_number(w) == r
    )


def weight_distribution(words):
    """Hamming weight distribution: sum of Y^weight(w) over `words` (rendered in q)."""
    return QPoly.from_terms(Counter(w.weight for w in words))
