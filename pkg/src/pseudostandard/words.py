"""Letters, involutory antimorphisms, pseudopalindromes and palindromic closure.

Words are plain ``str`` objects over ``"012"`` (ternary) or ``"01"`` (binary).
An antimorphism reverses a word and maps every letter through its image table.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Tuple

import numpy as np


class InvalidInputError(ValueError):
    """Raised on symbols outside the active alphabet or malformed bi-sequences."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class Antimorphism(str, Enum):
    """The involutory antimorphisms. Values double as the textual encoding."""

    R = "R"
    E0 = "0"
    E1 = "1"
    E2 = "2"
    # binary exchange antimorphism, kept distinct from the ternary E_i
    E = "E"

    @classmethod
    def _missing_(cls, value):
        # accept member names ("E0") as well as encodings ("0")
        if isinstance(value, str) and value in cls.__members__:
            return cls.__members__[value]
        return None

    def __repr__(self) -> str:
        return self.name

    __str__ = __repr__

    @property
    def letter_map(self) -> dict:
        return _LETTER_MAPS[self]

    @property
    def fixed_letter(self) -> str | None:
        """The letter fixed by E_i, ``None`` for R and E."""
        return self.value if self in (Antimorphism.E0, Antimorphism.E1, Antimorphism.E2) else None

    def image(self, letter: str) -> str:
        return _LETTER_MAPS[self][letter]

    def __call__(self, w: str) -> str:
        return apply_antimorphism(self, w)

    @classmethod
    def exchange(cls, letter: str) -> "Antimorphism":
        """E_i for the letter i."""
        return cls(letter)


_LETTER_MAPS = {
    Antimorphism.R: {"0": "0", "1": "1", "2": "2"},
    Antimorphism.E0: {"0": "0", "1": "2", "2": "1"},
    Antimorphism.E1: {"0": "2", "1": "1", "2": "0"},
    Antimorphism.E2: {"0": "1", "1": "0", "2": "2"},
    Antimorphism.E: {"0": "1", "1": "0"},
}
_TABLES = {a: str.maketrans(m) for a, m in _LETTER_MAPS.items()}


@dataclass(frozen=True)
class Alphabet:
    name: str
    letters: str
    antimorphisms: Tuple[Antimorphism, ...]

    def check_word(self, w: str, what: str = "word") -> None:
        for pos, c in enumerate(w):
            if c not in self.letters:
                raise InvalidInputError(
                    f"invalid letter {c!r} in {what} at position {pos} "
                    f"({self.name} alphabet is {self.letters!r})",
                    pos,
                )

    def check_antimorphism(self, theta: Antimorphism, pos: int | None = None) -> None:
        if theta not in self.antimorphisms:
            where = "" if pos is None else f" at position {pos}"
            raise InvalidInputError(
                f"antimorphism {theta.name}{where} is not available over the {self.name} alphabet", pos
            )


TERNARY = Alphabet("ternary", "012", (Antimorphism.R, Antimorphism.E0, Antimorphism.E1, Antimorphism.E2))
BINARY = Alphabet("binary", "01", (Antimorphism.R, Antimorphism.E))


def alphabet_of(theta: Antimorphism) -> Alphabet:
    return BINARY if theta is Antimorphism.E else TERNARY


def _apply(theta: Antimorphism, w: str) -> str:
    # unchecked
    return w[::-1].translate(_TABLES[theta])


def apply_antimorphism(theta: Antimorphism, w: str) -> str:
    """theta(w): the reversal of ``w`` with every letter replaced by its image."""
    theta = Antimorphism(theta)
    alphabet_of(theta).check_word(w)
    return _apply(theta, w)


def is_theta_palindrome(w: str, theta: Antimorphism) -> bool:
    theta = Antimorphism(theta)
    alphabet_of(theta).check_word(w)
    return _apply(theta, w) == w


def pseudopalindrome_types(w: str, alphabet: Alphabet = TERNARY) -> FrozenSet[Antimorphism]:
    """All antimorphisms of ``alphabet`` fixing ``w``; empty iff ``w`` is not a pseudopalindrome."""
    alphabet.check_word(w)
    return frozenset(a for a in alphabet.antimorphisms if _apply(a, w) == w)


# Polynomial hashing is used only as a filter; every hit is confirmed by exact comparison.
_MOD = 2_147_483_647
_BASE = 911_382_323
_pow_cache = np.ones(1, dtype=np.int64)
_SMALL = 96


def _powers(n: int) -> np.ndarray:
    global _pow_cache
    while len(_pow_cache) < n:
        m = len(_pow_cache)
        step = pow(_BASE, m, _MOD)
        _pow_cache = np.concatenate([_pow_cache, _pow_cache * step % _MOD])
    return _pow_cache[:n]


def _codes(w: str) -> np.ndarray:
    return np.frombuffer(w.encode("ascii"), dtype=np.uint8).astype(np.int64) - 47


def _weighted_prefix_sums(w: str) -> np.ndarray:
    """C[L] = sum_{m<L} code(w[m]) * BASE^m  (mod p), with C[0] = 0."""
    out = np.zeros(len(w) + 1, dtype=np.int64)
    out[1:] = np.cumsum(_codes(w) * _powers(len(w)) % _MOD) % _MOD
    return out


def _longest_suffix_equal_to_prefix(u: str, t: str) -> int:
    """Largest L <= len(u) with u[-L:] == t[:L] (``len(t) == len(u)``)."""
    m = len(u)
    if u == t:
        return m
    if m <= _SMALL:
        for length in range(m, 0, -1):
            if u.endswith(t[:length]):
                return length
        return 0
    cu = _weighted_prefix_sums(u)
    ct = _weighted_prefix_sums(t)
    pw = _powers(m + 1)
    lengths = np.arange(1, m + 1)
    lhs = (cu[m] - cu[m - lengths]) % _MOD
    rhs = ct[lengths] * pw[m - lengths] % _MOD
    for length in np.flatnonzero(lhs == rhs)[::-1] + 1:
        length = int(length)
        if u.endswith(t[:length]):
            return length
    return 0


def longest_theta_pal_suffix(w: str, theta: Antimorphism) -> str:
    """The longest suffix ``p`` of ``w`` with ``p == theta(p)`` (possibly empty, possibly ``w``)."""
    theta = Antimorphism(theta)
    alphabet_of(theta).check_word(w)
    length = _longest_suffix_equal_to_prefix(w, _apply(theta, w))
    return w[len(w) - length:]


def _closure(w: str, theta: Antimorphism) -> str:
    # unchecked
    length = _longest_suffix_equal_to_prefix(w, _apply(theta, w))
    v = w[: len(w) - length]
    return w + _apply(theta, v)


def palindromic_closure(w: str, theta: Antimorphism) -> str:
    """Shortest theta-palindrome having ``w`` as a prefix: ``v p theta(v)`` for ``w = v p``."""
    theta = Antimorphism(theta)
    alphabet_of(theta).check_word(w)
    return _closure(w, theta)


def _theta_pal_prefix_lengths(w: str, theta: Antimorphism) -> list:
    """Lengths L >= 1 such that w[:L] is a theta-palindrome, increasing."""
    n = len(w)
    t = _apply(theta, w)
    # w[:L] is a theta-palindrome iff w[:L] == t[n-L:]
    if n <= _SMALL:
        return [length for length in range(1, n + 1) if t.endswith(w[:length])]
    cw = _weighted_prefix_sums(w)
    ct = _weighted_prefix_sums(t)
    pw = _powers(n + 1)
    lengths = np.arange(1, n + 1)
    lhs = cw[lengths] * pw[n - lengths] % _MOD
    rhs = (ct[n] - ct[n - lengths]) % _MOD
    return [int(length) for length in np.flatnonzero(lhs == rhs) + 1 if t.endswith(w[: int(length)])]
