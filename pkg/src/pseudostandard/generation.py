"""Directive bi-sequences, the prefix sequence (w_n) and pseudopalindromic prefixes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from .words import (
    TERNARY,
    Alphabet,
    Antimorphism,
    InvalidInputError,
    _closure,
    _theta_pal_prefix_lengths,
)

ThetaLike = Union[str, Sequence[Union[str, Antimorphism]]]


@dataclass(frozen=True)
class DirectiveBiSeq:
    """A finite directive bi-sequence (delta, theta) over an alphabet.

    ``theta`` may be given as a string in the textual encoding ("R012" or "RE")
    or as a sequence of :class:`Antimorphism`; it is stored as a tuple.
    """

    delta: str
    theta: Tuple[Antimorphism, ...]
    alphabet: Alphabet = TERNARY

    def __post_init__(self):
        theta = self.theta
        if isinstance(theta, str):
            theta = tuple(theta)
        coerced = []
        for pos, t in enumerate(theta):
            try:
                a = Antimorphism(t)
            except ValueError:
                raise InvalidInputError(f"invalid antimorphism {t!r} in theta at position {pos}", pos) from None
            self.alphabet.check_antimorphism(a, pos)
            coerced.append(a)
        object.__setattr__(self, "theta", tuple(coerced))
        if not isinstance(self.delta, str):
            object.__setattr__(self, "delta", "".join(self.delta))
        self.alphabet.check_word(self.delta, "delta")
        if len(self.delta) != len(self.theta):
            raise InvalidInputError(
                f"delta and theta differ in length ({len(self.delta)} != {len(self.theta)})",
                min(len(self.delta), len(self.theta)),
            )

    @classmethod
    def parse(cls, delta: str, theta: ThetaLike, alphabet: Alphabet = TERNARY) -> "DirectiveBiSeq":
        return cls(delta, theta, alphabet)

    @property
    def theta_str(self) -> str:
        return "".join(t.value for t in self.theta)

    def __len__(self) -> int:
        return len(self.delta)

    def __iter__(self) -> Iterator[Tuple[str, Antimorphism]]:
        return zip(self.delta, self.theta)

    def prefix(self, n: int) -> "DirectiveBiSeq":
        return DirectiveBiSeq(self.delta[:n], self.theta[:n], self.alphabet)

    def is_prefix_of(self, other: "DirectiveBiSeq") -> bool:
        n = len(self)
        return other.delta[:n] == self.delta and other.theta[:n] == self.theta

    def __str__(self) -> str:
        return f"({self.delta}, {self.theta_str})"


@dataclass(frozen=True)
class PalPrefixRecord:
    length: int
    types: FrozenSet[Antimorphism]


def iter_prefixes(bs: DirectiveBiSeq, limit: Optional[int] = None) -> Iterator[str]:
    """Yield w_1, w_2, ...; stop after the first w_n with ``len(w_n) >= limit``."""
    w = ""
    for delta, theta in bs:
        w = _closure(w + delta, theta)
        yield w
        if limit is not None and len(w) >= limit:
            return


def build_prefixes(bs: DirectiveBiSeq) -> List[str]:
    """[w_1, ..., w_N] with w_0 = empty and w_{n+1} = (w_n delta_{n+1})^{theta_{n+1}}."""
    return list(iter_prefixes(bs))


def generate_word(bs: DirectiveBiSeq, limit: Optional[int] = None) -> str:
    w = ""
    for w in iter_prefixes(bs, limit):
        pass
    return w


def prefix_lengths(bs: DirectiveBiSeq) -> List[int]:
    return [len(w) for w in iter_prefixes(bs)]


def pseudopalindromic_prefixes(w: str, alphabet: Alphabet = TERNARY) -> List[PalPrefixRecord]:
    """Every nonempty pseudopalindromic prefix of ``w`` with its type set, by increasing length."""
    alphabet.check_word(w)
    found: dict = {}
    for theta in alphabet.antimorphisms:
        for length in _theta_pal_prefix_lengths(w, theta):
            found.setdefault(length, set()).add(theta)
    return [PalPrefixRecord(length, frozenset(found[length])) for length in sorted(found)]
