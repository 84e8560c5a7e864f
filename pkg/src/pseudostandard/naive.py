"""Brute-force normalization: generate the word, list its pseudopalindromic prefixes,
and read the normalized bi-sequence off them.  Never consults the rule tables."""

from __future__ import annotations

from typing import List

from .generation import DirectiveBiSeq, build_prefixes, generate_word, prefix_lengths, pseudopalindromic_prefixes
from .words import TERNARY, Antimorphism, _closure


class OracleError(RuntimeError):
    pass


def _choose_type(word: str, prev: int, length: int, types, alphabet) -> Antimorphism:
    p = word[:length]
    if len(types) > 1:
        letters = set(p)
        # only unary words have two types; by convention i^l is directed by E_i
        if len(letters) != 1 or alphabet is not TERNARY:
            raise OracleError(f"prefix {p!r} has types {sorted(types)} but is not unary")
        return Antimorphism.exchange(p[0])
    (theta,) = types
    if _closure(word[: prev + 1], theta) != p:
        raise OracleError(f"closure of {word[:prev + 1]!r} under {theta} is not {p!r}")
    return theta


def naive_normalize(bs: DirectiveBiSeq) -> DirectiveBiSeq:
    alphabet = bs.alphabet
    word = generate_word(bs)
    records = pseudopalindromic_prefixes(word, alphabet)
    delta: List[str] = []
    theta: List[Antimorphism] = []
    prev = 0
    for rec in records:
        delta.append(word[prev])
        theta.append(_choose_type(word, prev, rec.length, rec.types, alphabet))
        prev = rec.length
    if word and prev != len(word):
        raise OracleError("generated word is not a pseudopalindrome")
    out = DirectiveBiSeq("".join(delta), tuple(theta), alphabet)
    if prefix_lengths(out) != [rec.length for rec in records] or generate_word(out) != word:
        raise OracleError(f"reconstruction of {bs} does not reproduce its pseudopalindromic prefixes")
    return out


def _unary_convention_holds(bs: DirectiveBiSeq, prefixes: List[str]) -> bool:
    """Every step producing a unary word i^l is directed by E_i (ternary only)."""
    if bs.alphabet is not TERNARY:
        return True
    for w, t in zip(prefixes, bs.theta):
        if w.count(w[0]) != len(w):
            break
        if t is not Antimorphism.exchange(w[0]):
            return False
    return True


def is_normalized(bs: DirectiveBiSeq) -> bool:
    """All nonempty pseudopalindromic prefixes of the generated word occur among
    the w_n, and unary prefixes i^l are directed by E_i."""
    prefixes = build_prefixes(bs)
    word = prefixes[-1] if prefixes else ""
    pal = [rec.length for rec in pseudopalindromic_prefixes(word, bs.alphabet)]
    return [len(w) for w in prefixes] == pal and _unary_convention_holds(bs, prefixes)


def missed_prefix_counts(bs: DirectiveBiSeq) -> List[int]:
    """For each step n, the number of pseudopalindromic prefixes strictly between w_{n-1} and w_n."""
    prefixes = build_prefixes(bs)
    word = prefixes[-1] if prefixes else ""
    pal = [rec.length for rec in pseudopalindromic_prefixes(word, bs.alphabet)]
    counts, idx, prev = [], 0, 0
    for w in prefixes:
        c = 0
        while pal[idx] < len(w):
            if pal[idx] > prev:
                c += 1
            idx += 1
        counts.append(c)
        prev = len(w)
    return counts
