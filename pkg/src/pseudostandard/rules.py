"""Normalization rule tables and the token-level matchers built from them.

A bi-sequence is handled in its interleaved form: one two-character token per
step, the letter followed by the antimorphism code (``"0R"``, ``"12"``, ...).

Prefix rules are written over the symbolic letters ``i, j, k``; in the
antimorphism slot ``i`` stands for E_i and ``R`` for R.  ``( ... )*`` repeats
a group n >= 0 times and ``( ... )+`` repeats it n + 1 >= 1 times.  Every rule
rewrites only the last token of its left side.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .words import Antimorphism

# (lhs, rhs); index + 1 is the rule number.
PREFIX_RULE_TEMPLATES: Tuple[Tuple[str, str], ...] = (
    ("(ii)* ik", "(ii)* ii jk"),
    ("ii (jk iR)+ ji", "ii (jk iR)+ jk ki"),
    ("ii jk (iR jk)* ij", "ii jk (iR jk)* iR kj"),
    ("ii jk kj (jR jj)* jk", "ii jk kj (jR jj)* jR kk"),
    ("ii jk kj jR (jj jR)* ji", "ii jk kj jR (jj jR)* jj ii"),
    ("ii jk (iR jk)* ii", "ii jk (iR jk)* iR ki"),
    ("ii (jk iR)* jj", "ii (jk iR)* jk kj"),
    ("(ii jk kj)* ii jk kR", "(ii jk kj)* ii jk kj jR"),
    ("(ii jk kj)* ii jR", "(ii jk kj)* ii jk iR"),
    ("(ii jk kj)+ iR", "(ii jk kj)+ ii kR"),
    ("(ii jk kj)+ jR kR", "(ii jk kj)+ jR kk kR"),
    ("(ii jk kj)+ ii kR kR", "(ii jk kj)+ ii kR kj iR"),
    ("(ii jk kj)* ii jk iR kR", "(ii jk kj)* ii jk iR ki jR"),
    ("ii (jk iR)* jk kj jj", "ii (jk iR)* jk kj jR jj"),
    ("ii jk (iR jk)* iR ki kk", "ii jk (iR jk)* iR ki kj jk"),
    ("(ii)+ jk jk", "(ii)+ jk jR ik"),
    ("ii jk (iR jk)+ ki ki", "ii jk (iR jk)+ ki kR ji"),
    ("(ii)+ jk ji", "(ii)+ jk jj ki"),
    ("ii jk (iR jk)* iR kj jk", "ii jk (iR jk)* iR kj ji kk"),
    ("ii jk kj (jR jj)* ii ki", "ii jk kj (jR jj)* ii kR ji"),
    ("ii jk kj (jR jj)* jR kk ij", "ii jk kj (jR jj)* jR kk ii kj"),
    ("(ii)+ jk ik", "(ii)+ jk iR jk"),
    ("(ii)+ ii jj jj", "(ii)+ ii jj jR jj"),
    ("(ii)+ ii ji ki", "(ii)+ ii ji kR ji"),
    ("ii ji", "ii jk kj ii"),
    ("ii jk kk", "ii jk kj ii jk"),
    ("ii (jk iR)+ ki kj jj", "ii (jk iR)+ ki kj jk ii kj"),
    ("(ii)+ jk jj kj", "(ii)+ jk jj ki ik jj"),
    ("ii (jk iR)+ kj ji ki", "ii (jk iR)+ kj ji kk ij ji"),
    ("ii jk kj (jR jj)* jR kk ii ki", "ii jk kj (jR jj)* jR kk ii kj jk ii"),
)

CANONICAL = {"i": "0", "j": "1", "k": "2"}

_ITEM = re.compile(r"\(([^)]*)\)([*+])|(\S\S)")


def _parse(template: str) -> List[Tuple[Tuple[str, ...], Optional[str]]]:
    """Items of a template: ``((token,), None)`` for a literal, ``(tokens, '*'|'+')`` for a group."""
    items = []
    for m in _ITEM.finditer(template):
        if m.group(3):
            items.append(((m.group(3),), None))
        else:
            items.append((tuple(m.group(1).split()), m.group(2)))
    return items


def _substitute(token: str, letters: Dict[str, str]) -> str:
    return "".join(letters.get(c, c) for c in token)


def expand(template: str, n: int, letters: Dict[str, str] = CANONICAL) -> List[str]:
    """Concrete token list for the exponent value ``n``."""
    out: List[str] = []
    for tokens, op in _parse(template):
        reps = 1 if op is None else (n if op == "*" else n + 1)
        out.extend(_substitute(t, letters) for t in tokens * reps)
    return out


def tokens_to_pairs(tokens: Sequence[str]) -> Tuple[str, str]:
    return "".join(t[0] for t in tokens), "".join(t[1] for t in tokens)


@dataclass(frozen=True)
class PrefixRule:
    rule_id: str
    lhs: str
    rhs: str
    # tokens replacing the last token of the left side
    replacement: Tuple[str, ...]


def _split_rhs(lhs: str, rhs: str) -> Tuple[str, ...]:
    lhs_items = _parse(lhs)
    rhs_items = _parse(rhs)
    head = lhs_items[:-1]
    if rhs_items[: len(head)] != head or lhs_items[-1][1] is not None:
        raise ValueError(f"malformed prefix rule {lhs!r} -> {rhs!r}")
    tail = rhs_items[len(head):]
    if any(op is not None for _, op in tail) or len(tail) < 2:
        raise ValueError(f"malformed prefix rule {lhs!r} -> {rhs!r}")
    if tail[0][0][0][0] != lhs_items[-1][0][0][0]:
        raise ValueError(f"prefix rule {lhs!r} changes the letter it rewrites")
    return tuple(t for tokens, _ in tail for t in tokens)


PREFIX_RULES: Tuple[PrefixRule, ...] = tuple(
    PrefixRule(f"P{idx}", lhs, rhs, _split_rhs(lhs, rhs))
    for idx, (lhs, rhs) in enumerate(PREFIX_RULE_TEMPLATES, start=1)
)


class PrefixMatcher:
    """Incremental anchored matcher for a set of prefix rules.

    A state is a frozenset of ``(rule, item, offset)`` positions; feeding tokens
    one at a time gives, after each token, the rules whose left side equals the
    whole input read so far.  Transitions are memoized, so a step is one dict
    lookup once the automaton is warm.
    """

    def __init__(self, rules: Sequence[PrefixRule], letters: Dict[str, str] = CANONICAL):
        self.rules = tuple(rules)
        self._items = []
        for rule in self.rules:
            items = []
            for tokens, op in _parse(rule.lhs):
                tokens = tuple(_substitute(t, letters) for t in tokens)
                if op == "+":
                    items.extend((t, None) for t in tokens)
                    op = "*"
                items.append((tokens, op) if op else (tokens[0], None))
            self._items.append(items)
        self.replacements = tuple(
            tuple(_substitute(t, letters) for t in rule.replacement) for rule in self.rules
        )
        self._memo: Dict[Tuple[FrozenSet, str], FrozenSet] = {}
        start = set()
        for r in range(len(self.rules)):
            self._close(r, 0, start)
        self.start: FrozenSet = frozenset(start)
        self.dead: FrozenSet = frozenset()

    def _close(self, r: int, e: int, acc: set) -> None:
        items = self._items[r]
        while e < len(items) and items[e][1] == "*":
            acc.add((r, e, 0))
            e += 1
        acc.add((r, e, -1))

    def step(self, state: FrozenSet, token: str) -> FrozenSet:
        if not state:
            return state
        key = (state, token)
        nxt = self._memo.get(key)
        if nxt is not None:
            return nxt
        acc: set = set()
        for r, e, off in state:
            items = self._items[r]
            if e == len(items):
                continue
            body, op = items[e]
            if op is None:
                if off == -1 and body == token:
                    self._close(r, e + 1, acc)
            elif off >= 0 and body[off] == token:
                if off + 1 < len(body):
                    acc.add((r, e, off + 1))
                else:
                    # end of one repetition: repeat again or move on
                    acc.add((r, e, 0))
                    self._close(r, e + 1, acc)
        nxt = frozenset(acc)
        self._memo[key] = nxt
        return nxt

    def accepted(self, state: FrozenSet) -> List[int]:
        """Indices of rules whose left side ends exactly here."""
        return sorted({r for r, e, off in state if e == len(self._items[r])})


CANONICAL_MATCHER = PrefixMatcher(PREFIX_RULES)


# --- factor rules -----------------------------------------------------------

_E = {c: Antimorphism(c) for c in "012"}


def _img(i: str, letter: str) -> str:
    return _E[i].image(letter)


def _generate_factor_rules() -> Tuple[Dict[str, Tuple[str, Tuple[str, ...]]], Dict[str, Tuple[str, Tuple[str, ...]]]]:
    """Lookup tables keyed by the interleaved window: {window: (rule_id, replacement)}.

    ``short`` holds the three-token windows of F1-F3, ``long`` the four-token
    windows of F4.
    """
    short: Dict[str, Tuple[str, Tuple[str, ...]]] = {}
    long: Dict[str, Tuple[str, Tuple[str, ...]]] = {}
    letters = "012"
    for a, i, b2 in itertools.product(letters, letters, letters):
        b1 = _img(i, b2)
        # F1: (a b1 b2, R E_i E_i) -> (a b1 b2 b1, R E_i R E_i)
        short[f"{a}R{b1}{i}{b2}{i}"] = ("F1", (f"{b2}R", f"{b1}{i}"))
        # F2: (a b1 b2, E_i R R) -> (a b1 b2 b1, E_i R E_i R)
        short[f"{a}{i}{b1}R{b2}R"] = ("F2", (f"{b2}{i}", f"{b1}R"))
    for i, j in itertools.permutations(letters, 2):
        (k,) = set(letters) - {i, j}
        for a, b1, b2 in itertools.product(letters, repeat=3):
            if _img(i, b1) != _img(j, b2):
                continue
            # F3: (a b1 b2, E_i E_j E_i) -> (a b1 b2 E_iE_j(b1), E_i E_j E_k E_i)
            short[f"{a}{i}{b1}{j}{b2}{i}"] = ("F3", (f"{b2}{k}", f"{_img(i, _img(j, b1))}{i}"))
    for i, j, k in itertools.permutations(letters, 3):
        for a, b1, b2, b3 in itertools.product(letters, repeat=4):
            if not (_img(i, b1) == _img(j, b2) == _img(k, b3)):
                continue
            # F4: (a b1 b2 b3, E_i E_j E_k E_k) -> (a b1 b2 b3 b1 b2, E_i E_j E_k E_i E_j E_k)
            long[f"{a}{i}{b1}{j}{b2}{k}{b3}{k}"] = ("F4", (f"{b3}{i}", f"{b1}{j}", f"{b2}{k}"))
    return short, long


FACTOR_RULES_SHORT, FACTOR_RULES_LONG = _generate_factor_rules()


def factor_rule_at_end(tokens: Sequence[str], end: int) -> Optional[Tuple[str, int, Tuple[str, ...]]]:
    """Factor-rule match whose window ends at ``end`` (exclusive): (rule_id, start, replacement)."""
    if end >= 4:
        hit = FACTOR_RULES_LONG.get("".join(tokens[end - 4:end]))
        if hit:
            return hit[0], end - 4, hit[1]
    if end >= 3:
        hit = FACTOR_RULES_SHORT.get("".join(tokens[end - 3:end]))
        if hit:
            return hit[0], end - 3, hit[1]
    return None


# --- binary -----------------------------------------------------------------

_BAR = {"0": "1", "1": "0", "R": "E", "E": "R"}


def binary_prefix_rule(tokens: Sequence[str]) -> Optional[Tuple[str, int, Tuple[str, ...]]]:
    """The binary prefix replacement applicable to ``tokens``: (rule_id, window_end, replacement)."""
    if not tokens:
        return None
    a = tokens[0][0]
    abar = _BAR[a]
    # (a abar, R R) -> (a abar a, R E R)
    if len(tokens) >= 2 and tokens[0] == a + "R" and tokens[1] == abar + "R":
        return "B1", 2, (abar + "E", a + "R")
    run = 0
    while run < len(tokens) and tokens[run] == a + "R":
        run += 1
    # (a^i, R^{i-1} E) -> (a^i abar, R^i E)
    if run < len(tokens) and tokens[run] == a + "E":
        return "B2", run + 1, (a + "R", abar + "E")
    # (a^i abar abar, R^i E E) -> (a^i abar abar a, R^i E R E)
    if run >= 1 and run + 2 <= len(tokens) and tokens[run] == abar + "E" and tokens[run + 1] == abar + "E":
        return "B3", run + 2, (abar + "R", a + "E")
    return None


def _binary_factor_table() -> Dict[str, Tuple[str, Tuple[str, ...]]]:
    table = {}
    for a, b, t in itertools.product("01", "01", "RE"):
        # (a b bbar, t tbar tbar) -> (a b bbar b, t tbar t tbar)
        table[f"{a}{t}{b}{_BAR[t]}{_BAR[b]}{_BAR[t]}"] = ("BF", (f"{_BAR[b]}{t}", f"{b}{_BAR[t]}"))
    return table


BINARY_FACTOR_RULES = _binary_factor_table()
