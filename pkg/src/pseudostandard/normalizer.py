"""Normalization of ternary directive bi-sequences by prefix and factor rules.

The pipeline is: relabel letters so that the generated word shows 0, 1, 2 in
this order, rewrite the unary prefix (i^l, *) to (i^l, E_i^l), then repeatedly
apply the rule matching the shortest prefix until none applies, and finally
undo the relabelling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .generation import DirectiveBiSeq
from .rules import CANONICAL_MATCHER, PrefixMatcher, factor_rule_at_end, tokens_to_pairs
from .words import TERNARY, Antimorphism, InvalidInputError


class NormalizationError(RuntimeError):
    """Internal consistency failure: stale match, guard overflow or rule clash."""


@dataclass(frozen=True)
class RuleMatch:
    """A rule instance found in a bi-sequence.

    ``window`` holds the matched tokens ``position .. end-1``; the last of them is
    replaced by ``replacement``.
    """

    rule_id: str
    position: int
    end: int
    window: Tuple[str, ...]
    replacement: Tuple[str, ...]


@dataclass(frozen=True)
class NormalizationOutcome:
    normalized: DirectiveBiSeq
    notchanged: bool
    trace: Tuple[RuleMatch, ...] = field(default=())


@dataclass(frozen=True)
class LetterSubstitution:
    """A permutation of the letters, acting on Delta and on the E_i subscripts."""

    mapping: Tuple[Tuple[str, str], ...] = (("0", "0"), ("1", "1"), ("2", "2"))

    @classmethod
    def swap(cls, a: str, b: str) -> "LetterSubstitution":
        m = {"0": "0", "1": "1", "2": "2"}
        m[a], m[b] = b, a
        return cls(tuple(sorted(m.items())))

    @property
    def table(self) -> Dict[str, str]:
        return dict(self.mapping)

    @property
    def is_identity(self) -> bool:
        return all(a == b for a, b in self.mapping)

    def then(self, other: "LetterSubstitution") -> "LetterSubstitution":
        """Apply ``self`` first, then ``other``."""
        o = other.table
        return LetterSubstitution(tuple((a, o[b]) for a, b in self.mapping))

    def inverse(self) -> "LetterSubstitution":
        return LetterSubstitution(tuple(sorted((b, a) for a, b in self.mapping)))

    def apply_tokens(self, tokens: Sequence[str]) -> Tuple[str, ...]:
        tr = str.maketrans(self.table)
        return tuple(t.translate(tr) for t in tokens)

    def __call__(self, bs: DirectiveBiSeq) -> DirectiveBiSeq:
        tr = str.maketrans(self.table)
        return DirectiveBiSeq(bs.delta.translate(tr), bs.theta_str.translate(tr), bs.alphabet)


IDENTITY = LetterSubstitution()


def _tokens(bs: DirectiveBiSeq) -> List[str]:
    return [d + t for d, t in zip(bs.delta, bs.theta_str)]


def _from_tokens(tokens: Sequence[str], alphabet=TERNARY) -> DirectiveBiSeq:
    delta, theta = tokens_to_pairs(tokens)
    return DirectiveBiSeq(delta, theta, alphabet)


def _unary_prefix_length(delta: str, theta: str) -> int:
    if not delta:
        return 0
    i = delta[0]
    n = 0
    while n < len(delta) and delta[n] == i and theta[n] in ("R", i):
        n += 1
    return n


def _require_ternary(bs: DirectiveBiSeq) -> None:
    if bs.alphabet is not TERNARY:
        raise InvalidInputError(f"expected a ternary bi-sequence, got {bs.alphabet.name}")


def preprocess_unary_prefix(bs: DirectiveBiSeq) -> DirectiveBiSeq:
    """Rewrite the longest prefix (i^l, {R, E_i}^l) to (i^l, E_i^l)."""
    _require_ternary(bs)
    theta = bs.theta_str
    n = _unary_prefix_length(bs.delta, theta)
    if n == 0:
        return bs
    return DirectiveBiSeq(bs.delta, bs.delta[0] * n + theta[n:])


def reorder_letters(bs: DirectiveBiSeq) -> Tuple[DirectiveBiSeq, LetterSubstitution]:
    """Relabel so that the generated word shows 0, then 1, then 2 first.

    Decided from the directive bi-sequence alone: the first letter is moved to 0;
    after the unary prefix (0^l, {R, E_0}^l) the next step (d, t) decides whether
    1 and 2 must be exchanged (d = 2, or d = 0 with t = E_1).
    """
    _require_ternary(bs)
    if not bs.delta:
        return bs, IDENTITY
    sub = IDENTITY
    if bs.delta[0] != "0":
        sub = LetterSubstitution.swap("0", bs.delta[0])
    relabelled = sub(bs)
    theta = relabelled.theta_str
    n = _unary_prefix_length(relabelled.delta, theta)
    if n < len(relabelled):
        d, t = relabelled.delta[n], theta[n]
        if d == "2" or (d == "0" and t == "1"):
            second = LetterSubstitution.swap("1", "2")
            sub = sub.then(second)
            relabelled = second(relabelled)
    return relabelled, sub


def _prefix_hit(matcher: PrefixMatcher, state) -> List[int]:
    return matcher.accepted(state) if state else []


def find_applicable_rule(
    bs: DirectiveBiSeq, matcher: PrefixMatcher = CANONICAL_MATCHER
) -> Optional[RuleMatch]:
    """The next rule to apply: the match on the shortest prefix of ``bs``.

    ``bs`` must already be preprocessed.  Prefix rules win over factor rules
    ending at the same place.
    """
    tokens = _tokens(bs)
    state = matcher.start
    for end in range(1, len(tokens) + 1):
        state = matcher.step(state, tokens[end - 1])
        hits = _prefix_hit(matcher, state)
        if hits:
            r = hits[0]
            return RuleMatch(matcher.rules[r].rule_id, 0, end, tuple(tokens[:end]), matcher.replacements[r])
        f = factor_rule_at_end(tokens, end)
        if f:
            rule_id, start, repl = f
            return RuleMatch(rule_id, start, end, tuple(tokens[start:end]), repl)
    return None


def apply_rule(bs: DirectiveBiSeq, m: RuleMatch) -> DirectiveBiSeq:
    tokens = _tokens(bs)
    if tuple(tokens[m.position:m.end]) != m.window:
        raise NormalizationError(f"stale match {m.rule_id} at {m.position}: window no longer present")
    tokens[m.end - 1:m.end] = m.replacement
    return _from_tokens(tokens, bs.alphabet)


def _guard(n: int) -> int:
    return 3 * n + 8


def rewrite(
    tokens: Sequence[str],
    matcher: Optional[PrefixMatcher] = CANONICAL_MATCHER,
    factor_lookup=factor_rule_at_end,
    check_exclusion: bool = False,
    guard: Optional[int] = None,
) -> Tuple[List[str], List[RuleMatch]]:
    """Streaming rewrite: read tokens left to right, fix each one as soon as a rule ends on it.

    Equivalent to iterating :func:`find_applicable_rule`/:func:`apply_rule`:
    every rule replaces the last token of its window, so everything before
    the current token is final once read.
    """
    pending = list(reversed(tokens))
    out: List[str] = []
    states = [matcher.start] if matcher else None
    trace: List[RuleMatch] = []
    limit = _guard(len(tokens)) if guard is None else guard
    while pending:
        tok = pending.pop()
        out.append(tok)
        end = len(out)
        hits: List[int] = []
        if matcher is not None:
            state = matcher.step(states[-1], tok)
            states.append(state)
            hits = _prefix_hit(matcher, state)
        f = factor_lookup(out, end) if (check_exclusion or not hits) else None
        if check_exclusion and (len(hits) > 1 or (hits and f)):
            names = [matcher.rules[r].rule_id for r in hits] + ([f[0]] if f else [])
            raise NormalizationError(f"rules {names} apply simultaneously at {end}")
        if hits:
            r = hits[0]
            m = RuleMatch(matcher.rules[r].rule_id, 0, end, tuple(out), matcher.replacements[r])
        elif f:
            m = RuleMatch(f[0], f[1], end, tuple(out[f[1]:]), f[2])
        else:
            continue
        trace.append(m)
        if len(trace) > limit:
            raise NormalizationError(f"iteration guard exceeded ({limit} rule applications)")
        out.pop()
        if states is not None:
            states.pop()
        pending.extend(reversed(m.replacement))
    return out, trace


def normalize(bs: DirectiveBiSeq, check_exclusion: bool = False) -> NormalizationOutcome:
    """Normalized form of a ternary directive bi-sequence.

    With ``check_exclusion`` every step asserts that at most one prefix rule
    and no factor rule alongside it matches (raises :class:`NormalizationError`).
    """
    _require_ternary(bs)
    if not bs.delta:
        return NormalizationOutcome(bs, True, ())
    relabelled, sub = reorder_letters(bs)
    pre = preprocess_unary_prefix(relabelled)
    out, trace = rewrite(_tokens(pre), check_exclusion=check_exclusion, guard=_guard(len(bs)))
    inv = sub.inverse()
    normalized = inv(_from_tokens(out))
    if not sub.is_identity:
        trace = [
            RuleMatch(m.rule_id, m.position, m.end, inv.apply_tokens(m.window), inv.apply_tokens(m.replacement))
            for m in trace
        ]
    notchanged = not trace and pre.theta_str == relabelled.theta_str
    return NormalizationOutcome(normalized, notchanged, tuple(trace))
