"""Normalization of binary directive bi-sequences over {0, 1} x {R, E}.

Prefix replacements are applied first, until none applies (a B2 result can
expose a B3 prefix, never more); then every factor
(a b bbar, t tbar tbar) is rewritten to (a b bbar b, t tbar t tbar), scanning left
to right and rescanning from each modification.
"""

from __future__ import annotations

from .generation import DirectiveBiSeq
from .normalizer import NormalizationError, NormalizationOutcome, RuleMatch, _tokens, _from_tokens, _guard, rewrite
from .rules import BINARY_FACTOR_RULES, binary_prefix_rule
from .words import BINARY, InvalidInputError


def _binary_factor_at_end(tokens, end):
    if end < 3:
        return None
    hit = BINARY_FACTOR_RULES.get("".join(tokens[end - 3:end]))
    if hit:
        return hit[0], end - 3, hit[1]
    return None


def normalize_binary(bs: DirectiveBiSeq) -> NormalizationOutcome:
    if bs.alphabet is not BINARY:
        raise InvalidInputError(f"expected a binary bi-sequence, got {bs.alphabet.name}")
    tokens = _tokens(bs)
    trace = []
    for _ in range(3):
        hit = binary_prefix_rule(tokens)
        if not hit:
            break
        rule_id, end, repl = hit
        trace.append(RuleMatch(rule_id, 0, end, tuple(tokens[:end]), repl))
        tokens[end - 1:end] = repl
    else:
        raise NormalizationError("binary prefix replacements do not terminate")
    out, factor_trace = rewrite(tokens, matcher=None, factor_lookup=_binary_factor_at_end, guard=_guard(len(bs)))
    trace.extend(factor_trace)
    return NormalizationOutcome(_from_tokens(out, BINARY), not trace, tuple(trace))
