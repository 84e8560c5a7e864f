"""Does the result depend on always rewriting at the shortest prefix?

Applies applicable rules in a random order (any prefix rule or any factor-rule
occurrence, not only the earliest one) until none applies, and compares with
normalize.  Reported as a measurement; nothing is asserted.
"""

import argparse
import random

from pseudostandard import DirectiveBiSeq, normalize, preprocess_unary_prefix, reorder_letters
from pseudostandard.normalizer import _from_tokens, _tokens
from pseudostandard.rules import CANONICAL_MATCHER, factor_rule_at_end


def all_matches(tokens):
    found = []
    state = CANONICAL_MATCHER.start
    for end in range(1, len(tokens) + 1):
        state = CANONICAL_MATCHER.step(state, tokens[end - 1])
        for r in CANONICAL_MATCHER.accepted(state):
            found.append((end, CANONICAL_MATCHER.replacements[r]))
        f = factor_rule_at_end(tokens, end)
        if f:
            found.append((end, f[2]))
    return found


def random_order(bs, rng, guard):
    relabelled, sub = reorder_letters(bs)
    tokens = _tokens(preprocess_unary_prefix(relabelled))
    for _ in range(guard):
        matches = all_matches(tokens)
        if not matches:
            return sub.inverse()(_from_tokens(tokens))
        end, repl = rng.choice(matches)
        tokens[end - 1:end] = repl
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=5000)
    ap.add_argument("--max-len", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    same = differ = stuck = 0
    for _ in range(args.count):
        n = rng.randint(1, args.max_len)
        bs = DirectiveBiSeq("".join(rng.choice("012") for _ in range(n)), "".join(rng.choice("R012") for _ in range(n)))
        got = random_order(bs, rng, 3 * n + 8)
        if got is None:
            stuck += 1
        elif got == normalize(bs).normalized:
            same += 1
        else:
            differ += 1
            if differ <= 5:
                print(f"differs: {bs} -> {got} vs {normalize(bs).normalized}")
    print(f"same={same} differ={differ} guard_exceeded={stuck}")


if __name__ == "__main__":
    main()
