"""Check every prefix rule template against the brute-force normalizer.

For each rule and exponent n, the concrete left side must normalize to the
concrete right side, and the left side without its last step must already be
normalized.  Extra candidate right sides can be passed to compare variants.
"""

from __future__ import annotations

import argparse

from pseudostandard.generation import DirectiveBiSeq
from pseudostandard.naive import is_normalized, naive_normalize
from pseudostandard.rules import PREFIX_RULE_TEMPLATES, expand, tokens_to_pairs

VARIANTS = {
    27: ["ii (jk iR)+ ki kj jk ii kj"],
    28: ["(ii)+ jk jj ki ik jj", "(ii)+ jk jj ki ik kj"],
    30: [
        "ii jk kj (jR jj)* jR kk ii kj jk ii",
        "ii jk kj (jR jj)* jR kk ii kj ii",
        "ii jk kj (jR jj)* jR kk ii kj jR ii",
    ],
}


def _bs(template: str, n: int) -> DirectiveBiSeq:
    delta, theta = tokens_to_pairs([t for t in expand(template, n) if len(t) == 2])
    return DirectiveBiSeq(delta, theta)


def check(idx: int, lhs: str, rhs: str, nmax: int) -> list:
    failures = []
    for n in range(nmax + 1):
        left = _bs(lhs, n)
        got = naive_normalize(left)
        want = _bs(rhs, n)
        if got != want:
            failures.append(f"P{idx} n={n}: {left} -> {got}, template says {want}")
        if not is_normalized(left.prefix(len(left) - 1)):
            failures.append(f"P{idx} n={n}: left side minus last step is not normalized")
    return failures


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=3)
    args = ap.parse_args()
    bad = 0
    for idx, (lhs, rhs) in enumerate(PREFIX_RULE_TEMPLATES, start=1):
        fails = check(idx, lhs, rhs, args.nmax)
        bad += bool(fails)
        print(f"P{idx:<3} {'ok' if not fails else 'FAIL'}")
        for f in fails:
            print("    " + f)
    for idx, rhss in VARIANTS.items():
        lhs = PREFIX_RULE_TEMPLATES[idx - 1][0]
        for rhs in rhss:
            try:
                fails = check(idx, lhs, rhs, args.nmax)
            except Exception as exc:  # malformed variants
                fails = [repr(exc)]
            print(f"variant P{idx} {rhs!r}: {'ok' if not fails else 'rejected'}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
