"""Command-line front end.

Exit codes: 0 success (or normalized), 1 semantic failure or mismatch,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .binary import normalize_binary
from .generation import DirectiveBiSeq, generate_word, iter_prefixes
from .naive import OracleError, is_normalized, naive_normalize
from .normalizer import NormalizationError, NormalizationOutcome, normalize
from .words import BINARY, TERNARY, InvalidInputError

ALPHABETS = {"ternary": TERNARY, "binary": BINARY}
THETA_LETTERS = {"ternary": "R012", "binary": "RE"}


class UsageError(Exception):
    pass


def _bs(delta: Optional[str], theta: Optional[str], alphabet: str) -> DirectiveBiSeq:
    if delta is None or theta is None:
        raise UsageError("both --delta and --theta are required")
    try:
        return DirectiveBiSeq(delta, theta, ALPHABETS[alphabet])
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None


def _normalize(bs: DirectiveBiSeq) -> NormalizationOutcome:
    return normalize_binary(bs) if bs.alphabet is BINARY else normalize(bs)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _record(out: NormalizationOutcome) -> dict:
    return {
        "delta": out.normalized.delta,
        "theta": out.normalized.theta_str,
        "notchanged": out.notchanged,
        "trace": [{"rule": m.rule_id, "position": m.position} for m in out.trace],
    }


def cmd_normalize(args) -> int:
    out = _normalize(_bs(args.delta, args.theta, args.alphabet))
    if args.json:
        print(json.dumps(_record(out)))
        return 0
    print(f"delta={out.normalized.delta} theta={out.normalized.theta_str} notchanged={_flag(out.notchanged)}")
    if args.trace:
        for m in out.trace:
            print(f"{m.rule_id} at {m.position}")
    return 0


def cmd_generate(args) -> int:
    bs = _bs(args.delta, args.theta, args.alphabet)
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be non-negative")
    if args.prefixes:
        prefixes = list(iter_prefixes(bs, args.limit))
        if args.json:
            print(json.dumps({"prefixes": prefixes}))
        else:
            for w in prefixes:
                print(w)
        return 0
    word = generate_word(bs, args.limit)
    if args.json:
        print(json.dumps({"word": word}))
    elif word:
        print(word)
    return 0


def cmd_check(args) -> int:
    ok = is_normalized(_bs(args.delta, args.theta, args.alphabet))
    if args.json:
        print(json.dumps({"normalized": ok}))
    else:
        print("normalized" if ok else "not normalized")
    return 0 if ok else 1


def _compare(bs: DirectiveBiSeq) -> list:
    """Problems found on one case; empty when the rule engine agrees with the oracle."""
    problems = []
    try:
        got = _normalize(bs).normalized
    except NormalizationError as exc:
        return [f"normalize failed: {exc}"]
    want = naive_normalize(bs)
    if got != want:
        problems.append(f"normalize gives {got}, oracle gives {want}")
    if generate_word(got) != generate_word(bs):
        problems.append("generated word changed")
    if _normalize(got).normalized != got:
        problems.append("not idempotent")
    if not is_normalized(got):
        problems.append("result is not normalized")
    return problems


def cmd_compare(args) -> int:
    bs = _bs(args.delta, args.theta, args.alphabet)
    problems = _compare(bs)
    if args.json:
        print(json.dumps({"input": str(bs), "agree": not problems, "problems": problems}))
    else:
        print("agree" if not problems else "\n".join(problems))
    return 0 if not problems else 1


def random_biseq(rng: random.Random, max_len: int, alphabet: str) -> DirectiveBiSeq:
    n = rng.randint(1, max_len)
    letters = ALPHABETS[alphabet].letters
    delta = "".join(rng.choice(letters) for _ in range(n))
    theta = "".join(rng.choice(THETA_LETTERS[alphabet]) for _ in range(n))
    return DirectiveBiSeq(delta, theta, ALPHABETS[alphabet])


def cmd_fuzz(args) -> int:
    if args.count < 1 or args.max_len < 1:
        raise UsageError("--count and --max-len must be at least 1")
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        bs = random_biseq(rng, args.max_len, args.alphabet)
        problems = _compare(bs)
        if problems:
            bad += 1
            print(f"mismatch on {bs.delta} {bs.theta_str}: {'; '.join(problems)}")
    print(f"{args.count - bad}/{args.count} agree")
    return 0 if bad == 0 else 1


def cmd_batch(args) -> int:
    if args.input is None:
        raise UsageError("--input is required")
    try:
        fh = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    errors = 0
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            try:
                fields = line.split("\t")
                if len(fields) != 2:
                    raise UsageError(f"expected 'delta<TAB>theta', got {len(fields)} field(s)")
                out = _normalize(_bs(fields[0], fields[1], args.alphabet))
            except (UsageError, NormalizationError) as exc:
                errors += 1
                if args.json:
                    print(json.dumps({"line": lineno, "error": str(exc)}))
                else:
                    print(f"error\tline {lineno}: {exc}")
                continue
            if args.json:
                rec = _record(out)
                rec["line"] = lineno
                print(json.dumps(rec))
            else:
                print(f"{out.normalized.delta}\t{out.normalized.theta_str}\t{_flag(out.notchanged)}")
    return 1 if errors else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudostandard", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, case=True):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--alphabet", choices=sorted(ALPHABETS), default="ternary")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if case:
            p.add_argument("--delta", help="letters, e.g. 01021")
            p.add_argument("--theta", help="antimorphism codes, e.g. R1121 (R, 0, 1, 2 or R, E)")
        return p

    p = add("normalize", cmd_normalize, "print the normalized bi-sequence")
    p.add_argument("--trace", action="store_true", help="list the applied rules")
    p = add("generate", cmd_generate, "print the generated word")
    p.add_argument("--prefixes", action="store_true", help="print every w_n")
    p.add_argument("--limit", type=int, help="stop once |w_n| >= LIMIT")
    add("check", cmd_check, "exit 0 iff the bi-sequence is normalized")
    add("compare", cmd_compare, "compare the rule engine with the brute-force oracle")
    p = add("fuzz", cmd_fuzz, "compare on random bi-sequences", case=False)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p = add("batch", cmd_batch, "normalize 'delta<TAB>theta' lines from a file", case=False)
    p.add_argument("--input", help="path, or - for stdin")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (NormalizationError, OracleError) as exc:
        print(f"{parser.prog} {args.command}: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
