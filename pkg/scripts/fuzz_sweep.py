"""Compare the rule engine with the brute-force oracle over several seeds and lengths.

Also reports how often each rule fires and the largest number of missed
pseudopalindromic prefixes seen in a single step.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from pseudostandard import DirectiveBiSeq, missed_prefix_counts, naive_normalize, normalize


@dataclass(frozen=True)
class SweepConfig:
    seeds: tuple = (0, 1, 2)
    max_lens: tuple = (6, 12, 18)
    count: int = 2000


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    cfg = SweepConfig(count=ap.parse_args().count)
    fired = Counter()
    worst = 0
    bad = 0
    for seed in cfg.seeds:
        for max_len in cfg.max_lens:
            rng = random.Random(f"{seed}:{max_len}")
            for _ in range(cfg.count):
                n = rng.randint(1, max_len)
                bs = DirectiveBiSeq(
                    "".join(rng.choice("012") for _ in range(n)), "".join(rng.choice("R012") for _ in range(n))
                )
                out = normalize(bs, check_exclusion=True)
                fired.update(m.rule_id for m in out.trace)
                worst = max([worst] + missed_prefix_counts(bs))
                if out.normalized != naive_normalize(bs):
                    bad += 1
                    print("mismatch", bs)
            print(f"seed={seed} max_len={max_len}: done")
    total = cfg.count * len(cfg.seeds) * len(cfg.max_lens)
    print(f"{total - bad}/{total} agree; most missed prefixes in one step: {worst}")
    for rule, k in sorted(fired.items(), key=lambda kv: (kv[0][0], int(kv[0][1:]))):
        print(f"  {rule:>4} {k}")
    never = sorted({f"P{i}" for i in range(1, 31)} - set(fired), key=lambda r: int(r[1:]))
    if never:
        print("never fired:", " ".join(never))
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
