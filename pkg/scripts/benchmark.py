"""Timing of normalize and generate on random bi-sequences."""

import argparse
import random
import time
from dataclasses import dataclass

from pseudostandard import DirectiveBiSeq, generate_word, normalize


@dataclass(frozen=True)
class BenchConfig:
    lengths: tuple = (1_000, 10_000, 100_000)
    word_limit: int = 1_000_000
    seed: int = 0


def random_biseq(rng, n):
    return DirectiveBiSeq("".join(rng.choice("012") for _ in range(n)), "".join(rng.choice("R012") for _ in range(n)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    cfg = BenchConfig(seed=ap.parse_args().seed)
    rng = random.Random(cfg.seed)
    print(f"{'length':>8} {'normalize s':>12} {'rules':>7} {'generate s':>11} {'letters':>9}")
    for n in cfg.lengths:
        bs = random_biseq(rng, n)
        t0 = time.perf_counter()
        out = normalize(bs)
        t1 = time.perf_counter()
        word = generate_word(bs, limit=cfg.word_limit)
        t2 = time.perf_counter()
        print(f"{n:>8} {t1 - t0:>12.3f} {len(out.trace):>7} {t2 - t1:>11.3f} {len(word):>9}")


if __name__ == "__main__":
    main()
