"""Running time of the tree algorithm on random trees of growing size."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from grundytd.bounds import matching_number
from grundytd.graph import Graph
from grundytd.trees import grundy_tree


@dataclass
class Config:
    sizes: tuple[int, ...] = (1_000, 10_000, 100_000, 300_000)
    repeats: int = 3
    seed: int = 0
    check_up_to: int = 20_000  # compare with 2*nu below this size


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(Config.sizes))
    ap.add_argument("--repeats", type=int, default=Config.repeats)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--check-up-to", type=int, default=Config.check_up_to)
    a = ap.parse_args(argv)
    cfg = Config(tuple(a.sizes), a.repeats, a.seed, a.check_up_to)

    rng = random.Random(cfg.seed)
    print(f"{'n':>8}  {'best s':>8}  {'us/vertex':>9}  {'length':>8}  2*nu")
    for n in cfg.sizes:
        t = random_tree(rng, n)
        best, length = float("inf"), 0
        for _ in range(cfg.repeats):
            t0 = time.perf_counter()
            seq, _ = grundy_tree(t)
            best = min(best, time.perf_counter() - t0)
            length = len(seq)
        ref = str(2 * matching_number(t)) if n <= cfg.check_up_to else "skipped"
        print(f"{n:>8}  {best:8.3f}  {1e6 * best / n:9.2f}  {length:>8}  {ref}")


if __name__ == "__main__":
    main()
