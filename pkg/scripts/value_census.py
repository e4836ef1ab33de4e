"""Distribution of the Grundy total domination number over all small connected graphs."""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from grundytd.graph import Graph
from grundytd.oracle import grundy_number


@dataclass
class Config:
    max_n: int = 7  # the networkx atlas stops at 7 vertices


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n, choices=range(2, 8))
    cfg = Config(ap.parse_args(argv).max_n)

    by_n: dict[int, Counter] = {}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < 2 or n > cfg.max_n or not nx.is_connected(h):
            continue
        g = Graph.from_edges(n, list(h.edges()))
        by_n.setdefault(n, Counter())[grundy_number(g)] += 1

    values = sorted({v for c in by_n.values() for v in c})
    print("n   graphs  " + "  ".join(f"g={v:<3}" for v in values))
    for n, c in sorted(by_n.items()):
        cells = "  ".join(f"{c.get(v, 0):<5}" for v in values)
        print(f"{n:<3} {sum(c.values()):<7} {cells}")
    missing = [v for v in range(max(values) + 1) if v not in values]
    print(f"values never attained up to n={cfg.max_n}: {missing}")


if __name__ == "__main__":
    main()
