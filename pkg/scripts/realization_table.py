"""Oracle values against closed-form targets for the generator families."""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from grundytd.constructions import QUASI_KINDS, FamilySpec, expected_gamma, generate
from grundytd.oracle import grundy_exact


@dataclass
class Config:
    max_vertices: int = 14
    cap: int = 16
    csv_path: str = ""


def specs(cfg: Config):
    for n in range(2, 9):
        yield FamilySpec("prism", n=n)
    for k in range(0, 5):
        yield FamilySpec("g5k", k=k)
    for n in range(3, 14):
        yield FamilySpec("cycle", n=n)
    for n in range(2, 14):
        yield FamilySpec("path", n=n)
    yield FamilySpec("net")
    for r in range(2, 7):
        yield FamilySpec("thin_spider", r=r)
        for q in QUASI_KINDS:
            yield FamilySpec("quasi_spider", r=r, quasi=q)
    for r in range(3, 7):
        yield FamilySpec("thick_spider", r=r)
        for q in QUASI_KINDS:
            yield FamilySpec("quasi_spider", r=r, quasi=q, base="thick")


def label(s: FamilySpec) -> str:
    if s.family in ("prism", "cycle", "path"):
        return f"{s.family}({s.n})"
    if s.family == "g5k":
        return f"g5k({s.k})"
    if s.family == "quasi_spider":
        return f"{s.base}_spider({s.r}) {s.quasi}"
    if s.family == "net":
        return "net"
    return f"{s.family}({s.r})"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    ap.add_argument("--cap", type=int, default=Config.cap)
    ap.add_argument("--csv", dest="csv_path", default="")
    cfg = Config(**vars(ap.parse_args(argv)))

    rows = []
    for s in specs(cfg):
        g = generate(s)
        if g.n > cfg.max_vertices:
            continue
        t0 = time.perf_counter()
        res = grundy_exact(g, cfg.cap)
        dt = time.perf_counter() - t0
        want = expected_gamma(s)
        status = "-" if want is None else ("ok" if want == res.length else "MISMATCH")
        rows.append((label(s), g.n, g.m, res.length, "" if want is None else want, status, f"{dt:.3f}"))

    header = ("graph", "n", "m", "oracle", "formula", "status", "seconds")
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            csv.writer(fh).writerows([header, *rows])
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    for row in (header, *rows):
        print("  ".join(str(x).ljust(w) for x, w in zip(row, widths)))
    return 1 if any(r[5] == "MISMATCH" for r in rows) else 0


if __name__ == "__main__":
    sys.exit(main())
