"""Exhaustive maximum legal sequence search for small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph

DEFAULT_CAP = 14


class OracleCapError(ValueError):
    """Raised instead of searching a graph larger than the vertex cap."""


@dataclass(frozen=True)
class OracleResult:
    length: int
    witness: tuple[int, ...]
    explored: int


def grundy_exact(g: Graph, vertex_cap: Optional[int] = DEFAULT_CAP) -> OracleResult:
    """Maximum-length legal sequence of ``g`` by memoized depth-first search.

    A vertex already in the sequence has its whole neighborhood dominated,
    so the set of dominated vertices alone determines which extensions are
    legal.  The memo is keyed on that set.  Candidates are tried in
    ascending id and the first extension reaching the maximum is kept, which
    makes the witness the lexicographically smallest optimal sequence.
    """
    if vertex_cap is not None and g.n > vertex_cap:
        raise OracleCapError(f"graph has {g.n} vertices, oracle cap is {vertex_cap}")
    adj = g.adjacency
    order = [v for v in range(g.n) if adj[v]]
    memo: dict[int, tuple[int, int]] = {}

    def best(dom: int) -> int:
        hit = memo.get(dom)
        if hit is not None:
            return hit[0]
        # each further vertex footprints at least one still-undominated
        # vertex that has some neighbor
        ceiling = (reach & ~dom).bit_count()
        top, choice = 0, -1
        for v in order:
            a = adj[v]
            if a & ~dom:
                got = 1 + best(dom | a)
                if got > top:
                    top, choice = got, v
                    if top == ceiling:
                        break
        memo[dom] = (top, choice)
        return top

    reach = 0
    for a in adj:
        reach |= a
    length = best(0)
    witness = []
    dom = 0
    while True:
        _, v = memo[dom]
        if v < 0:
            break
        witness.append(v)
        dom |= adj[v]
    return OracleResult(length, tuple(witness), len(memo))


def grundy_number(g: Graph, vertex_cap: Optional[int] = DEFAULT_CAP) -> int:
    return grundy_exact(g, vertex_cap).length
