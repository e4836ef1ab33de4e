"""Grundy total dominating sequences of trees via leaf/support peeling."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, component_count
from .sequences import LegalSequence


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class TreeRunTrace:
    chosen_leaves: tuple[int, ...]
    supports: tuple[int, ...]

    @property
    def sequence(self) -> tuple[int, ...]:
        return self.chosen_leaves + self.supports[::-1]


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and component_count(g) == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - component_count(g)


def _peel(g: Graph) -> TreeRunTrace:
    # Smallest current leaf u, its support w; delete both.  Vertices left
    # isolated stay in the tree and are never picked again.
    adj = g.nbrs
    deg = [len(a) for a in adj]
    alive = [True] * g.n
    heap = [v for v in range(g.n) if deg[v] == 1]
    heapq.heapify(heap)
    leaves, supports = [], []
    while heap:
        u = heapq.heappop(heap)
        if not alive[u] or deg[u] != 1:
            continue
        w = next(x for x in adj[u] if alive[x])
        leaves.append(u)
        supports.append(w)
        for x in (u, w):
            alive[x] = False
            for y in adj[x]:
                if alive[y]:
                    deg[y] -= 1
                    if deg[y] == 1:
                        heapq.heappush(heap, y)
    return TreeRunTrace(tuple(leaves), tuple(supports))


def grundy_tree(t: Graph) -> tuple[LegalSequence, TreeRunTrace]:
    """Leaves ``u_1..u_k`` in peel order, then supports ``w_k..w_1``.

    The supports form a minimum vertex cover, so the length is twice the
    vertex cover number.  Runs in ``O(n log n)`` because the next leaf is
    always the smallest-id one.
    """
    if not is_tree(t) or t.n < 2:
        raise NotATreeError("input is not a tree on at least two vertices")
    trace = _peel(t)
    return LegalSequence.of(t, trace.sequence), trace


def tree_vertex_cover(t: Graph) -> frozenset:
    if not is_tree(t):
        raise NotATreeError("input is not a tree")
    if t.n < 2:
        return frozenset()
    return frozenset(_peel(t).supports)
