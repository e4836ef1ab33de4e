"""Modular P4-tidy leaves: C5, P5, co-P5, spiders and quasi-spiders.

Spiders are recognised structurally.  In a thin spider the stable part is
exactly the set of degree-1 vertices, and the complement of a thick spider
is a thin spider with the stable and clique parts swapped.  Quasi-spiders
are found by deleting one vertex of a twin pair and recognising the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .graph import Graph, bits, complement, induced_mask, mask_of, relabel
from .modular import LeafSolution, solve_mdt_solution
from .sequences import LegalSequence

TRIVIAL, C5, P5, P5BAR, SPIDER, NOT_P4_TIDY = "TRIVIAL", "C5", "P5", "P5BAR", "SPIDER", "NOT_P4_TIDY"
THIN, THICK = "thin", "thick"
Q_NONE, Q_S_K2, Q_S_K2BAR, Q_C_K2, Q_C_K2BAR = "none", "S<-K2", "S<-K2bar", "C<-K2", "C<-K2bar"


class NotP4TidyError(ValueError):
    pass


_P5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
_TEMPLATES = {
    C5: Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    P5: _P5,
    P5BAR: complement(_P5),
}
# oracle-computed maxima on the template labelling; re-checked in the tests
SMALL_LEAF_WITNESSES = {
    C5: (0, 2, 3, 1),
    P5: (0, 1, 2, 3),
    P5BAR: (1, 0, 2, 3),
}


@dataclass(frozen=True)
class SpiderPartition:
    """``S[i]`` pairs with ``C[i]``; ``extra`` is the duplicated vertex of a
    quasi-spider, a twin of ``S[-1]`` or ``C[-1]``."""

    S: tuple[int, ...]
    C: tuple[int, ...]
    H: tuple[int, ...]
    kind: str
    quasi: str = Q_NONE
    extra: Optional[int] = None

    @property
    def weight(self) -> int:
        return len(self.S)


@dataclass(frozen=True)
class LeafClass:
    tag: str
    partition: Optional[SpiderPartition] = None
    mapping: Optional[tuple[int, ...]] = None  # template id -> graph id


def _thin(g: Graph, alive: int) -> Optional[tuple[list[int], list[int], list[int]]]:
    adj = g.adjacency
    S, C = [], []
    for v in bits(alive):
        nb = adj[v] & alive
        if nb and nb & (nb - 1) == 0:
            S.append(v)
            C.append(nb.bit_length() - 1)
    r = len(S)
    if r < 2 or len(set(C)) != r or set(C) & set(S):
        return None
    cmask = mask_of(C)
    H = [v for v in bits(alive & ~cmask & ~mask_of(S))]
    for c in C:
        if (adj[c] | 1 << c) & cmask != cmask:
            return None
    for h in H:
        if adj[h] & cmask != cmask:
            return None
    return S, C, H


def _spider(g: Graph, alive: int, co: Graph) -> Optional[SpiderPartition]:
    got = _thin(g, alive)
    if got:
        S, C, H = got
        return SpiderPartition(tuple(S), tuple(C), tuple(H), THIN)
    got = _thin(co, alive)
    if got and len(got[0]) >= 3:
        cs, cc, ch = got
        return SpiderPartition(tuple(cc), tuple(cs), tuple(ch), THICK)
    return None


def _to_end(p: SpiderPartition, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    order = [j for j in range(p.weight) if j != i] + [i]
    return tuple(p.S[j] for j in order), tuple(p.C[j] for j in order)


def find_spider(g: Graph) -> Optional[SpiderPartition]:
    """Spider or quasi-spider partition of ``g``, or ``None``."""
    co = complement(g)
    full = g.full_mask
    p = _spider(g, full, co)
    if p is not None:
        return p
    adj = g.adjacency
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u] == adj[v]:
                true_twin = False
            elif adj[u] | 1 << u == adj[v] | 1 << v:
                true_twin = True
            else:
                continue
            for dup, keep in ((v, u), (u, v)):
                base = _spider(g, full & ~(1 << dup), co)
                if base is None:
                    continue
                if keep in base.S:
                    S, C = _to_end(base, base.S.index(keep))
                    quasi = Q_S_K2 if true_twin else Q_S_K2BAR
                elif keep in base.C:
                    S, C = _to_end(base, base.C.index(keep))
                    quasi = Q_C_K2 if true_twin else Q_C_K2BAR
                else:
                    continue
                return SpiderPartition(S, C, base.H, base.kind, quasi, dup)
    return None


def _match_template(g: Graph) -> Optional[tuple[str, tuple[int, ...]]]:
    if g.n != 5:
        return None
    for tag, t in _TEMPLATES.items():
        if t.m != g.m:
            continue
        for perm in permutations(range(5)):
            if relabel(t, perm) == g:
                return tag, perm
    return None


def classify_leaf(g: Graph) -> LeafClass:
    """Classify a modular graph as one of the P4-tidy leaf types."""
    if g.n == 1:
        return LeafClass(TRIVIAL)
    hit = _match_template(g)
    if hit:
        return LeafClass(hit[0], mapping=hit[1])
    p = find_spider(g)
    if p is not None:
        return LeafClass(SPIDER, partition=p)
    return LeafClass(NOT_P4_TIDY)


def grundy_spider(p: SpiderPartition, head_solution: LeafSolution) -> LeafSolution:
    """Closed-form Grundy sequence of a (quasi-)spider from one of its head.

    ``head_solution`` must be in the same ids as ``p`` (an empty head is the
    zero-length solution with ``eta == 0``).  False-twin duplicates never
    change the value, so only the true-twin duplicate of ``s_r`` matters.
    """
    S, C, r = p.S, p.C, p.weight
    T = head_solution.witness
    if p.kind == THICK:
        if r < 3:
            raise ValueError("thick spiders need weight at least 3")
        if p.quasi == Q_S_K2:
            order = (S[0], S[1], S[-1], p.extra) + T + (C[0], C[1])
        else:
            order = (S[0], S[1]) + T + (C[0], C[1])
    elif p.quasi == Q_S_K2 and head_solution.eta == 1:
        v = head_solution.isolated
        order = S[:-1] + (v,) + T + (S[-1], p.extra, C[-1]) + C[:-1]
    else:
        order = S + T + C
    verts = S + C + tuple(head_solution.vertices) + (() if p.extra is None else (p.extra,))
    return LeafSolution(len(order), order, 0, None, verts)


def _empty_solution() -> LeafSolution:
    return LeafSolution(0, (), 0, None, ())


def p4tidy_leaf_solver(g: Graph) -> LeafSolution:
    cls = classify_leaf(g)
    if cls.tag == TRIVIAL:
        return LeafSolution(0, (), 1, 0, (0,))
    if cls.tag in SMALL_LEAF_WITNESSES:
        w = tuple(cls.mapping[v] for v in SMALL_LEAF_WITNESSES[cls.tag])
        return LeafSolution(len(w), w, 0, None, tuple(range(g.n)))
    if cls.tag == SPIDER:
        p = cls.partition
        if p.H:
            head, old = induced_mask(g, mask_of(p.H))
            head_sol = solve_mdt_solution(head, p4tidy_leaf_solver).relabel(old)
        else:
            head_sol = _empty_solution()
        return grundy_spider(p, head_sol)
    raise NotP4TidyError(f"modular leaf with edges {g.edges()} is not P4-tidy")


def grundy_p4tidy(g: Graph) -> LegalSequence:
    """Grundy sequence of a P4-tidy graph; raises ``NotP4TidyError`` otherwise."""
    return LegalSequence.of(g, solve_mdt_solution(g, p4tidy_leaf_solver).witness)


def is_p4tidy(g: Graph) -> bool:
    try:
        solve_mdt_solution(g, p4tidy_leaf_solver)
    except NotP4TidyError:
        return False
    return True
