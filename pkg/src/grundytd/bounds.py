"""Auxiliary invariants (vertex cover, matchings, total domination, delta_k)
and the inequalities that sandwich the Grundy total domination number.

Every invariant here is computed by its own exact search and shares no code
with the sequence solvers, so the module doubles as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

import networkx as nx

from .graph import Graph, bits, is_bipartite

DELTA_SWEEP_CAP = 20


def vertex_cover_number(g: Graph) -> int:
    """Minimum vertex cover size by memoized branching on bitmasks.

    Degree-1 vertices force their neighbor into the cover; otherwise branch
    on a maximum-degree vertex ``v``: either ``v`` or all of ``N(v)``.
    """
    adj = g.adjacency
    memo: dict[int, int] = {}

    def solve(alive: int) -> int:
        if alive in memo:
            return memo[alive]
        cost = 0
        rest = alive
        while True:
            pick = -1
            best_deg = 0
            forced = -1
            for v in bits(rest):
                d = (adj[v] & rest).bit_count()
                if d == 1:
                    forced = v
                    break
                if d > best_deg:
                    best_deg, pick = d, v
            if forced >= 0:
                w = (adj[forced] & rest).bit_length() - 1
                rest &= ~(1 << w) & ~(1 << forced)
                cost += 1
                continue
            break
        if pick < 0:
            result = cost
        else:
            take_v = 1 + solve(rest & ~(1 << pick))
            nbrs = adj[pick] & rest
            take_n = nbrs.bit_count() + solve(rest & ~nbrs & ~(1 << pick))
            result = cost + min(take_v, take_n)
        memo[alive] = result
        return result

    return solve(g.full_mask)


def matching_number(g: Graph) -> int:
    """Maximum matching size (Edmonds' blossom algorithm from networkx)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return len(nx.max_weight_matching(h, maxcardinality=True))


def _max_hereditary_matching(g: Graph, ok) -> int:
    """Largest matching ``M`` with ``ok(M)``, for a property closed under subsets."""
    edges = g.edges()
    adj = g.adjacency
    best = 0

    def grow(start: int, chosen: list, used: int) -> None:
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            if len(chosen) + 1 + (len(edges) - i - 1) <= best:
                return
            chosen.append((u, v))
            nu = used | 1 << u | 1 << v
            if ok(chosen, nu, adj):
                grow(i + 1, chosen, nu)
            chosen.pop()

    grow(0, [], 0)
    return best


def _semistrong(chosen, used, adj) -> bool:
    return all(
        (adj[u] & used).bit_count() == 1 or (adj[v] & used).bit_count() == 1
        for u, v in chosen
    )


def _strong(chosen, used, adj) -> bool:
    return all(
        (adj[u] & used).bit_count() == 1 and (adj[v] & used).bit_count() == 1
        for u, v in chosen
    )


def semistrong_matching_number(g: Graph) -> int:
    """Max matching in which every edge has an endpoint of degree 1 in G[V(M)]."""
    return _max_hereditary_matching(g, _semistrong)


def strong_matching_number(g: Graph) -> int:
    """Maximum induced matching size."""
    return _max_hereditary_matching(g, _strong)


def total_domination_number(g: Graph) -> int:
    """Smallest ``S`` with every vertex adjacent to some member of ``S``."""
    adj = g.adjacency
    if any(a == 0 for a in adj):
        raise ValueError("total domination needs a graph without isolated vertices")
    full = g.full_mask
    for k in range(1, g.n + 1):
        for U in combinations(range(g.n), k):
            dom = 0
            for v in U:
                dom |= adj[v]
            if dom == full:
                return k
    return 0  # n == 0


def delta_k(g: Graph, k: int) -> int:
    """``min |N(U)|`` over all ``k``-subsets ``U``."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} outside 1..{g.n}")
    adj = g.adjacency
    floor = g.min_degree()
    best = g.n + 1
    for U in combinations(range(g.n), k):
        dom = 0
        for v in U:
            dom |= adj[v]
        c = dom.bit_count()
        if c < best:
            best = c
            if best == floor:
                break
    return best


def delta_profile(g: Graph) -> list[int]:
    """``[delta_1, ..., delta_n]``."""
    if g.n > DELTA_SWEEP_CAP:
        raise ValueError(f"full delta_k sweep capped at n={DELTA_SWEEP_CAP}")
    return [delta_k(g, k) for k in range(1, g.n + 1)]


@dataclass(frozen=True)
class BoundReport:
    tau: int
    nu: int
    nu_ss: int
    nu_s: int
    gamma_t: Optional[int]
    delta_k: list
    eta: int
    bipartite: bool

    def lines(self) -> list[str]:
        return [
            f"tau = {self.tau}",
            f"nu = {self.nu}",
            f"nu_ss = {self.nu_ss}",
            f"nu_s = {self.nu_s}",
            f"gamma_t = {'undefined' if self.gamma_t is None else self.gamma_t}",
            "delta_k = " + " ".join(str(d) for d in self.delta_k),
            f"eta = {self.eta}",
            f"bipartite = {'yes' if self.bipartite else 'no'}",
        ]


def bound_report(g: Graph) -> BoundReport:
    isolated = any(a == 0 for a in g.adjacency)
    return BoundReport(
        tau=vertex_cover_number(g),
        nu=matching_number(g),
        nu_ss=semistrong_matching_number(g),
        nu_s=strong_matching_number(g),
        gamma_t=None if isolated or g.n == 0 else total_domination_number(g),
        delta_k=delta_profile(g) if g.n <= DELTA_SWEEP_CAP else [],
        eta=int(isolated),
        bipartite=is_bipartite(g) is not None,
    )


class BoundCheck(NamedTuple):
    name: str
    lhs: int
    rhs: int
    holds: bool


def check_all_bounds(g: Graph, gamma: int, report: Optional[BoundReport] = None) -> list[BoundCheck]:
    """Evaluate each applicable inequality ``lhs <= rhs`` against ``gamma``."""
    r = report or bound_report(g)

    def row(name, lhs, rhs):
        return BoundCheck(name, lhs, rhs, lhs <= rhs)

    out = [
        row("2*nu_ss <= gamma", 2 * r.nu_ss, gamma),
        row("gamma <= 2*tau", gamma, 2 * r.tau),
    ]
    if r.gamma_t is not None:
        out.append(row("gamma_t <= gamma", r.gamma_t, gamma))
    if r.bipartite:
        out.append(row("gamma <= 2*nu (bipartite)", gamma, 2 * r.nu))
    for k, d in enumerate(r.delta_k, start=1):
        out.append(row(f"gamma <= {k}+n-delta_{k}", gamma, k + g.n - d))
    return out
