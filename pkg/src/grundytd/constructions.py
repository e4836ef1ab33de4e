"""Graph families with known Grundy total domination numbers, and the
stable-set/clique doubling construction onto split graphs.

Labelling conventions (relied on by tests and the CLI):

* path / cycle: ``0..n-1`` in order.
* star: centre ``0``, leaves ``1..n``.
* prism ``K_n x K_2``: ``a_i = i``, ``b_i = n + i``, ``a_i ~ b_i``.
* net: triangle ``0, 1, 2`` with pendants ``3, 4, 5`` on ``0, 1, 2``.
* g5k: triangles ``{0,1,2}`` and ``{3,4,5}`` bridged by ``2-3``; a path
  ``6..5+2k`` hangs off vertex ``5`` (degree 2, away from the bridge).
* spiders: ``s_i = i``, ``c_i = r + i``, head ids from ``2r`` on, and the
  quasi duplicate (if any) last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, disjoint_union

FAMILIES = (
    "path", "cycle", "star", "complete", "prism", "net", "g5k",
    "thin_spider", "thick_spider", "quasi_spider",
)
QUASI_KINDS = ("S<-K2", "S<-K2bar", "C<-K2", "C<-K2bar")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 0
    r: int = 0
    k: int = 0
    head: Optional[Graph] = None
    quasi: str = "none"
    base: str = "thin"  # spider type underlying a quasi-spider

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")


def _clique_edges(vs):
    vs = list(vs)
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, _clique_edges(range(n)))


def prism(n: int) -> Graph:
    if n < 1:
        raise ValueError("prism needs n >= 1")
    edges = _clique_edges(range(n)) + _clique_edges(range(n, 2 * n))
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def net() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def g5k(k: int) -> Graph:
    if k < 0:
        raise ValueError("k must be non-negative")
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
    prev = 5
    for v in range(6, 6 + 2 * k):
        edges.append((prev, v))
        prev = v
    return Graph.from_edges(6 + 2 * k, edges)


def spider(r: int, kind: str = "thin", head: Optional[Graph] = None, quasi: str = "none") -> Graph:
    if r < 2 or (kind == "thick" and r < 3):
        raise ValueError(f"{kind} spider needs larger weight, got r={r}")
    if kind not in ("thin", "thick"):
        raise ValueError(f"unknown spider kind {kind!r}")
    head = head or Graph.empty(0)
    hn = head.n
    edges = _clique_edges(range(r, 2 * r))
    for i in range(r):
        for j in range(r):
            if (i == j) == (kind == "thin"):
                edges.append((i, r + j))
    edges += [(2 * r + u, 2 * r + v) for u, v in head.edges()]
    edges += [(r + i, 2 * r + h) for i in range(r) for h in range(hn)]
    n = 2 * r + hn
    if quasi == "none":
        return Graph.from_edges(n, edges)
    if quasi not in QUASI_KINDS:
        raise ValueError(f"unknown quasi kind {quasi!r}")
    twin_of = r - 1 if quasi.startswith("S") else 2 * r - 1
    dup = n
    base = Graph.from_edges(n, edges)
    edges += [(dup, u) for u in range(n) if base.has_edge(twin_of, u)]
    if quasi.endswith("K2"):
        edges.append((dup, twin_of))
    return Graph.from_edges(n + 1, edges)


def generate(spec: FamilySpec) -> Graph:
    f = spec.family
    if f == "path":
        return path(spec.n)
    if f == "cycle":
        return cycle(spec.n)
    if f == "star":
        return star(spec.n)
    if f == "complete":
        return complete(spec.n)
    if f == "prism":
        return prism(spec.n)
    if f == "net":
        return net()
    if f == "g5k":
        return g5k(spec.k)
    if f == "thin_spider":
        return spider(spec.r, "thin", spec.head)
    if f == "thick_spider":
        return spider(spec.r, "thick", spec.head)
    return spider(spec.r, spec.base, spec.head, spec.quasi)


def expected_gamma(spec: FamilySpec) -> Optional[int]:
    """Value asserted by a closed formula, or ``None`` where none is pinned down.

    Spider values are given only for an empty head.
    """
    f = spec.family
    if f == "path":
        return 2 * (spec.n // 2)
    if f == "cycle":
        return spec.n - 1 if spec.n % 2 else None
    if f == "star":
        return 2 if spec.n >= 1 else 0
    if f == "complete":
        return 2 if spec.n >= 2 else 0
    if f == "prism":
        return spec.n if spec.n == 2 or spec.n >= 4 else None
    if f == "net":
        return 6
    if f == "g5k":
        return 5 + 2 * spec.k
    if spec.head is not None and spec.head.n:
        return None
    if f == "thin_spider":
        return 2 * spec.r
    if f == "thick_spider":
        return 4
    if spec.base == "thin":
        return 2 * spec.r
    return 6 if spec.quasi == "S<-K2" else 4


def split_reduction(g: Graph) -> tuple[Graph, list[int], list[int]]:
    """Stable copy ``v^1 = v`` and clique copy ``v^2 = n + v``; ``v^1 ~ u^2``
    exactly when ``v ~ u`` in ``g``.  Returns the graph and both id maps."""
    if any(a == 0 for a in g.adjacency):
        raise ValueError("split_reduction needs a graph without isolated vertices")
    n = g.n
    edges = _clique_edges(range(n, 2 * n))
    edges += [(v, n + u) for v in range(n) for u in range(n) if g.has_edge(v, u)]
    return Graph.from_edges(2 * n, edges), list(range(n)), list(range(n, 2 * n))


def union_of(*graphs: Graph) -> Graph:
    out = Graph.empty(0)
    for h in graphs:
        out = disjoint_union(out, h)
    return out
