"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is kept as one Python ``int`` bitmask per vertex, so neighborhood
unions and differences are single big-int operations.  Public queries return
``frozenset`` vertex sets; the ``*_mask`` helpers expose the raw bitmasks for
the search code.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph; immutable after construction.

    Neighbor tuples are the primary storage; the bitmask view used by the
    exhaustive searches is built on first use and cached.
    """

    __slots__ = ("n", "_nbrs", "_adj")

    def __init__(self, n: int, adjacency: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adjacency) != n:
            raise ValueError("adjacency length does not match n")
        full = (1 << n) - 1
        adj = tuple(int(a) for a in adjacency)
        nbrs = []
        for v, a in enumerate(adj):
            if a & ~full:
                raise ValueError(f"neighbor of {v} out of range")
            if a >> v & 1:
                raise ValueError(f"self-loop at {v}")
            row = tuple(bits(a))
            for u in row:
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
            nbrs.append(row)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_nbrs", tuple(nbrs))
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows: list[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u].add(v)
            rows[v].add(u)
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "_nbrs", tuple(tuple(sorted(r)) for r in rows))
        object.__setattr__(g, "_adj", None)
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    # -- raw access ---------------------------------------------------------
    @property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks."""
        if self._adj is None:
            object.__setattr__(self, "_adj", tuple(mask_of(r) for r in self._nbrs))
        return self._adj

    @property
    def nbrs(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples."""
        return self._nbrs

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def nbr_mask(self, v: int) -> int:
        self._check(v)
        return self.adjacency[v]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    # -- basic queries ------------------------------------------------------
    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_mask(u) >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if v > u]

    @property
    def m(self) -> int:
        return sum(len(r) for r in self._nbrs) // 2

    def min_degree(self) -> int:
        return min((len(r) for r in self._nbrs), default=0)

    def max_degree(self) -> int:
        return max((len(r) for r in self._nbrs), default=0)

    def has_isolated(self) -> bool:
        return any(not r for r in self._nbrs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighbors(g: Graph, v: int) -> VertexSet:
    g._check(v)
    return frozenset(g.nbrs[v])


def neighborhood_mask(g: Graph, mask: int) -> int:
    if mask & ~g.full_mask:
        raise IndexError("vertex set out of range")
    out = 0
    adj = g.adjacency
    for v in bits(mask):
        out |= adj[v]
    return out


def neighborhood_of_set(g: Graph, U: Iterable[int]) -> VertexSet:
    """Union of the open neighborhoods of the vertices in ``U``."""
    U = list(U)
    for v in U:
        g._check(v)
    return frozenset(bits(neighborhood_mask(g, mask_of(U))))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adjacency)])


def induced_mask(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``mask``; returns the graph and new->old id list."""
    old = list(bits(mask))
    new_of = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        a = 0
        for u in bits(g.adjacency[v] & mask):
            a |= 1 << new_of[u]
        adj.append(a)
    return Graph(len(old), adj), old


def induced_subgraph(g: Graph, U: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph with compacted ids, plus the old->new id map."""
    U = set(U)
    for v in U:
        g._check(v)
    h, old = induced_mask(g, mask_of(U))
    return h, {v: i for i, v in enumerate(old)}


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` followed by ``g2`` with ids shifted by ``g1.n``."""
    return Graph(g1.n + g2.n, list(g1.adjacency) + [a << g1.n for a in g2.adjacency])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    left = g1.full_mask
    right = g2.full_mask << g1.n
    adj = [a | right for a in g1.adjacency] + [(a << g1.n) | left for a in g2.adjacency]
    return Graph(g1.n + g2.n, adj)


def component_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components of ``g[within]`` as masks, ordered by smallest member."""
    rest = g.full_mask if within is None else within
    adj = g.adjacency
    out = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def component_count(g: Graph) -> int:
    """Number of connected components, by search over neighbor tuples."""
    seen = bytearray(g.n)
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = 1
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.nbrs[v]:
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)
    return count


def is_connected(g: Graph) -> bool:
    return component_count(g) <= 1


def leaves_and_supports(g: Graph) -> list[tuple[int, int]]:
    """Every degree-1 vertex paired with its unique neighbor."""
    return [(v, r[0]) for v, r in enumerate(g.nbrs) if len(r) == 1]


def twin_pair(g: Graph) -> Optional[tuple[int, int, str]]:
    """Lexicographically smallest twin pair ``(u, v, "false" | "true")``, or None."""
    adj = g.adjacency
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u] == adj[v]:
                return (u, v, "false")
            if adj[u] | (1 << u) == adj[v] | (1 << v):
                return (u, v, "true")
    return None


def is_bipartite(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """Two colour classes if ``g`` is bipartite, else ``None``.

    Each component's smallest vertex gets the first colour.
    """
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.nbrs[v]:
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return (
        frozenset(v for v in range(g.n) if colour[v] == 0),
        frozenset(v for v in range(g.n) if colour[v] == 1),
    )


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def delete_vertices(g: Graph, remove: Iterable[int]) -> tuple[Graph, list[int]]:
    return induced_mask(g, g.full_mask & ~mask_of(remove))


# -- edge-list text format ---------------------------------------------------

class GraphFormatError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``m`` edge lines format (``#`` comments)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("missing 'n m' header")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative n or m")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for ln in body:
        parts = ln.split()
        try:
            u, v = (int(t) for t in parts)
        except ValueError:
            raise GraphFormatError(f"bad edge line: {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u} {v} out of range")
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    edges = g.edges()
    out.append(f"{g.n} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path, comment: Optional[str] = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g, comment))
