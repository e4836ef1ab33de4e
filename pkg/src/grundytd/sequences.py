"""Legal open-neighborhood sequences, footprints and certificates.

A sequence ``(v_1, ..., v_k)`` of distinct vertices is legal when every
``v_i`` has a neighbor that no earlier ``v_j`` has.  That neighbor is
*footprinted* by ``v_i``.  Graphs with isolated vertices are allowed: the
maximum legal sequence length is then the (extended) Grundy total
domination number, and an edgeless graph only admits the empty sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .graph import Graph


class IllegalSequenceError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceVerdict:
    legal: bool
    total_dominating: bool
    maximal: bool
    first_violation: Optional[int] = None
    reason: str = ""
    footprint: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class LegalSequence:
    """A verified legal sequence on a fixed graph.

    ``footprint`` maps every dominated vertex to its footprinter and
    ``dominated`` is the union of the open neighborhoods of ``order``.
    Build instances through :meth:`of`, which refuses illegal orders.
    """

    order: tuple[int, ...]
    footprint: dict = field(compare=False)
    dominated: frozenset = field(compare=False)

    @classmethod
    def of(cls, g: Graph, order: Iterable[int]) -> "LegalSequence":
        order = tuple(order)
        verdict = verify_sequence(g, order)
        if not verdict.legal:
            raise IllegalSequenceError(
                f"illegal at position {verdict.first_violation}: {verdict.reason}"
            )
        return cls(order, verdict.footprint, frozenset(verdict.footprint))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i):
        return self.order[i]


def verify_sequence(g: Graph, order: Sequence[int]) -> SequenceVerdict:
    """Check legality, total domination and maximality of ``order`` on ``g``.

    ``first_violation`` is the index of the first repeated vertex or the
    first vertex that footprints nothing new.  ``maximal`` is only reported
    for legal sequences.
    """
    for v in order:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    nbrs = g.nbrs
    dominated = bytearray(g.n)
    used = bytearray(g.n)
    footprint: dict[int, int] = {}
    for i, v in enumerate(order):
        if used[v]:
            return SequenceVerdict(False, False, False, i, f"vertex {v} repeated")
        new = [u for u in nbrs[v] if not dominated[u]]
        if not new:
            return SequenceVerdict(False, False, False, i, f"vertex {v} footprints nothing")
        for u in new:
            footprint[u] = v
            dominated[u] = 1
        used[v] = 1
    total = g.n > 0 and len(footprint) == g.n
    maximal = all(dominated[u] for row in nbrs for u in row)
    return SequenceVerdict(True, total, maximal, None, "", footprint)


def concatenate(s1: Sequence[int], s2: Sequence[int]) -> tuple[int, ...]:
    """``s1`` followed by ``s2``; the vertex sets must be disjoint.

    Legality of the result is not implied and is the caller's business.
    """
    overlap = set(s1) & set(s2)
    if overlap:
        raise ValueError(f"sequences share vertices {sorted(overlap)}")
    return tuple(s1) + tuple(s2)


def eta(g: Graph) -> int:
    """1 if ``g`` has an isolated vertex, 0 otherwise."""
    return 1 if g.has_isolated() else 0


def certificate_lines(g: Graph, order: Sequence[int]) -> list[str]:
    """``"v footprinted_by u"`` lines for a legal sequence, ordered by ``v``."""
    verdict = verify_sequence(g, order)
    if not verdict.legal:
        raise IllegalSequenceError(f"illegal at position {verdict.first_violation}")
    return [f"{v} footprinted_by {u}" for v, u in sorted(verdict.footprint.items())]


def parse_sequence(text: str) -> tuple[int, ...]:
    """Space-separated vertex ids on one line; blank and ``#`` lines skipped."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) > 1:
        raise ValueError("sequence must be on a single line")
    if not lines:
        return ()
    try:
        return tuple(int(t) for t in lines[0].split())
    except ValueError:
        raise ValueError(f"bad sequence line: {lines[0]!r}") from None


def format_sequence(order: Sequence[int]) -> str:
    return " ".join(str(v) for v in order)
