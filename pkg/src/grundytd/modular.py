"""Binary modular decomposition trees and the union/join combination rules.

A graph that is disconnected splits as a disjoint union, one whose
complement is disconnected splits as a join, and otherwise it is *modular*
and becomes a leaf.  Grundy sequences of the pieces combine exactly, so any
exact solver for the modular leaves lifts to the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .graph import Graph, bits, component_masks, complement, induced_mask
from .sequences import LegalSequence

LEAF, UNION, JOIN = "LEAF", "UNION", "JOIN"


@dataclass(frozen=True)
class MDTree:
    """Node of a modular decomposition tree.

    ``vertices`` are ids in the root graph.  Leaves carry the induced
    ``graph`` with ``id_map[i]`` giving the root id of local vertex ``i``.
    """

    label: str
    vertices: tuple[int, ...]
    left: Optional["MDTree"] = None
    right: Optional["MDTree"] = None
    graph: Optional[Graph] = field(default=None, compare=False)
    id_map: tuple[int, ...] = ()

    def leaves(self) -> Iterator["MDTree"]:
        if self.label == LEAF:
            yield self
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def size(self) -> int:
        return 1 if self.label == LEAF else 1 + self.left.size() + self.right.size()

    def render(self, describe: Callable[["MDTree"], str] = lambda t: "") -> list[str]:
        lines: list[str] = []

        def walk(t: MDTree, depth: int) -> None:
            pad = "  " * depth
            if t.label == LEAF:
                extra = describe(t)
                lines.append(f"{pad}LEAF {list(t.vertices)}" + (f" {extra}" if extra else ""))
            else:
                lines.append(f"{pad}{t.label} {list(t.vertices)}")
                walk(t.left, depth + 1)
                walk(t.right, depth + 1)

        walk(self, 0)
        return lines


def build_mdt(g: Graph) -> MDTree:
    """Decompose ``g``; splits peel off the smallest-id (co-)component."""
    if g.n < 1:
        raise ValueError("build_mdt needs at least one vertex")
    co = complement(g)

    def build(mask: int) -> MDTree:
        verts = tuple(bits(mask))
        comps = component_masks(g, mask)
        if len(comps) > 1:
            return MDTree(UNION, verts, build(comps[0]), build(mask & ~comps[0]))
        cocomps = component_masks(co, mask)
        if len(cocomps) > 1:
            return MDTree(JOIN, verts, build(cocomps[0]), build(mask & ~cocomps[0]))
        sub, old = induced_mask(g, mask)
        return MDTree(LEAF, verts, graph=sub, id_map=tuple(old))

    return build(g.full_mask)


@dataclass(frozen=True)
class LeafSolution:
    """Grundy sequence of a graph together with what the join rule needs.

    ``isolated`` is one isolated vertex (``None`` iff ``eta == 0``) and
    ``vertices`` is the full vertex set, all in one shared id space.
    """

    length: int
    witness: tuple[int, ...]
    eta: int
    isolated: Optional[int]
    vertices: tuple[int, ...]

    def relabel(self, id_map: Sequence[int]) -> "LeafSolution":
        return LeafSolution(
            self.length,
            tuple(id_map[v] for v in self.witness),
            self.eta,
            None if self.isolated is None else id_map[self.isolated],
            tuple(id_map[v] for v in self.vertices),
        )

    def shifted(self, offset: int) -> "LeafSolution":
        return self.relabel({v: v + offset for v in self.vertices})


def make_solution(g: Graph, witness: Sequence[int]) -> LeafSolution:
    iso = [v for v in range(g.n) if g.adjacency[v] == 0]
    return LeafSolution(len(witness), tuple(witness), int(bool(iso)), iso[0] if iso else None, tuple(range(g.n)))


def combine_union(s1: LeafSolution, s2: LeafSolution) -> LeafSolution:
    """Disjoint union: lengths add and witnesses concatenate."""
    return LeafSolution(
        s1.length + s2.length,
        s1.witness + s2.witness,
        max(s1.eta, s2.eta),
        s1.isolated if s1.isolated is not None else s2.isolated,
        s1.vertices + s2.vertices,
    )


def _wrap(inner: LeafSolution, other: LeafSolution) -> tuple[int, ...]:
    # isolated vertex of one side first, the side's sequence, then any
    # vertex of the other side, which footprints that isolated vertex
    return (inner.isolated,) + inner.witness + (min(other.vertices),)


def combine_join(s1: LeafSolution, s2: LeafSolution) -> LeafSolution:
    """Join: ``max(len_i + 2*eta_i)`` with the matching witness."""
    if s1.eta == 0 and s2.eta == 0:
        witness = s1.witness if s1.length >= s2.length else s2.witness
    elif s1.eta == 1 and s2.eta == 1:
        if s1.length >= s2.length:
            witness = _wrap(s1, s2)
        else:
            witness = _wrap(s2, s1)
    else:
        iso, full = (s1, s2) if s1.eta == 1 else (s2, s1)
        witness = _wrap(iso, full) if iso.length + 2 >= full.length else full.witness
    length = max(s1.length + 2 * s1.eta, s2.length + 2 * s2.eta)
    assert len(witness) == length
    return LeafSolution(length, witness, 0, None, s1.vertices + s2.vertices)


LeafSolver = Callable[[Graph], LeafSolution]


def solve_tree(tree: MDTree, leaf_solver: LeafSolver) -> LeafSolution:
    """Post-order evaluation of an MDT; results are in root-graph ids."""
    if tree.label == LEAF:
        return leaf_solver(tree.graph).relabel(tree.id_map)
    a = solve_tree(tree.left, leaf_solver)
    b = solve_tree(tree.right, leaf_solver)
    return combine_union(a, b) if tree.label == UNION else combine_join(a, b)


def solve_mdt_solution(g: Graph, leaf_solver: LeafSolver) -> LeafSolution:
    if g.n == 0:
        return LeafSolution(0, (), 0, None, ())
    return solve_tree(build_mdt(g), leaf_solver)


def solve_via_mdt(g: Graph, leaf_solver: LeafSolver) -> LegalSequence:
    return LegalSequence.of(g, solve_mdt_solution(g, leaf_solver).witness)


class NonTrivialLeafError(ValueError):
    pass


def trivial_leaf_solver(g: Graph) -> LeafSolution:
    """Leaf solver for cographs: every modular leaf is a single vertex."""
    if g.n != 1:
        raise NonTrivialLeafError(f"modular leaf on {g.n} vertices is not trivial")
    return LeafSolution(0, (), 1, 0, (0,))


def exact_leaf_solver(cap: Optional[int] = None) -> LeafSolver:
    from .oracle import DEFAULT_CAP, grundy_exact

    limit = DEFAULT_CAP if cap is None else cap

    def solve(g: Graph) -> LeafSolution:
        return make_solution(g, grundy_exact(g, limit).witness)

    return solve
