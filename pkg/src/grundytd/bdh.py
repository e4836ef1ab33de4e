"""Pruning sequences, bipartite distance-hereditary graphs and forests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, bits, component_masks, is_bipartite
from .sequences import LegalSequence
from .trees import _peel, is_forest

PENDANT, FALSE_TWIN, TRUE_TWIN = "P", "F", "T"


class NotBipartiteDHError(ValueError):
    pass


class NotAForestError(ValueError):
    pass


@dataclass(frozen=True)
class PruningSequence:
    """Elimination order ``x_1..x_n`` and triples ``(x_i, Z, y_i)`` for ``i < n``."""

    order: tuple[int, ...]
    triples: tuple[tuple[int, str, int], ...]

    def has_true_twins(self) -> bool:
        return any(z == TRUE_TWIN for _, z, _ in self.triples)


def _prune_step(adj, alive: int) -> Optional[tuple[int, str, int]]:
    # smallest vertex that is a pendant, else a twin; P before F before T
    for x in bits(alive):
        nx_ = adj[x] & alive
        if nx_.bit_count() == 1:
            return (x, PENDANT, nx_.bit_length() - 1)
        for y in bits(alive & ~(1 << x)):
            ny = adj[y] & alive
            if ny == nx_:
                return (x, FALSE_TWIN, y)
            if ny | (1 << y) == nx_ | (1 << x):
                return (x, TRUE_TWIN, y)
    return None


def pruning_mask(g: Graph, alive: int) -> Optional[PruningSequence]:
    """Greedy pruning sequence of ``g[alive]``; ``None`` if the greedy gets stuck.

    Deleting a pendant or twin vertex keeps a distance-hereditary graph
    distance-hereditary, so getting stuck proves the input is not one.
    """
    adj = g.adjacency
    order, triples = [], []
    while alive.bit_count() > 1:
        step = _prune_step(adj, alive)
        if step is None:
            return None
        triples.append(step)
        order.append(step[0])
        alive &= ~(1 << step[0])
    order.extend(bits(alive))
    return PruningSequence(tuple(order), tuple(triples))


def pruning_sequence(g: Graph) -> Optional[PruningSequence]:
    """Pruning sequence of a connected graph, or ``None`` if none exists."""
    if len(component_masks(g)) > 1:
        raise ValueError("pruning_sequence expects a connected graph")
    return pruning_mask(g, g.full_mask)


def validate_pruning(g: Graph, ps: PruningSequence) -> bool:
    """Check every triple against the graph that remains at its step."""
    if sorted(ps.order) != list(range(g.n)) or len(ps.triples) != max(g.n - 1, 0):
        return False
    adj = g.adjacency
    alive = g.full_mask
    for i, (x, z, y) in enumerate(ps.triples):
        if x != ps.order[i] or not alive >> y & 1 or x == y:
            return False
        nx_, ny = adj[x] & alive, adj[y] & alive
        if z == PENDANT and nx_ != 1 << y:
            return False
        if z == FALSE_TWIN and nx_ != ny:
            return False
        if z == TRUE_TWIN and nx_ | 1 << x != ny | 1 << y:
            return False
        alive &= ~(1 << x)
    return True


def is_bipartite_dh(g: Graph) -> bool:
    if is_bipartite(g) is None:
        return False
    for comp in component_masks(g):
        ps = pruning_mask(g, comp)
        if ps is None or ps.has_true_twins():
            return False
    return True


def _bdh_order(g: Graph, alive: int) -> list[int]:
    out: list[int] = []
    for comp in component_masks(g, alive):
        if comp.bit_count() < 2:
            continue
        ps = pruning_mask(g, comp)
        if ps is None or ps.has_true_twins():
            raise NotBipartiteDHError("input is not bipartite distance-hereditary")
        removed = 0
        for x, z, y in ps.triples:
            removed |= 1 << x
            if z == FALSE_TWIN:
                continue
            # first pendant: x_i is a leaf of y_i once x_1..x_{i-1} are gone
            inner = _bdh_order(g, comp & ~removed & ~(1 << y))
            out.append(x)
            out.extend(inner)
            out.append(y)
            break
    return out


def grundy_bdh(g: Graph) -> LegalSequence:
    """Grundy total dominating sequence of a bipartite distance-hereditary graph.

    Per component: skip leading false-twin steps of a pruning sequence, and
    at the first pendant step ``(x, P, y)`` recurse on what is left after
    also deleting ``x`` and ``y``, wrapping the result as ``(x) + S' + (y)``.
    """
    if is_bipartite(g) is None:
        raise NotBipartiteDHError("input is not bipartite")
    return LegalSequence.of(g, _bdh_order(g, g.full_mask))


def grundy_forest(t: Graph) -> LegalSequence:
    """Smallest leaf ``l`` with support ``s``; recurse on ``T - s - L(s)``.

    The other leaves of ``s`` become isolated once ``s`` is gone, so this is
    the same leaf/support peel the tree routine runs, applied to every
    component at once.
    """
    if not is_forest(t):
        raise NotAForestError("input has a cycle")
    return LegalSequence.of(t, _peel(t).sequence)
