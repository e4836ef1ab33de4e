import random
import time

import pytest

from grundytd.bdh import NotAForestError, grundy_forest
from grundytd.bounds import vertex_cover_number
from grundytd.constructions import cycle, path, star
from grundytd.graph import Graph, disjoint_union, relabel
from grundytd.oracle import grundy_number
from grundytd.sequences import verify_sequence
from grundytd.trees import NotATreeError, grundy_tree, is_forest, is_tree, tree_vertex_cover
from graphgen import nonisomorphic_trees, random_tree

DOUBLE_STAR = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


@pytest.mark.parametrize("t, length", [(path(7), 6), (star(4), 2), (DOUBLE_STAR, 4)])
def test_tree_examples(t, length):
    seq, trace = grundy_tree(t)
    assert len(seq) == length == 2 * vertex_cover_number(t)
    assert seq.order == trace.sequence


def test_tree_vertex_cover_examples():
    w = tree_vertex_cover(path(4))
    assert len(w) == 2 and all(a in w or b in w for a, b in path(4).edges())
    assert tree_vertex_cover(star(4)) == {0}
    assert len(tree_vertex_cover(path(7))) == vertex_cover_number(path(7)) == 3


def test_rejects_non_trees():
    for g in (cycle(4), Graph.empty(2), Graph.empty(1), disjoint_union(path(2), path(2))):
        with pytest.raises(NotATreeError):
            grundy_tree(g)
    with pytest.raises(NotAForestError):
        grundy_forest(cycle(3))


def test_is_tree_and_forest():
    assert is_tree(path(5)) and not is_tree(cycle(5))
    assert is_forest(disjoint_union(path(3), Graph.empty(2))) and not is_forest(cycle(3))


def test_footprint_pairs_leaves_and_supports():
    rng = random.Random(1)
    for _ in range(100):
        t = random_tree(rng, rng.randint(2, 40))
        seq, trace = grundy_tree(t)
        v = verify_sequence(t, seq.order)
        assert v.legal and v.total_dominating and v.maximal
        for u, w in zip(trace.chosen_leaves, trace.supports):
            assert v.footprint[w] == u and v.footprint[u] == w
        W = set(trace.supports)
        assert all(a in W or b in W for a, b in t.edges())


def test_trees_match_oracle_up_to_nine_vertices():
    for n in range(2, 10):
        for t in nonisomorphic_trees(n):
            seq, _ = grundy_tree(t)
            assert len(seq) == grundy_number(t) == 2 * vertex_cover_number(t)
            assert len(seq) % 2 == 0


def test_forest_equals_tree_on_trees():
    rng = random.Random(2)
    for _ in range(100):
        t = random_tree(rng, rng.randint(2, 30))
        assert grundy_forest(t).order == grundy_tree(t)[0].order


def test_forest_examples():
    assert len(grundy_forest(disjoint_union(path(4), path(4)))) == 8
    assert grundy_forest(Graph.empty(1)).order == ()
    assert len(grundy_forest(star(3))) == 2


def test_forest_is_sum_over_components():
    rng = random.Random(3)
    for _ in range(100):
        parts = [random_tree(rng, rng.randint(1, 5)) for _ in range(rng.randint(1, 4))]
        f = parts[0]
        for p in parts[1:]:
            f = disjoint_union(f, p)
        perm = list(range(f.n))
        rng.shuffle(perm)
        f = relabel(f, perm)
        seq = grundy_forest(f)
        assert verify_sequence(f, seq.order).maximal
        assert len(seq) == sum(len(grundy_tree(p)[0]) for p in parts if p.n >= 2)
        if f.n <= 12:
            assert len(seq) == grundy_number(f)


def test_large_tree_is_fast():
    rng = random.Random(4)
    t = random_tree(rng, 100_000)
    start = time.perf_counter()
    seq, _ = grundy_tree(t)
    assert time.perf_counter() - start < 2.0
    assert len(seq) % 2 == 0
    start = time.perf_counter()
    assert grundy_forest(t).order == seq.order
    assert time.perf_counter() - start < 2.0
