import random

import pytest

from grundytd.constructions import cycle, path, spider
from grundytd.graph import complement, component_count
from grundytd.modular import LeafSolution
from grundytd.oracle import grundy_exact, grundy_number
from grundytd.p4tidy import (
    _TEMPLATES,
    C5,
    NOT_P4_TIDY,
    P5,
    P5BAR,
    SMALL_LEAF_WITNESSES,
    SPIDER,
    THICK,
    THIN,
    NotP4TidyError,
    SpiderPartition,
    classify_leaf,
    find_spider,
    grundy_p4tidy,
    grundy_spider,
    is_p4tidy,
)
from grundytd.sequences import verify_sequence
from graphgen import HEADS, all_spider_specs, atlas_graphs, brute_force_quasi_spider, random_p4tidy

EMPTY = LeafSolution(0, (), 0, None, ())


def test_small_leaf_constants_are_oracle_optimal():
    for tag, w in SMALL_LEAF_WITNESSES.items():
        g = _TEMPLATES[tag]
        v = verify_sequence(g, w)
        assert v.legal and v.maximal
        assert len(w) == grundy_exact(g).length


def test_classify_examples():
    c = classify_leaf(path(4))
    assert c.tag == SPIDER and c.partition.kind == THIN and c.partition.weight == 2 and c.partition.H == ()
    assert classify_leaf(cycle(5)).tag == C5
    assert classify_leaf(path(5)).tag == P5
    assert classify_leaf(complement(path(5))).tag == P5BAR
    assert classify_leaf(cycle(6)).tag == NOT_P4_TIDY
    assert brute_force_quasi_spider(cycle(6)) is None


@pytest.mark.parametrize("r, kind, quasi, expected", [
    (3, THIN, "none", 6),
    (3, THICK, "none", 4),
    (3, THICK, "S<-K2", 6),
])
def test_spider_formula_examples(r, kind, quasi, expected):
    g = spider(r, kind, None, quasi)
    p = find_spider(g)
    s = grundy_spider(p, EMPTY)
    assert s.length == expected == grundy_number(g)
    assert verify_sequence(g, s.witness).maximal


def test_thin_quasi_with_isolated_head_vertex():
    g = spider(2, "thin", HEADS["K1"], "S<-K2")
    p = find_spider(g)
    assert p.quasi == "S<-K2" and len(p.H) == 1
    head = LeafSolution(0, (), 1, p.H[0], p.H)
    s = grundy_spider(p, head)
    assert s.length == 6 == grundy_number(g)
    v = verify_sequence(g, s.witness)
    assert v.legal and v.maximal


def test_thick_needs_weight_three():
    p = SpiderPartition((0, 1), (2, 3), (), THICK)
    with pytest.raises(ValueError):
        grundy_spider(p, EMPTY)


@pytest.mark.parametrize("g, expected", [(path(5), 4), (cycle(5), 4)])
def test_grundy_p4tidy_examples(g, expected):
    assert len(grundy_p4tidy(g)) == expected == grundy_number(g)


def test_p5bar_value_comes_from_the_oracle():
    g = complement(path(5))
    assert len(grundy_p4tidy(g)) == grundy_number(g)


def test_rejects_non_tidy_graphs():
    assert not is_p4tidy(cycle(6))
    with pytest.raises(NotP4TidyError):
        grundy_p4tidy(cycle(6))


@pytest.mark.parametrize("spec", list(all_spider_specs(rs=(2, 3, 4))), ids=str)
def test_every_spider_matches_oracle(spec):
    kind, r, hname, quasi = spec
    g = spider(r, kind, HEADS[hname], quasi)
    seq = grundy_p4tidy(g)
    v = verify_sequence(g, seq.order)
    assert v.legal and v.maximal
    assert len(seq) == grundy_number(g)
    if quasi.endswith("K2bar"):
        assert len(seq) == len(grundy_p4tidy(spider(r, kind, HEADS[hname], "none")))


def test_recogniser_agrees_with_brute_force_on_modular_graphs():
    for g in atlas_graphs(7):
        if g.n < 4 or component_count(g) > 1 or component_count(complement(g)) > 1:
            continue
        assert (find_spider(g) is not None) == (brute_force_quasi_spider(g) is not None), g.edges()


def test_found_partitions_satisfy_the_definition():
    for kind, r, hname, quasi in all_spider_specs(rs=(2, 3, 4)):
        g = spider(r, kind, HEADS[hname], quasi)
        p = find_spider(g)
        assert p is not None and p.quasi == quasi and p.kind == kind
        S, C, H = p.S, p.C, p.H
        assert not any(g.has_edge(a, b) for a in S for b in S if a != b)
        assert all(g.has_edge(a, b) for a in C for b in C if a != b)
        assert all(g.has_edge(h, c) for h in H for c in C)
        assert not any(g.has_edge(h, s) for h in H for s in S)
        for i in range(r):
            for j in range(r):
                assert g.has_edge(S[i], C[j]) == ((i == j) if p.kind == THIN else (i != j))
        if p.extra is not None:
            twin = S[-1] if quasi.startswith("S") else C[-1]
            nx_, nt = set(g.nbrs[p.extra]), set(g.nbrs[twin])
            assert nx_ | {p.extra} == nt | {twin} if quasi.endswith("K2") else nx_ == nt


def test_random_p4tidy_graphs_match_oracle():
    rng = random.Random(12)
    for _ in range(80):
        g = random_p4tidy(rng, rng.randint(1, 10))
        assert is_p4tidy(g)
        seq = grundy_p4tidy(g)
        assert verify_sequence(g, seq.order).maximal
        assert len(seq) == grundy_number(g)
