"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line and then asserts, so
``pytest -s`` or ``pytest -v`` shows the verdicts even on success.  Every
witness produced along the way is fed to :func:`certify`, and criterion 10
reports the running tally.
"""

from __future__ import annotations

import random
import time


from grundytd.bdh import grundy_bdh, is_bipartite_dh
from grundytd.bounds import bound_report, check_all_bounds, matching_number, vertex_cover_number
from grundytd.constructions import FamilySpec, expected_gamma, g5k, prism, spider, split_reduction
from grundytd.graph import component_count, delete_vertices, disjoint_union, join, leaves_and_supports, twin_pair
from grundytd.modular import combine_join, combine_union, make_solution
from grundytd.oracle import grundy_exact
from grundytd.p4tidy import grundy_p4tidy
from grundytd.sequences import verify_sequence
from grundytd.trees import grundy_tree
from graphgen import (
    HEADS,
    all_spider_specs,
    atlas_graphs,
    grow_bdh,
    nonisomorphic_trees,
    random_graph,
    random_graph_with_edges,
    random_isolated_free,
    random_p4tidy,
    random_tree,
)

TALLY = {"checked": 0, "bad": 0}


def certify(g, order) -> bool:
    v = verify_sequence(g, order)
    ok = v.legal and v.maximal
    TALLY["checked"] += 1
    TALLY["bad"] += not ok
    return ok


def exact(g, cap=14):
    res = grundy_exact(g, cap)
    certify(g, res.witness)
    return res.length


def verdict(capsys, idx, title, failures, detail, elapsed, budget=None):
    ok = not failures and (budget is None or elapsed < budget)
    limit = f" (budget {budget:.0f}s)" if budget else ""
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {idx}: {title}: {detail}; {elapsed:.1f}s{limit}")
        for f in failures[:5]:
            print(f"    {f}")
    assert not failures, failures[:5]
    if budget is not None:
        assert elapsed < budget


def test_c01_tree_theorem_small(capsys):
    t0 = time.perf_counter()
    failures, count = [], 0
    for n in range(2, 11):
        for t in nonisomorphic_trees(n):
            count += 1
            seq, _ = grundy_tree(t)
            certify(t, seq.order)
            got, want, tau = len(seq), exact(t), vertex_cover_number(t)
            if not got == want == 2 * tau:
                failures.append(f"tree {t.edges()}: algo {got}, oracle {want}, 2tau {2 * tau}")
    verdict(capsys, 1, "trees n<=10 match oracle and 2*tau", failures, f"{count} trees", time.perf_counter() - t0, 300)


def test_c02_tree_formula_at_scale(capsys):
    t0 = time.perf_counter()
    rng = random.Random(2002)
    failures = []
    for _ in range(200):
        t = random_tree(rng, rng.randint(2, 200))
        seq, _ = grundy_tree(t)
        certify(t, seq.order)
        if len(seq) != 2 * matching_number(t):
            failures.append(f"n={t.n}: {len(seq)} vs 2nu {2 * matching_number(t)}")
    verdict(capsys, 2, "random trees n<=200 equal 2*nu", failures, "200 trees", time.perf_counter() - t0, 60)


def test_c03_no_three(capsys):
    t0 = time.perf_counter()
    failures, count, values = [], 0, set()
    for g in atlas_graphs(6):
        if g.n < 2 or component_count(g) != 1:
            continue
        count += 1
        gam = exact(g)
        values.add(gam)
        if gam in (1, 3) or gam < 2:
            failures.append(f"{g.edges()}: {gam}")
    verdict(capsys, 3, "connected graphs n<=6 avoid 1 and 3", failures,
            f"{count} graphs, values {sorted(values)}", time.perf_counter() - t0, 600)


def test_c04_realization(capsys):
    t0 = time.perf_counter()
    failures, seen = [], []
    for n in (2, 4, 5, 6, 7, 8):
        got = exact(prism(n), cap=16)
        seen.append(f"prism{n}={got}")
        if got != n or expected_gamma(FamilySpec("prism", n=n)) != n:
            failures.append(f"prism {n}: {got}")
    for k in (0, 1, 2):
        got = exact(g5k(k))
        seen.append(f"g5k{k}={got}")
        if got != 5 + 2 * k:
            failures.append(f"g5k {k}: {got}")
    verdict(capsys, 4, "prisms and G_{5+2k} realise their targets", failures, " ".join(seen), time.perf_counter() - t0)


def test_c05_split_doubling(capsys):
    t0 = time.perf_counter()
    rng = random.Random(2005)
    failures = []
    for _ in range(100):
        g = random_isolated_free(rng, 6)
        h, _, _ = split_reduction(g)
        a, b = exact(g), exact(h)
        if b != 2 * a:
            failures.append(f"{g.edges()}: {a} -> {b}")
    verdict(capsys, 5, "split reduction doubles gamma", failures, "100 graphs", time.perf_counter() - t0)


def test_c06_bounds_suite(capsys):
    t0 = time.perf_counter()
    rng = random.Random(2006)
    failures, checks = [], 0
    for _ in range(300):
        g = random_graph_with_edges(rng, 10)
        gam = exact(g)
        for c in check_all_bounds(g, gam, bound_report(g)):
            checks += 1
            if not c.holds:
                failures.append(f"{g.edges()}: {c.name} {c.lhs} > {c.rhs}")
        for v in range(g.n):
            sub = exact(delete_vertices(g, {v})[0])
            checks += 1
            if not gam - 2 <= sub <= gam:
                failures.append(f"{g.edges()}: deleting {v} gives {sub} vs {gam}")
        t = twin_pair(g)
        if t and t[2] == "false":
            checks += 1
            if exact(delete_vertices(g, {t[1]})[0]) != gam:
                failures.append(f"{g.edges()}: false twin {t[1]}")
        for s in {sup for _, sup in leaves_and_supports(g)}:
            drop = {s} | {u for u in g.nbrs[s] if g.degree(u) == 1}
            checks += 1
            if exact(delete_vertices(g, drop)[0]) + 2 != gam:
                failures.append(f"{g.edges()}: pendant reduction at support {s}")
    verdict(capsys, 6, "bounds, sandwich, twin and pendant identities", failures,
            f"300 graphs, {checks} checks", time.perf_counter() - t0)


def test_c07_modular_combination(capsys):
    t0 = time.perf_counter()
    rng = random.Random(2007)
    failures = []
    for _ in range(200):
        n1 = rng.randint(1, 9)
        n2 = rng.randint(1, 10 - n1)
        a = random_graph(rng, n1, rng.uniform(0, 1))
        b = random_graph(rng, n2, rng.uniform(0, 1))
        s1 = make_solution(a, grundy_exact(a).witness)
        s2 = make_solution(b, grundy_exact(b).witness).shifted(n1)
        for name, g, s in (("union", disjoint_union(a, b), combine_union(s1, s2)),
                           ("join", join(a, b), combine_join(s1, s2))):
            if not certify(g, s.witness):
                failures.append(f"{name} witness illegal: {a.edges()} / {b.edges()}")
            if s.length != exact(g):
                failures.append(f"{name} length {s.length}: {a.edges()} / {b.edges()}")
    verdict(capsys, 7, "union and join combination", failures, "200 pairs", time.perf_counter() - t0)


def test_c08_bdh_equivalence(capsys):
    t0 = time.perf_counter()
    rng = random.Random(2008)
    failures = []
    for _ in range(200):
        g = grow_bdh(rng, rng.randint(1, 12))
        if not is_bipartite_dh(g):
            failures.append(f"generator produced a non-BDH graph {g.edges()}")
            continue
        seq = grundy_bdh(g)
        certify(g, seq.order)
        if len(seq) != exact(g):
            failures.append(f"{g.edges()}: {len(seq)}")
    verdict(capsys, 8, "bipartite distance-hereditary graphs", failures, "200 graphs", time.perf_counter() - t0)


def test_c09_p4tidy_equivalence(capsys):
    t0 = time.perf_counter()
    rng = random.Random(2009)
    failures, count = [], 0
    corpus = [random_p4tidy(rng, rng.randint(1, 11)) for _ in range(200)]
    corpus += [spider(r, kind, HEADS[h], q) for kind, r, h, q in all_spider_specs(rs=(2, 3))]
    for g in corpus:
        count += 1
        seq = grundy_p4tidy(g)
        certify(g, seq.order)
        if len(seq) != exact(g):
            failures.append(f"{g.edges()}: {len(seq)}")
    verdict(capsys, 9, "P4-tidy graphs and all small spiders", failures, f"{count} graphs", time.perf_counter() - t0)


def test_c10_certificate_soundness(capsys):
    t0 = time.perf_counter()
    if TALLY["checked"] == 0:
        # run on its own: certify a fresh mixed corpus
        rng = random.Random(2010)
        for _ in range(50):
            t = random_tree(rng, rng.randint(2, 30))
            certify(t, grundy_tree(t)[0].order)
            g = grow_bdh(rng, rng.randint(1, 10))
            certify(g, grundy_bdh(g).order)
            g = random_p4tidy(rng, rng.randint(1, 10))
            certify(g, grundy_p4tidy(g).order)
            exact(random_graph(rng, rng.randint(1, 9), 0.4))
    failures = [f"{TALLY['bad']} witnesses failed"] if TALLY["bad"] else []
    verdict(capsys, 10, "every emitted witness is legal and maximal", failures,
            f"{TALLY['checked']} witnesses checked", time.perf_counter() - t0)


def test_smoke_large_tree(capsys):
    rng = random.Random(2011)
    t = random_tree(rng, 100_000)
    t0 = time.perf_counter()
    seq, _ = grundy_tree(t)
    elapsed = time.perf_counter() - t0
    failures = [] if certify(t, seq.order) else ["witness failed"]
    verdict(capsys, "smoke", "grundy_tree on a 10^5-vertex tree", failures, f"length {len(seq)}", elapsed, 2)
