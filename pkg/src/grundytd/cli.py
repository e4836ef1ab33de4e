"""Command-line front end.

Exit codes: 0 ok, 1 ``verify`` found an illegal sequence, 2 parse/usage
error, 3 oracle cap exceeded with no structural algorithm available,
4 a forced ``--algo`` whose precondition fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .bdh import grundy_bdh, grundy_forest, is_bipartite_dh
from .bounds import bound_report, check_all_bounds
from .constructions import FAMILIES, FamilySpec, complete, generate, path, split_reduction
from .graph import Graph, GraphFormatError, format_edge_list, read_edge_list
from .modular import build_mdt
from .oracle import DEFAULT_CAP, OracleCapError, grundy_exact
from .p4tidy import classify_leaf, grundy_p4tidy, is_p4tidy
from .sequences import LegalSequence, certificate_lines, format_sequence, parse_sequence, verify_sequence
from .trees import grundy_tree, is_forest, is_tree

ALGORITHMS = ("forest", "tree", "bdh", "p4tidy", "exact")
EXIT_ILLEGAL, EXIT_PARSE, EXIT_CAP, EXIT_PRECONDITION = 1, 2, 3, 4


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Dispatch:
    chosen: str
    reason: str


def choose_algorithm(g: Graph, cap: int = DEFAULT_CAP) -> Dispatch:
    """Cheapest exact algorithm whose precondition holds: forest, bdh, p4tidy, exact."""
    if is_forest(g):
        if is_tree(g) and g.n >= 2:
            return Dispatch("tree", "connected and acyclic")
        return Dispatch("forest", "acyclic")
    if is_bipartite_dh(g):
        return Dispatch("bdh", "bipartite distance-hereditary")
    if is_p4tidy(g):
        return Dispatch("p4tidy", "every modular leaf is P4-tidy")
    if g.n <= cap:
        return Dispatch("exact", f"no structural class applies; n={g.n} <= cap {cap}")
    raise OracleCapError(f"no structural algorithm applies and n={g.n} exceeds the oracle cap {cap}")


def run_algorithm(g: Graph, name: str, cap: int = DEFAULT_CAP) -> LegalSequence:
    if name == "exact":
        return LegalSequence.of(g, grundy_exact(g, cap).witness)
    try:
        if name == "tree":
            return grundy_tree(g)[0]
        if name == "forest":
            return grundy_forest(g)
        if name == "bdh":
            if not is_bipartite_dh(g):
                raise PreconditionError("graph is not bipartite distance-hereditary")
            return grundy_bdh(g)
        if name == "p4tidy":
            return grundy_p4tidy(g)
    except PreconditionError:
        raise
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    raise ValueError(f"unknown algorithm {name!r}")


def compute(g: Graph, algo: Optional[str] = None, cap: int = DEFAULT_CAP) -> tuple[LegalSequence, str]:
    """Grundy sequence plus the tag of the algorithm that produced it."""
    name = algo or choose_algorithm(g, cap).chosen
    return run_algorithm(g, name, cap), name


def _named_graph(spec: str) -> Graph:
    named = {"none": Graph.empty(0), "K1": complete(1), "K2": complete(2), "K2bar": Graph.empty(2), "P4": path(4)}
    if spec in named:
        return named[spec]
    return read_edge_list(spec)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    g = read_edge_list(args.file)
    algo = "exact" if args.exact else args.algo
    try:
        seq, name = compute(g, algo, args.cap)
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"error: --algo {algo}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.json:
        verdict = verify_sequence(g, seq.order)
        print(json.dumps({
            "gamma": len(seq),
            "algorithm": name,
            "witness": list(seq.order),
            "footprints": {str(v): u for v, u in sorted(verdict.footprint.items())},
        }))
        return 0
    print(f"gamma_gr_t = {len(seq)}, algorithm: {name}")
    if args.witness:
        print(f"witness: {format_sequence(seq.order)}")
        for line in certificate_lines(g, seq.order):
            print(line)
    return 0


def cmd_verify(args) -> int:
    g = read_edge_list(args.file)
    with open(args.sequence) as fh:
        order = parse_sequence(fh.read())
    v = verify_sequence(g, order)
    if args.json:
        print(json.dumps({
            "legal": v.legal, "total_dominating": v.total_dominating, "maximal": v.maximal,
            "first_violation": v.first_violation, "reason": v.reason,
            "footprints": {str(a): b for a, b in sorted(v.footprint.items())},
        }))
    else:
        yn = lambda b: "yes" if b else "no"
        print(f"legal: {yn(v.legal)}")
        if v.legal:
            print(f"total_dominating: {yn(v.total_dominating)}")
            print(f"maximal: {yn(v.maximal)}")
            print(f"length: {len(order)}")
        else:
            print(f"first_violation: {v.first_violation} ({v.reason})")
    return 0 if v.legal else EXIT_ILLEGAL


def cmd_bounds(args) -> int:
    g = read_edge_list(args.file)
    report = bound_report(g)
    for line in report.lines():
        print(line)
    try:
        seq, name = compute(g, None, args.cap)
    except OracleCapError:
        print("gamma_gr_t = unknown (oracle cap exceeded)")
        return 0
    print(f"gamma_gr_t = {len(seq)}, algorithm: {name}")
    for check in check_all_bounds(g, len(seq), report):
        print(f"check {check.name}: {check.lhs} <= {check.rhs} {'holds' if check.holds else 'FAILS'}")
    return 0


def _describe_leaf(t) -> str:
    """Leaf class with partition vertex lists in root-graph ids."""
    cls = classify_leaf(t.graph)
    if cls.partition is None:
        return cls.tag
    p = cls.partition
    ids = lambda vs: [t.id_map[v] for v in vs]
    desc = f"SPIDER {p.kind} r={p.weight} quasi={p.quasi} S={ids(p.S)} C={ids(p.C)} H={ids(p.H)}"
    return desc if p.extra is None else f"{desc} extra={t.id_map[p.extra]}"


def cmd_decompose(args) -> int:
    g = read_edge_list(args.file)
    if g.n == 0:
        print("(empty graph)")
        return 0
    for line in build_mdt(g).render(lambda t: f"[{_describe_leaf(t)}]"):
        print(line)
    return 0


def cmd_classify(args) -> int:
    g = read_edge_list(args.file)
    if g.n == 0:
        print("p4tidy: yes")
        return 0
    for leaf in build_mdt(g).leaves():
        print(f"leaf {list(leaf.vertices)}: {_describe_leaf(leaf)}")
    # spider heads are checked recursively, so this can be "no" even when
    # every top-level leaf printed above is a spider
    print(f"p4tidy: {'yes' if is_p4tidy(g) else 'no'}")
    return 0


def cmd_generate(args) -> int:
    head = _named_graph(args.head) if args.head else None
    value = args.param
    f = args.family
    kw = dict(family=f, head=head, quasi=args.quasi, base=args.base)
    if f in ("path", "cycle", "star", "complete", "prism"):
        kw["n"] = value if value is not None else args.n
    elif f == "g5k":
        kw["k"] = value if value is not None else args.k
    elif f in ("thin_spider", "thick_spider", "quasi_spider"):
        kw["r"] = value if value is not None else args.r
    g = generate(FamilySpec(**kw))
    _emit(format_edge_list(g, comment=f"{f} {value if value is not None else ''}".strip()), args.output)
    return 0


def cmd_reduce_split(args) -> int:
    g = read_edge_list(args.file)
    h, _, _ = split_reduction(g)
    _emit(format_edge_list(h, comment=f"split reduction: v^1 = v, v^2 = {g.n} + v"), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grundytd", description="Grundy total dominating sequences")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute the Grundy total domination number")
    c.add_argument("file")
    c.add_argument("--exact", action="store_true", help="force the exhaustive oracle")
    c.add_argument("--algo", choices=ALGORITHMS)
    c.add_argument("--cap", type=int, default=DEFAULT_CAP)
    c.add_argument("--witness", action="store_true")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check a sequence file against a graph")
    v.add_argument("file")
    v.add_argument("sequence")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="auxiliary invariants and bound checks")
    b.add_argument("file")
    b.add_argument("--cap", type=int, default=DEFAULT_CAP)
    b.set_defaults(func=cmd_bounds)

    d = sub.add_parser("decompose", help="print the modular decomposition tree")
    d.add_argument("file")
    d.set_defaults(func=cmd_decompose)

    k = sub.add_parser("classify", help="P4-tidy class of every modular leaf")
    k.add_argument("file")
    k.set_defaults(func=cmd_classify)

    gen = sub.add_parser("generate", help="write a family member as an edge list")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("param", nargs="?", type=int, help="n, k or r depending on the family")
    gen.add_argument("--n", type=int, default=0)
    gen.add_argument("--k", type=int, default=0)
    gen.add_argument("--r", type=int, default=2)
    gen.add_argument("--head", help="none, K1, K2, K2bar, P4 or an edge-list file")
    gen.add_argument("--quasi", default="none")
    gen.add_argument("--base", default="thin", choices=("thin", "thick"))
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    s = sub.add_parser("reduce-split", help="write the split-graph doubling of a graph")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce_split)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
