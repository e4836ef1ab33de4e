"""Grundy total dominating sequences: exact search, structural algorithms
for trees, bipartite distance-hereditary and P4-tidy graphs, bounds and
constructions."""

from .graph import Graph, parse_edge_list, format_edge_list, read_edge_list, write_edge_list
from .sequences import LegalSequence, SequenceVerdict, concatenate, eta, verify_sequence
from .oracle import OracleCapError, OracleResult, grundy_exact
from .trees import grundy_tree, tree_vertex_cover
from .bdh import grundy_bdh, grundy_forest, pruning_sequence
from .modular import build_mdt, combine_join, combine_union, solve_via_mdt
from .p4tidy import classify_leaf, grundy_p4tidy, grundy_spider
from .constructions import FamilySpec, expected_gamma, generate, split_reduction

__all__ = [
    "Graph", "parse_edge_list", "format_edge_list", "read_edge_list", "write_edge_list",
    "LegalSequence", "SequenceVerdict", "concatenate", "eta", "verify_sequence",
    "OracleCapError", "OracleResult", "grundy_exact",
    "grundy_tree", "tree_vertex_cover",
    "grundy_bdh", "grundy_forest", "pruning_sequence",
    "build_mdt", "combine_join", "combine_union", "solve_via_mdt",
    "classify_leaf", "grundy_p4tidy", "grundy_spider",
    "FamilySpec", "expected_gamma", "generate", "split_reduction",
]
