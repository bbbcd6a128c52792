"""Two-colorings without monochromatic k-cycles: NAE-SAT reductions, gadgets and a decider."""

from .decider import check_forcing, decide_col, dpll_solve, encode_nae_cycles
from .formula import Formula, Literal, brute_force_nae, eval_nae, pad_to_width, parse_dimacs, serialize_dimacs
from .gadgets import Gadget, k4_loop, k4_string, tree_gadget, verify_super_edge
from .graph import Graph, brute_force_coloring, enumerate_k_cycles, is_valid_coloring
from .reduction import predicted_sizes, reduce, reduce_necklace
from .search import search_min_gadget

__all__ = [
    "Formula", "Literal", "Graph", "Gadget",
    "parse_dimacs", "serialize_dimacs", "eval_nae", "brute_force_nae", "pad_to_width",
    "enumerate_k_cycles", "is_valid_coloring", "brute_force_coloring",
    "k4_string", "k4_loop", "tree_gadget", "verify_super_edge",
    "reduce", "reduce_necklace", "predicted_sizes",
    "encode_nae_cycles", "dpll_solve", "decide_col", "check_forcing",
    "search_min_gadget",
]
