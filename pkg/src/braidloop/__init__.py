"""Loop invariants of closed braids in the solid torus."""

from .braid import BraidError, BraidWord, cable, garside_word, is_knot, parse_word, permutation, transform
from .conjugacy import Verdict, distinguish, invertibility_test, tables_equivalent
from .diagram import build_diagram, gauss_diagram, homological_marking, w_invariant
from .invariants import analyze, character_table_deg1, gamma_deg1, gamma_table, star_length_lower_bound
from .loop import canonical_loop, push_letter
from .trace import local_system_action, trace_circles

__all__ = [
    "BraidError", "BraidWord", "Verdict", "analyze", "build_diagram", "cable", "canonical_loop",
    "character_table_deg1", "distinguish", "gamma_deg1", "gamma_table", "garside_word",
    "gauss_diagram", "homological_marking", "invertibility_test", "is_knot", "local_system_action",
    "parse_word", "permutation", "push_letter", "star_length_lower_bound", "tables_equivalent",
    "trace_circles", "transform", "w_invariant",
]
