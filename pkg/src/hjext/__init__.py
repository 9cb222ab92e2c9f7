"""Finite combinatorics of extended Hales-Jewett lines.

Located words, combinatorial and extended lines, the reductions that map
them to integer configurations ``b (a + i d)^j``, and a search engine for
monochromatic witnesses, avoiding colourings and minimal universe sizes.
"""
from .configurations import (
    ConfigFamily,
    ExtendedLine,
    Line,
    ap_family,
    bad_pattern_set,
    combinatorial_line,
    enumerate_extended_lines,
    extended_line_points,
    geo_arith_set,
    list_family,
    plain_family,
    power_grid,
    s_grid,
)
from .reductions import ADDITIVE, MULTIPLICATIVE, Reduction, affine, derived_params, identity_check, pullback_coloring, reduce
from .search import (
    Coloring,
    Exceeded,
    GridPattern,
    Hypergraph,
    avoidance_search,
    build_hypergraph,
    export_cnf,
    find_witness,
    grid_counterexample_search,
    minimal_N,
    verify_partition,
)
from .words import (
    EMPTY,
    VAR,
    Alphabet,
    LocatedWord,
    combine,
    decompose_variable_word,
    enumerate_universe,
    rank,
    substitute,
    unrank,
)

__version__ = "0.1.0"

__all__ = [
    "ADDITIVE",
    "affine",
    "Alphabet",
    "ap_family",
    "avoidance_search",
    "bad_pattern_set",
    "build_hypergraph",
    "Coloring",
    "combinatorial_line",
    "combine",
    "ConfigFamily",
    "decompose_variable_word",
    "derived_params",
    "EMPTY",
    "enumerate_extended_lines",
    "enumerate_universe",
    "Exceeded",
    "export_cnf",
    "extended_line_points",
    "ExtendedLine",
    "find_witness",
    "geo_arith_set",
    "grid_counterexample_search",
    "GridPattern",
    "Hypergraph",
    "identity_check",
    "Line",
    "list_family",
    "LocatedWord",
    "minimal_N",
    "MULTIPLICATIVE",
    "plain_family",
    "power_grid",
    "pullback_coloring",
    "rank",
    "reduce",
    "Reduction",
    "s_grid",
    "substitute",
    "unrank",
    "VAR",
    "verify_partition",
]
