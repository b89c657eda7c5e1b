"""Flower graphs: exact resistance closed forms with a numeric oracle.

Construct flowers from any connected base graph, evaluate pairwise effective
resistance, Kirchhoff index and Kemeny's constant in exact rational
arithmetic, and cross-check everything against a dense Laplacian solver.
"""

from .complete import (
    CompleteFlowerParams,
    PairCase,
    case_for_locators,
    cf_kemeny,
    cf_kirchhoff,
    cf_max_resistance,
    cf_pair_resistance,
    cf_resistance,
    complete_flower_spec,
    sunflower_kemeny,
    sunflower_kirchhoff,
    sunflower_resistance,
)
from .cycle import (
    CycleFlowerParams,
    CyclePairPosition,
    cycle_flower_spec,
    cycle_resistance,
    gs_kemeny,
    gs_kirchhoff,
    gs_pair_resistance,
    gs_resistance,
    position_for_locators,
)
from .exact import Rational, format_rational, rationalize
from .flower import (
    BaseResBundle,
    Flower,
    FlowerLocator,
    FlowerSpec,
    MaxResistance,
    base_kemeny,
    base_kirchhoff,
    base_resistance_table,
    build_flower,
    canonical_locator,
    flower_kemeny_exact,
    flower_kirchhoff_exact,
    flower_resistance,
    flower_resistance_cross,
    flower_resistance_same,
    kemeny_bounds,
    kirchhoff_bounds,
    locator,
    max_diff_sequence,
    max_resistance_search,
    normalized_petal_separation,
)
from .graphs import (
    Graph,
    GraphStats,
    complete_graph,
    cycle_graph,
    format_edge_list,
    graph_from_edge_list,
    graph_stats,
    laplacian,
    parse_edge_list,
    path_graph,
    petersen_graph,
    read_edge_list,
)
from .oracle import (
    grounded_potentials,
    kemeny_numeric,
    kirchhoff_numeric,
    metric_violations,
    resistance,
    resistance_matrix,
    values_close,
)
from .separation import TwoSepBundle, compose_one_sep, compose_two_sep

__version__ = "0.1.0"

__all__ = [
    "BaseResBundle",
    "CompleteFlowerParams",
    "CycleFlowerParams",
    "CyclePairPosition",
    "Flower",
    "FlowerLocator",
    "FlowerSpec",
    "Graph",
    "GraphStats",
    "MaxResistance",
    "PairCase",
    "Rational",
    "TwoSepBundle",
    "base_kemeny",
    "base_kirchhoff",
    "base_resistance_table",
    "build_flower",
    "canonical_locator",
    "case_for_locators",
    "cf_kemeny",
    "cf_kirchhoff",
    "cf_max_resistance",
    "cf_pair_resistance",
    "cf_resistance",
    "complete_flower_spec",
    "complete_graph",
    "compose_one_sep",
    "compose_two_sep",
    "cycle_flower_spec",
    "cycle_graph",
    "cycle_resistance",
    "flower_kemeny_exact",
    "flower_kirchhoff_exact",
    "flower_resistance",
    "flower_resistance_cross",
    "flower_resistance_same",
    "format_edge_list",
    "format_rational",
    "graph_from_edge_list",
    "graph_stats",
    "grounded_potentials",
    "gs_kemeny",
    "gs_kirchhoff",
    "gs_pair_resistance",
    "gs_resistance",
    "kemeny_bounds",
    "kemeny_numeric",
    "kirchhoff_bounds",
    "kirchhoff_numeric",
    "laplacian",
    "locator",
    "max_diff_sequence",
    "max_resistance_search",
    "metric_violations",
    "normalized_petal_separation",
    "parse_edge_list",
    "path_graph",
    "petersen_graph",
    "position_for_locators",
    "rationalize",
    "read_edge_list",
    "resistance",
    "resistance_matrix",
    "sunflower_kemeny",
    "sunflower_kirchhoff",
    "sunflower_resistance",
    "values_close",
]
