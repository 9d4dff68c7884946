"""DP-coloring (correspondence coloring) of multigraphs.

Build and validate covers, decide exact colorability, compute DP-chromatic
numbers of small multigraphs, decide degree-colorability from block
structure with constructive witnesses, and verify edge-count bounds for
critical graphs and GDP-trees with exact rational arithmetic.
"""

from .census import (are_isomorphic, canonical_key, connected_multigraphs,
                     connected_simple_graphs, gdp_trees)
from .characterization import (ComponentVerdict, DegreeColorabilityVerdict,
                               assemble_witness, decide_degree_colorable,
                               decide_degree_colorable_any)
from .config import DEFAULT, Config
from .cover import (Cover, Transversal, Violation, build_bad_complete,
                    build_bad_cycle, enumerate_degree_covers, format_cover,
                    glue, is_valid_cover, iter_violations, parse_cover,
                    permute_colors, product_reduction, random_degree_cover,
                    reduce_list, validate_cover)
from .critical import (CriticalityReport, GdpPrecondition,
                       check_bound_multigraph, check_bound_simple,
                       check_critical, check_gdp_edge_bound, is_gallai_tree,
                       is_gdp_tree, simple_critical_coefficient)
from .errors import (CapExceeded, CoverInvalid, InternalInvariantError,
                     ParseError)
from .multigraph import (BlockDecomposition, CompletePower, CyclePower,
                         Multigraph, Other, blocks, classify_block,
                         format_multigraph, parse_multigraph)
from .solver import (SolveResult, check_transversal, chi_dp,
                     degree_colorable_oracle, find_uncolorable_cover,
                     greedy_color, solve)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition", "CapExceeded", "CompletePower", "ComponentVerdict",
    "Config", "Cover", "CoverInvalid", "CriticalityReport", "CyclePower",
    "DEFAULT", "DegreeColorabilityVerdict", "GdpPrecondition",
    "InternalInvariantError", "Multigraph", "Other", "ParseError",
    "SolveResult", "Transversal", "Violation", "are_isomorphic",
    "assemble_witness", "blocks", "build_bad_complete", "build_bad_cycle",
    "canonical_key", "check_bound_multigraph", "check_bound_simple",
    "check_critical", "check_gdp_edge_bound", "check_transversal", "chi_dp",
    "classify_block", "connected_multigraphs", "connected_simple_graphs",
    "decide_degree_colorable", "decide_degree_colorable_any",
    "degree_colorable_oracle", "enumerate_degree_covers", "find_uncolorable_cover",
    "format_cover", "format_multigraph", "gdp_trees", "glue", "greedy_color",
    "is_gallai_tree", "is_gdp_tree", "is_valid_cover", "iter_violations",
    "parse_cover", "parse_multigraph", "permute_colors", "product_reduction",
    "random_degree_cover", "reduce_list", "simple_critical_coefficient",
    "solve", "validate_cover",
]
