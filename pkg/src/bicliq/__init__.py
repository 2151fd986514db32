"""Biclique partitions of co-chordal graphs.

Quick start::

    >>> from bicliq import Graph, partition_auto
    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> p, mc = partition_auto(c4)
    >>> list(p), mc
    ([Biclique([0, 2]x[1, 3])], 2)
"""

from .cliques import (
    CliqueTree,
    build_clique_tree,
    is_clique_vertex_irreducible,
    is_split,
    max_independent_set_chordal,
    maximal_cliques_chordal,
    mc,
    verify_clique_tree,
)
from .estimator import BicliquePartitioner
from .exact import (
    BoundsReport,
    ExactResult,
    bounds_report,
    bp_monotonicity_check,
    exact_bp,
    lower_bound_omega,
)
from .generators import GenSpec, gen, gen_co_chordal
from .graph import Graph, complement, induced_subgraph, is_clique, is_independent_set
from .heuristics import (
    EdgeChoiceStrategy,
    NotCoChordalError,
    partition_auto,
    partition_via_clique_tree,
    partition_via_lexbfs,
)
from .ordering import NotChordalError, VertexOrdering, is_chordal, is_peo, lexbfs
from .partition import (
    Biclique,
    BicliquePartition,
    Verdict,
    decomposition_edges,
    is_biclique_subgraph,
    is_partitioned_biclique,
    verify_partition,
)

__all__ = [
    "Biclique",
    "BicliquePartition",
    "BicliquePartitioner",
    "BoundsReport",
    "CliqueTree",
    "EdgeChoiceStrategy",
    "ExactResult",
    "GenSpec",
    "Graph",
    "NotChordalError",
    "NotCoChordalError",
    "Verdict",
    "VertexOrdering",
    "bounds_report",
    "bp_monotonicity_check",
    "build_clique_tree",
    "complement",
    "decomposition_edges",
    "exact_bp",
    "gen",
    "gen_co_chordal",
    "induced_subgraph",
    "is_biclique_subgraph",
    "is_chordal",
    "is_clique",
    "is_clique_vertex_irreducible",
    "is_independent_set",
    "is_partitioned_biclique",
    "is_peo",
    "is_split",
    "lexbfs",
    "lower_bound_omega",
    "max_independent_set_chordal",
    "maximal_cliques_chordal",
    "mc",
    "partition_auto",
    "partition_via_clique_tree",
    "partition_via_lexbfs",
    "verify_clique_tree",
    "verify_partition",
]
