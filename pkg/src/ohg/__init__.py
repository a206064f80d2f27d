"""Analysis of orthogonality hypergraphs via their two-valued states.

The package enumerates all two-valued states of a hypergraph of contexts,
classifies separability, reconstructs hypergraphs from their state tables,
searches for noncontextual colorings, builds the gadget compositions behind
those results, and verifies vector labelings. The ``ohg`` command exposes the
same operations on text files.
"""

from .core import (
    FourCycle,
    Graph,
    Hypergraph,
    ShapeReport,
    build,
    four_cycle_lint,
    is_isomorphic,
    maximal_cliques,
    shape,
    two_section,
)
from .errors import OhgError
from .states import (
    GadgetProfile,
    GadgetScan,
    StateClassification,
    TravisMatrix,
    TwoValuedState,
    classify,
    count_states,
    enumerate_states,
    gadget_profile,
    gadget_scan,
)
from .reconstruction import (
    ReconstructionResult,
    Verdict,
    adjacency_from_states,
    evaluate as evaluate_reconstruction,
    reconstruct,
    travis_equivalent,
    verdict,
)
from .coloring import (
    Coloring,
    PartitionSystem,
    RowSelection,
    algorithm1,
    brooks_bound,
    color_to_state,
    coloring_from_partition,
    exact_chromatic,
    exact_coloring,
    partition_from_coloring,
    partition_from_rows,
    relaxed_coloring,
    verify_rows,
)
from .gadgets import (
    BindSpec,
    Fixture,
    FIXTURE_NAMES,
    bind,
    build_fig4,
    fixture,
    layer,
    predicted_bind_count,
)
from .geometry import ForReport, VectorLabeling, verify_for

__version__ = "0.1.0"

__all__ = [
    "BindSpec",
    "Coloring",
    "FIXTURE_NAMES",
    "Fixture",
    "ForReport",
    "FourCycle",
    "GadgetProfile",
    "GadgetScan",
    "Graph",
    "Hypergraph",
    "OhgError",
    "PartitionSystem",
    "ReconstructionResult",
    "RowSelection",
    "ShapeReport",
    "StateClassification",
    "TravisMatrix",
    "TwoValuedState",
    "VectorLabeling",
    "Verdict",
    "adjacency_from_states",
    "algorithm1",
    "bind",
    "brooks_bound",
    "build",
    "build_fig4",
    "classify",
    "color_to_state",
    "coloring_from_partition",
    "count_states",
    "enumerate_states",
    "evaluate_reconstruction",
    "exact_chromatic",
    "exact_coloring",
    "fixture",
    "four_cycle_lint",
    "gadget_profile",
    "gadget_scan",
    "is_isomorphic",
    "layer",
    "maximal_cliques",
    "partition_from_coloring",
    "partition_from_rows",
    "predicted_bind_count",
    "reconstruct",
    "relaxed_coloring",
    "shape",
    "travis_equivalent",
    "two_section",
    "verdict",
    "verify_for",
    "verify_rows",
]
