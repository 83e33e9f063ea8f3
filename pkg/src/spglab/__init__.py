"""spglab: a workbench for subset partition graphs."""

from .checks import (
    ALL_PROPERTIES,
    MAIN_PROPERTIES,
    CheckResult,
    PropertyReport,
    check_adjacency,
    check_base_abstraction,
    check_clf,
    check_clf_shape,
    check_d_connectedness,
    check_d_neighbors,
    check_d_regularity,
    check_dimension_reduction,
    check_endpoint_count,
    check_one_subset,
    check_spindle,
    check_strong_adjacency,
    check_ultraconnected,
    property_report,
)
from .core import (
    BaseAbstraction,
    ConnectedLayerFamily,
    DiameterResult,
    Layering,
    RestrictedView,
    Spg,
    SymbolSet,
    as_dset,
    base_layering,
    clf_to_base,
    clf_to_spg,
    contraction,
    diameter,
    distance,
    edge_addition,
    find_apices,
    make_base,
    make_clf,
    make_spg,
    path_order,
    restriction,
    spg_layering,
    spg_to_clf,
    spindle_length,
)
from .generators import (
    dual_graph,
    gale_facets,
    gen_cube_spg,
    gen_cyclic_construction,
    gen_figure1,
    gen_hirsch_path_clf,
    gen_spindle_family,
    hamiltonian_path,
)
from .oracle import (
    MaxClfResult,
    OracleBudget,
    brute_diameter,
    brute_dimension_reduction,
    brute_max_clf_diameter,
)
from .strategy import (
    Move,
    StrategyTrace,
    TraceStep,
    apply_move,
    candidate_moves,
    scored_candidate_moves,
    strategy_search,
    violations,
)

__version__ = "0.1.0"
