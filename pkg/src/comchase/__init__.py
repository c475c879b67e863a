"""comchase: machine-checked commutative-diagram proofs on finite quivers."""

from .errors import (
    BiproofIllFormedError,
    CapExceededError,
    CycleError,
    IllFormedError,
    InvalidBipathError,
    ParseError,
    RestrIllFormedError,
    SortError,
)
from .quiver import (
    Path,
    Quiver,
    Subquiver,
    VertexPermutation,
    all_paths,
    is_path,
    path_quiver,
    quiver_dual,
    quiver_restr,
    quiver_wf,
    reachable,
    subquiver_compose,
    subquiver_wf,
    to_dot,
    topo_order,
)
from .pathrel import Bipath, PathPartition, closure, enumerate_bipaths, is_full, subquiver_bipaths
from .commerge import (
    Assumption,
    BipathAssm,
    FrontierGraph,
    SubquiverAssm,
    build_frontier_graph,
    commerge,
    commerge_report,
    frontier_arcs,
)
from .comcut import FirstArcMatrix, comcut, extract_path, update_first_arc_matrix
from .formulas import (
    And,
    Commute,
    EqD,
    Exists,
    Forall,
    Formula,
    FTRUE,
    FTrue,
    Imply,
    Predicate,
    Restr,
    Term,
    Var,
    apply_predicate,
    corpus,
    fill_vertices,
    formula_dual,
    formula_wf,
    term_sort,
)
from .models import (
    DiagramModel,
    FinCat,
    FinCatDiagram,
    FinCatModel,
    battery,
    battery_models,
    enumerate_diagrams,
    fincat_wf,
    formula_eval,
    model_dual,
    path_composite,
)
from .kernel import (
    Biproof,
    LemmaRegistry,
    Proof,
    Sequent,
    Tactic,
    apply_tactic,
    check_biproof,
    check_proof,
    check_proof_report,
    dual_proof,
    dual_sequent,
    dual_tactic,
    sequent_of_formula,
)

__version__ = "0.1.0"
