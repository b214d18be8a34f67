"""Decorated cup-diagram calculus.

Diagram enumeration and rendering, orientations and degrees, the local
move graph with its cup forests and cell censuses, exact quotient-ring
cohomology (component rings, intersections, the equalizer centre and
presentation rings with their deformations), fixed-point tables, and
the full stack of two-row domino-tableau bijections.
"""

__version__ = "0.1.0"

from .diagrams import (
    CapDiagram,
    Cup,
    CupDiagram,
    DiagramError,
    DiagramSet,
    DiagramSyntaxError,
    InvalidDiagramError,
    Ray,
    dot_parity_involution,
    encode,
    enumerate_diagrams,
    from_json,
    maximal_diagrams,
    parse_dsl,
    render,
    validate,
)
from .orientation import (
    ComponentDecomposition,
    InconsistentOrientationError,
    OrientedCircleDiagram,
    Weight,
    cup_of_weight,
    decompose,
    degree_zero_weight,
    diagram_degree,
    half_degree,
    is_orientable,
    is_oriented,
    min_degree_element,
    orient_circle_diagram,
    orientations_of_cup,
)
from .movegraph import (
    CupForest,
    Move,
    MoveGraph,
    NoFiniteDistanceError,
    boundary_census,
    cell_census,
    cup_forest,
    distance,
    free_cell_count,
    geodesic_meet,
    move_graph,
    nesting_census,
    predecessors,
    successors,
    total_order,
)
from .ringcalc import (
    BasisDictionary,
    CentreBasis,
    GammaMap,
    LinearMap,
    NotOrientableError,
    QuotientPresentation,
    SquarefreeElement,
    centre,
    component_quotient,
    diagram_basis_dictionary,
    gamma_maps,
    intersection_quotient,
    restriction_maps,
)
from .springer import (
    FixedPointTable,
    GradedDimension,
    MalformedIndexSetError,
    PresentationRing,
    UnequalRowShapeError,
    arc_algebra_graded_dimension,
    arc_algebra_graded_dimension_closed_form,
    equivariant_specialization,
    filtration_census,
    fixed_point_table,
    index_set_of_weight,
    presentation_ring,
    weight_of_index_set,
)
from .tableaux import (
    Bitableau,
    Cluster,
    Domino,
    DominoTableau,
    InadmissibleShapeError,
    NotStandardError,
    STable,
    ShapeMismatchError,
    SignedDominoTableau,
    bitableau_of_cup,
    cl_class,
    clusters,
    cup_of_bitableau,
    cup_to_stable,
    cups_to_std,
    cyc,
    cyc_inverse,
    domino_tableau,
    enumerate_adt,
    enumerate_dt,
    enumerate_signed,
    enumerate_stables,
    from_cup,
    is_admissible,
    signed_domino_tableau,
    stable,
    stable_to_cup,
    std_to_cups,
    to_cup,
)
from .selftest import SelfTestReport, selftest
