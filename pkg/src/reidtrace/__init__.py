"""Exact local Reidemeister traces on wedges of circles and tori."""

from .axioms import AXIOMS, AxiomReport, random_instance, run_trials, verify_axioms
from .classes import (
    DEFAULT_BUDGET,
    ClassId,
    Equivalence,
    InfiniteOrUndecidable,
    TraceElement,
    TwistedSetting,
    Verdict,
    canonical_rep,
    coefficient_sum,
    enumerate_classes,
    format_trace,
    lift_transform,
    parse_trace,
    project_rho,
    twisted_equiv,
)
from .errors import (
    DescriptorMismatch,
    IndexOutOfRange,
    NonIntegerTranslation,
    NonSquare,
    NotACoincidencePoint,
    ParseError,
    ReidtraceError,
    SingularDifference,
)
from .groupring import GroupRingElement, GroupRingMatrix, augment, ring_add, ring_mul, ring_trace
from .groups import (
    FreeAbelian,
    FreeGroup,
    GroupDescriptor,
    GroupElement,
    Homomorphism,
    format_element,
    group_inv,
    group_mul,
    hom_apply,
    parse_element,
    reduce_word,
    vector,
)
from .instances import format_torus, parse_classes, parse_torus
from .linalg import smith_normal_form
from .torus import (
    AdmissibleTuple,
    AffineTorusMap,
    CoincidencePoint,
    Region,
    coincidence_points,
    homotopy_transport,
    lefschetz_coincidence,
    lift_witness,
    local_reidemeister_trace,
    nielsen_number,
    point_class,
    point_index,
)
from .wedge import (
    ChainMapData,
    NielsenReport,
    WedgeSelfMap,
    chain_matrices,
    fox_derivative,
    format_wedge,
    lefschetz_number_wedge,
    nielsen_report,
    parse_wedge,
    reidemeister_trace_chain,
)

__version__ = "0.1.0"
