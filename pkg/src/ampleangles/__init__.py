"""Exact bodies of ample angles for log pairs on rational surfaces.

The package models rational surfaces combinatorially (P^2 or a Hirzebruch
surface plus point blow-ups), decides ampleness against Mori generators,
and computes the body of ample angles of a log pair as an exact rational
polyhedron, classifying the pair as NotALF / ALF / StronglyALF.
"""

from .anglebody import (
    AffineAngleMap,
    AmpleAngleBody,
    ample_angle_map,
    body_from_constraints,
    compute_AA,
    is_strongly_ALF,
)
from .errors import (
    AmpleAnglesError,
    DimensionMismatch,
    IncompleteMoriCone,
    PairFileError,
    SncViolation,
    UnboundedPolyhedron,
    UnknownCurve,
)
from .fme import BACKEND as FME_BACKEND
from .pairfile import emit_pair, pair_to_json, parse_pair
from .pairs import (
    BoundaryShape,
    DualGraph,
    FAMILY_KINDS,
    LogPair,
    PairStatus,
    Verdict,
    blow_up_type_i,
    blow_up_type_ii,
    boundary_nodes,
    boundary_shape,
    classify,
    closed_form_body,
    dual_graph,
    family,
    is_minimal,
    minus_one_incidence_check,
    obstruction_same_fiber,
    verify_theorems,
)
from .polyhedra import LinearConstraint, RationalPolyhedron, box_constraints
from .positivity import (
    MoriGenerators,
    is_ample,
    is_nef,
    mori_generators,
    negative_curves,
)
from .surfaces import (
    Base,
    BlowUpSpec,
    CurveCatalog,
    CurveRecord,
    DivisorClass,
    SurfaceModel,
    base_catalog,
    basis_class,
    blow_up,
    canonical_class,
    class_from_coeffs,
    format_class,
    gram_matrix,
    intersect,
    pullback,
)

__version__ = "0.1.0"
