"""Arc valuations on affine n-space over an exact field."""

from .arcs import (
    Arc,
    ArcError,
    TrivialArcError,
    is_nonsingular,
    is_trivial,
    normalization_index,
    ord_ideal,
    ord_poly,
    realized_orders,
)
from .blowup import (
    BlowupRecord,
    CenterSequence,
    PrecisionExhaustedError,
    blowup_lift,
    center_sequence,
    first_divergence,
    lift_along,
)
from .estimator import ArcSetClassifier, ArcValuation, check_arc, check_polys
from .fields import QQ, FieldError, ModP, PrimeField, field_from_name
from .harness import (
    EnumerationTooLargeError,
    MembershipReport,
    NotNonsingularError,
    check_base_case,
    check_theorem,
    enumerate_arcs,
)
from .hne import HneResult, NotNormalizedError, eval_valuation, hne_expand, kernel_generators
from .ideals import (
    aq_generators,
    cont_membership,
    f_poly,
    iq_generators,
    jet_point,
    valuation_ideal_contains,
    vIq_membership,
)
from .io import ArcDocument, DocumentError, dump_document, load_arc, parse_document, save_arc
from .poly import JetPoly, Poly, PolyParseError, parse_poly
from .reparam import NotReparametrizationError, ReparamResult, solve_reparam
from .series import (
    AtLeast,
    Finite,
    Order,
    Series,
    SeriesError,
    UnitRootError,
    comp_inverse,
    compose,
    unit_inverse,
    unit_root,
)

__version__ = "0.1.0"
