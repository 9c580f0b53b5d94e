"""Exact computation of normal cones, Segre classes, and virtual
fundamental classes of subschemes of projective space."""

from .chow import (
    ChernSeries,
    ChowClass,
    blowup_pairing,
    cap,
    chern_of_twists,
    dim_part,
    residual_contribution,
    series_inverse,
    series_mul,
    series_power,
)
from .cones import (
    ConePresentation,
    SchemePresentation,
    bidegrees,
    exceptional_ideal,
    normal_cone_ideal,
    projectivized_cycle,
    rees_ideal,
    scheme,
)
from .context import Budget, Context, DEFAULT_CONTEXT
from .deform import FamilyIdeal, defvb_family, deformation_chart, family_fiber, flat_limit
from .errors import (
    BindingError,
    BudgetExceededError,
    GeometryError,
    ParseError,
    UnluckyDrawError,
    VirtconeError,
)
from .ideals import (
    Ideal,
    contains,
    eliminate,
    groebner_basis,
    hilbert_dim_deg,
    ideal,
    ideal_equal,
    ideal_quotient,
    intersect,
    saturate,
    zero_dim_count,
)
from .poly import Polynomial, PolyRing, parse_poly, poly_str
from .rationals import Q
from .segre import projective_degrees, segre_ambient, segre_in, segre_of_cone
from .virtual import (
    ObstructionTwists,
    component_point_fiber,
    component_subbundle,
    excess_virtual_class,
    virtual_class,
)

__all__ = [name for name in dir() if not name.startswith("_")]
