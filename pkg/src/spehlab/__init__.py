"""Exact multisegment calculus for Speh representations."""

from .core import (
    DEFAULT_LINE,
    UNIT,
    Multisegment,
    ParseError,
    Point,
    Segment,
    Stats,
    exponent,
    format_multisegment,
    linked,
    multisegment_from_json,
    multisegment_to_json,
    parse_multisegment,
    parse_points,
    seg_from_begin,
    seg_from_end,
    segment,
    stats,
)
from .mwa import check_P, check_P_prime, mwa_dual, mwa_dual_with_choices
from .poset import downset, enumerate_with_support, hasse, is_leq, is_lt, successors_down
from .ring import RingElement, degree, dominant_monomial, format_ring, parse_ring, reflect, twist
from .speh import (
    SpehParams,
    VerificationReport,
    bar_u,
    char_F,
    dodgson_check,
    leading_check,
    rect,
    theorem_a_check,
    theorem_i_core,
    theorem_ii_core,
)

__version__ = "0.1.0"
