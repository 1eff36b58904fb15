"""Root-free computations in Coxeter groups: reflections, maximal dihedral
reflection subgroups, and lattice audits of short absolute-order intervals."""

from .core import (
    IDENTITY,
    INF,
    CoxeterSystem,
    Element,
    affine_A2,
    coxeter_element,
    dihedral,
    parse_coxeter_matrix,
    parse_word,
    triangle,
    type_A,
    type_B,
    type_H3,
)
from .errors import CapExceeded, CoxeterError, DomainError, InvariantViolation, ParseError
from .reflections import (
    Reflection,
    absolute_le,
    as_reflection,
    enumerate_reflections,
    inversion_set,
    is_reflection,
    palindromize,
    reflection_length,
)
from .dihedral import (
    MaxDihedral,
    RankTwoElement,
    alternating_exponent,
    canonical_pair,
    enumerate_R_w,
    member_max_dihedral,
    rank_two,
    refl_in_max_dihedral,
)
from .absolute_order import IntervalPoset, build_interval, check_lattice, find_bowties, meet_join, to_dot
from .interval_group import Presentation, divisor_balance, emit_presentation

__version__ = "0.1.0"
