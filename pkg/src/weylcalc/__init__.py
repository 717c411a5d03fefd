"""weylcalc: exact multisegment combinatorics for standard modules.

The package computes with segments [i, j], l-weights in the free
abelian group on segment generators, ordered multisegments and their
crossing calculus, closure sets, snake-path q-characters, and the
module-theoretic decision procedures built on top of them.
"""

from .closures import (
    ClosureSet,
    canonical_closed,
    closed_elements,
    closure,
    dominant_ancestor,
    is_closed,
)
from .errors import (
    IndexOutOfRange,
    InvalidRoot,
    InvalidSegment,
    NotDominant,
    NotInRootLattice,
    ParseError,
    PreconditionViolated,
    RangeError,
    WeylcalcError,
)
from .lweights import (
    LWeight,
    RootVector,
    alpha,
    compose_roots,
    decompose_into_roots,
    dominance_leq,
    lweight_of_segment,
)
from .multisegments import (
    Multisegment,
    connected,
    dual_left,
    dual_right,
    in_minus_order,
    in_plus_order,
    iota_at,
    iota_minus,
    iota_plus,
    is_doubly_sorted,
    normal_form,
    sort_minus,
    sort_plus,
    span,
    swap,
    tau,
    tau_word,
    weight_of,
)
from .qchars import (
    QChar,
    corners,
    enumerate_paths,
    fundamental_qchar,
    pair_simple_qchar,
    path_weight,
    soclehom_weight,
    weyl_qchar,
)
from .segments import (
    Segment,
    check_valid,
    is_degenerate,
    params_of_segment,
    segment_of_params,
)
from .weyl import (
    ExtCertificate,
    ExtVerdict,
    MixedWeylMaps,
    SocleSummand,
    ext_vanishing,
    hom_dim,
    is_irreducible_weyl,
    mixed_weyl_maps,
    socle,
    subcategory_membership,
    weyl_dominant_weights,
    weylpermute_check,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureSet",
    "ExtCertificate",
    "ExtVerdict",
    "IndexOutOfRange",
    "InvalidRoot",
    "InvalidSegment",
    "LWeight",
    "MixedWeylMaps",
    "Multisegment",
    "NotDominant",
    "NotInRootLattice",
    "ParseError",
    "PreconditionViolated",
    "QChar",
    "RangeError",
    "RootVector",
    "Segment",
    "SocleSummand",
    "WeylcalcError",
    "alpha",
    "canonical_closed",
    "check_valid",
    "closed_elements",
    "closure",
    "compose_roots",
    "connected",
    "corners",
    "decompose_into_roots",
    "dominance_leq",
    "dominant_ancestor",
    "dual_left",
    "dual_right",
    "enumerate_paths",
    "ext_vanishing",
    "fundamental_qchar",
    "hom_dim",
    "in_minus_order",
    "in_plus_order",
    "iota_at",
    "iota_minus",
    "iota_plus",
    "is_closed",
    "is_degenerate",
    "is_doubly_sorted",
    "is_irreducible_weyl",
    "lweight_of_segment",
    "mixed_weyl_maps",
    "normal_form",
    "pair_simple_qchar",
    "params_of_segment",
    "path_weight",
    "segment_of_params",
    "socle",
    "soclehom_weight",
    "sort_minus",
    "sort_plus",
    "span",
    "subcategory_membership",
    "swap",
    "tau",
    "tau_word",
    "weight_of",
    "weyl_dominant_weights",
    "weyl_qchar",
    "weylpermute_check",
]
