"""Decision procedures for standard modules.

Everything here reduces module-theoretic questions (dominant weight
sets, Hom dimensions, socle summands, tensor-order certificates) to the
closure and q-character layers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .closures import closed_elements, closure, is_closed
from .errors import NotDominant
from .lweights import LWeight
from .multisegments import (
    Multisegment,
    connected,
    normal_form,
    sort_plus,
    weight_of,
)


def weyl_dominant_weights(ms: Multisegment, rank: int) -> set[LWeight]:
    """Dominant l-weight support of the standard module attached to ms.

    Computed as the weights of the closure of the plus-sorted tuple;
    invariant under permuting ms since sorting normalizes the order.
    """
    cs = closure(sort_plus(ms), rank)
    return {weight_of(t, rank) for t in cs.members}


def hom_dim(src: Multisegment, dst: Multisegment, rank: int) -> int:
    """dim Hom(W(src), W(dst)): 1 if src's weight is dominant in dst, else 0."""
    return 1 if weight_of(src, rank) in weyl_dominant_weights(dst, rank) else 0


class SocleSummand(NamedTuple):
    weight: LWeight
    representative: Multisegment


def socle(ms: Multisegment, rank: int) -> list[SocleSummand]:
    """Socle summands: one weight per closed orbit of the closure."""
    out = [
        SocleSummand(weight_of(t, rank), t) for t in closed_elements(ms, rank)
    ]
    out.sort(key=lambda s: (s.weight.sort_key(), s.representative))
    return out


def is_irreducible_weyl(ms: Multisegment, rank: int) -> bool:
    """The standard module is simple exactly when the tuple is closed."""
    return is_closed(ms, rank)


def weylpermute_check(ms: Multisegment, rank: int) -> bool:
    """Midpoint condition for an order-insensitive standard module.

    True iff every connected ordered pair (p < s) satisfies
    i_p + j_p >= i_s + j_s.
    """
    r = len(ms)
    for p in range(r):
        for s in range(p + 1, r):
            a, b = ms[p], ms[s]
            if connected(a, b, rank) and a.i + a.j < b.i + b.j:
                return False
    return True


class ExtVerdict(Enum):
    VANISHES = "VANISHES"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ExtCertificate:
    """Verdict plus the shared dominant weights that block a vanishing claim."""

    verdict: ExtVerdict
    shared_weights: tuple[LWeight, ...]


def ext_vanishing(ms1: Multisegment, ms2: Multisegment, rank: int) -> ExtCertificate:
    """Disjoint dominant supports force Ext vanishing; overlap decides nothing."""
    shared = sorted(
        weyl_dominant_weights(ms1, rank) & weyl_dominant_weights(ms2, rank),
        key=LWeight.sort_key,
    )
    verdict = ExtVerdict.INCONCLUSIVE if shared else ExtVerdict.VANISHES
    return ExtCertificate(verdict, tuple(shared))


def subcategory_membership(base: Multisegment, w: LWeight, rank: int) -> bool:
    """Whether a dominant weight lives in the tensor subcategory of base.

    Every support segment must start at some left endpoint of base, end
    at some right endpoint of base, and fit within the rank's reach.
    Raises NotDominant on a non-dominant weight.
    """
    if not w.is_dominant:
        raise NotDominant(f"{w} has a negative exponent")
    lefts = {p.i for p in base}
    rights = {p.j for p in base}
    for seg in w.support():
        if seg.i not in lefts or seg.j not in rights:
            return False
        if not 0 <= seg.length <= rank + 1:
            return False
    return True


class MixedWeylMaps(NamedTuple):
    """Head and socle-candidate weights of a mixed module, with witnesses."""

    head: LWeight
    socle_candidate: LWeight
    head_witness: Multisegment
    socle_witness: Multisegment


def mixed_weyl_maps(ms: Multisegment, rank: int) -> MixedWeylMaps:
    """Weights of the two normal forms, which receive and emit the mixed module."""
    plus = normal_form(ms, 1, rank)
    minus = normal_form(ms, -1, rank)
    return MixedWeylMaps(
        weight_of(plus, rank), weight_of(minus, rank), plus, minus
    )
