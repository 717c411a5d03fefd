"""The free abelian group on segment generators, roots, and dominance.

An l-weight is a finite product of generators w[i,j] with integer
exponents; a root vector collects exponents of the root generators
a[i,j]. Both are stored as zero-pruned sparse maps keyed by Segment.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .errors import InvalidRoot, NotInRootLattice
from .segments import Segment, check_valid, is_degenerate

ExponentSource = Union[Mapping[Segment, int], Iterable[tuple[Segment, int]]]


def _accumulate(source: ExponentSource) -> dict[Segment, int]:
    items = source.items() if hasattr(source, "items") else source
    acc: dict[Segment, int] = {}
    for seg, e in items:
        if not isinstance(seg, Segment):
            raise TypeError(f"expected Segment key, got {type(seg).__name__}")
        ne = acc.get(seg, 0) + int(e)
        if ne:
            acc[seg] = ne
        elif seg in acc:
            del acc[seg]
    return acc


class LWeight:
    """A multiplicative l-weight; treat instances as immutable.

    Supports * (group law), ** (integer powers) and inverse().
    Equality and hashing are by the exponent map.
    """

    __slots__ = ("_exp", "_hash")

    def __init__(self, exponents: ExponentSource = ()):
        self._exp = _accumulate(exponents)
        self._hash = None

    @classmethod
    def identity(cls) -> "LWeight":
        return cls()

    @classmethod
    def generator(cls, seg: Segment) -> "LWeight":
        return cls({seg: 1})

    def exponents(self) -> dict[Segment, int]:
        return dict(self._exp)

    def exponent(self, seg: Segment) -> int:
        return self._exp.get(seg, 0)

    def support(self) -> set[Segment]:
        return set(self._exp)

    @property
    def is_identity(self) -> bool:
        return not self._exp

    @property
    def is_dominant(self) -> bool:
        """Member of the dominant monoid: every exponent nonnegative."""
        return all(e > 0 for e in self._exp.values())

    def __mul__(self, other: "LWeight") -> "LWeight":
        if not isinstance(other, LWeight):
            return NotImplemented
        out = dict(self._exp)
        for seg, e in other._exp.items():
            ne = out.get(seg, 0) + e
            if ne:
                out[seg] = ne
            elif seg in out:
                del out[seg]
        w = LWeight.__new__(LWeight)
        w._exp = out
        w._hash = None
        return w

    def inverse(self) -> "LWeight":
        w = LWeight.__new__(LWeight)
        w._exp = {seg: -e for seg, e in self._exp.items()}
        w._hash = None
        return w

    def __pow__(self, k: int) -> "LWeight":
        w = LWeight.__new__(LWeight)
        w._exp = {seg: e * k for seg, e in self._exp.items()} if k else {}
        w._hash = None
        return w

    def sort_key(self) -> tuple:
        """Canonical order: sorted (i, j, exponent) triples."""
        return tuple(
            (seg.i, seg.j, self._exp[seg]) for seg in sorted(self._exp)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LWeight):
            return NotImplemented
        return self._exp == other._exp

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._exp.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._exp:
            return "1"
        return " * ".join(f"w{seg}^{self._exp[seg]}" for seg in sorted(self._exp))

    def __repr__(self) -> str:
        return f"LWeight({self})"


def lweight_of_segment(seg: Segment, rank: int) -> LWeight:
    """Generator for a valid segment; degenerate segments give the identity."""
    check_valid(seg, rank)
    if is_degenerate(seg, rank):
        return LWeight.identity()
    return LWeight({seg: 1})


class RootVector:
    """Integer coefficients on the root generators, keyed by segment.

    The root a[i,j] exists for 1 <= j - i <= rank; the vector itself is
    rank-agnostic storage, validity is checked where roots are composed.
    """

    __slots__ = ("_coef",)

    def __init__(self, coefficients: ExponentSource = ()):
        self._coef = _accumulate(coefficients)

    def coefficients(self) -> dict[Segment, int]:
        return dict(self._coef)

    def coefficient(self, seg: Segment) -> int:
        return self._coef.get(seg, 0)

    def support(self) -> set[Segment]:
        return set(self._coef)

    @property
    def is_zero(self) -> bool:
        return not self._coef

    @property
    def in_positive_cone(self) -> bool:
        return all(c > 0 for c in self._coef.values())

    def sort_key(self) -> tuple:
        return tuple((seg.i, seg.j, self._coef[seg]) for seg in sorted(self._coef))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootVector):
            return NotImplemented
        return self._coef == other._coef

    def __hash__(self) -> int:
        return hash(frozenset(self._coef.items()))

    def __str__(self) -> str:
        if not self._coef:
            return "1"
        return " * ".join(f"a{seg}^{self._coef[seg]}" for seg in sorted(self._coef))

    def __repr__(self) -> str:
        return f"RootVector({self})"


def alpha(i: int, j: int, rank: int) -> LWeight:
    """The root generator a[i,j] expanded in the segment generators.

    a[i,j] = w[i,j] w[i+1,j+1] w[i+1,j]^-1 w[i,j+1]^-1 with degenerate
    factors dropped.
    """
    if not 1 <= j - i <= rank:
        raise InvalidRoot(f"root ({i},{j}) needs 1 <= j - i <= rank = {rank}")
    w = lweight_of_segment(Segment(i, j), rank)
    w = w * lweight_of_segment(Segment(i + 1, j + 1), rank)
    w = w * lweight_of_segment(Segment(i + 1, j), rank).inverse()
    w = w * lweight_of_segment(Segment(i, j + 1), rank).inverse()
    return w


def compose_roots(rv: RootVector, rank: int) -> LWeight:
    """Product of alpha(i,j)^c over the vector's coefficients."""
    w = LWeight.identity()
    for seg in sorted(rv.support()):
        w = w * alpha(seg.i, seg.j, rank) ** rv.coefficient(seg)
    return w


def decompose_into_roots(w: LWeight, rank: int) -> RootVector:
    """Write w as an integer combination of roots, or raise NotInRootLattice.

    Expanding a[i,j] shows the exponent of w[a,b] in compose(c) is
    c[a,b] + c[a-1,b-1] - c[a-1,b] - c[a,b-1] away from degenerate cells,
    so coefficients are recovered by a single sweep (ascending a, then b)
    with c = 0 assumed outside the band 1 <= b - a <= rank. Degenerate
    cells carry no generator, which is why the sweep needs the final
    recomposition check: a mismatch or residue at the far boundary means
    w never was in the lattice.
    """
    exp = w.exponents()
    if not exp:
        return RootVector({})
    pad = rank + 2
    a_lo = min(s.i for s in exp) - pad
    a_hi = max(s.i for s in exp) + pad
    b_lo = min(s.j for s in exp) - pad
    b_hi = max(s.j for s in exp) + pad
    coef: dict[tuple[int, int], int] = {}

    def cget(a: int, b: int) -> int:
        return coef.get((a, b), 0)

    for a in range(a_lo, a_hi + 1):
        for b in range(max(b_lo, a + 1), min(b_hi, a + rank) + 1):
            e = exp.get(Segment(a, b), 0)
            val = e - cget(a - 1, b - 1) + cget(a - 1, b) + cget(a, b - 1)
            if val:
                coef[(a, b)] = val

    for (a, b), v in coef.items():
        if v and (a >= a_hi - 1 or b >= b_hi - 1):
            raise NotInRootLattice(
                f"{w} is not in the root lattice at rank {rank}"
                " (sweep escaped the support box)"
            )
    rv = RootVector({Segment(a, b): v for (a, b), v in coef.items()})
    if compose_roots(rv, rank) != w:
        raise NotInRootLattice(f"{w} is not in the root lattice at rank {rank}")
    return rv


def dominance_leq(w1: LWeight, w2: LWeight, rank: int) -> bool:
    """Dominance order: w1 <= w2 iff w2 / w1 is a nonnegative root combination."""
    try:
        rv = decompose_into_roots(w2 * w1.inverse(), rank)
    except NotInRootLattice:
        return False
    return rv.in_positive_cone
