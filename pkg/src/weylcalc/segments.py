"""Integer segments and their rank-dependent validity."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSegment


@dataclass(frozen=True, order=True)
class Segment:
    """The interval [i, j] of integers, i <= j.

    Segments are ordered lexicographically by (i, j), which is also the
    order used for canonical rendering.
    """

    i: int
    j: int

    def __post_init__(self):
        if self.j < self.i:
            raise InvalidSegment(f"segment [{self.i},{self.j}] has j < i")

    @property
    def length(self) -> int:
        return self.j - self.i

    def shift(self, d: int) -> "Segment":
        return Segment(self.i + d, self.j + d)

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


def check_valid(seg: Segment, rank: int) -> None:
    """Raise InvalidSegment unless 0 <= length <= rank + 1."""
    if not 0 <= seg.length <= rank + 1:
        raise InvalidSegment(
            f"segment {seg} has length {seg.length}, not valid at rank {rank}"
        )


def is_degenerate(seg: Segment, rank: int) -> bool:
    """Segments of length 0 or rank + 1 carry the trivial generator."""
    return seg.length == 0 or seg.length == rank + 1


def segment_of_params(m: int, a: int) -> Segment:
    """Segment for an (index, exponent) pair with m >= 0 and a - m even.

    The pair (m, q^a) corresponds to the interval [(a-m)/2, (a+m)/2].
    """
    if m < 0:
        raise InvalidSegment(f"index m = {m} must be nonnegative")
    if (a - m) % 2:
        raise InvalidSegment(f"pair (m, a) = ({m}, {a}) needs a - m even")
    return Segment((a - m) // 2, (a + m) // 2)


def params_of_segment(seg: Segment) -> tuple[int, int]:
    """Inverse of segment_of_params: [i, j] -> (j - i, i + j)."""
    return seg.length, seg.i + seg.j
