"""The symplectic-group specialization of the stability criterion.

A rank-2r symplectic bundle on the line splits with palindromic degrees
(e_1, ..., e_r, -e_r, ..., -e_1); the half-degree list determines
everything.  A stable co-Higgs field exists iff consecutive half-degree
gaps stay at most 2 and the middle gap 2 e_r does as well -- which is the
C_r criterion with the doubled (long-root) slot last.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lie import CartanType, HNType, ReductiveGroup


@dataclass(frozen=True)
class SymplecticSplitting:
    """Weakly decreasing, nonnegative half-degrees e_1 >= ... >= e_r >= 0."""

    half_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        e = tuple(int(x) for x in self.half_degrees)
        if not e:
            raise ValueError("need at least one half-degree")
        if any(e[i] < e[i + 1] for i in range(len(e) - 1)):
            raise ValueError("half-degrees must be weakly decreasing")
        if e[-1] < 0:
            raise ValueError("half-degrees must be nonnegative")
        object.__setattr__(self, "half_degrees", e)

    @property
    def r(self) -> int:
        return len(self.half_degrees)

    @property
    def full_degrees(self) -> tuple[int, ...]:
        """The rank-2r degree list (e_1, ..., e_r, -e_r, ..., -e_1)."""
        e = self.half_degrees
        return e + tuple(-x for x in reversed(e))

    def gaps(self) -> tuple[int, ...]:
        """The r gaps that decide stability, the last one being 2 e_r."""
        e = self.half_degrees
        return tuple(e[i] - e[i + 1] for i in range(self.r - 1)) + (2 * e[-1],)


def sp_admits_stable(ss: SymplecticSplitting) -> bool:
    """True iff all r gaps (including the doubled middle one) are <= 2."""
    return all(g <= 2 for g in ss.gaps())


def sp_to_hn(ss: SymplecticSplitting) -> tuple[ReductiveGroup, HNType]:
    """Map half-degrees to C_r data with the long root in the last slot.

    Rank 1 folds to A_1 with the doubled value, since Sp(2) = SL(2).
    """
    if ss.r == 1:
        group = ReductiveGroup((CartanType("A", 1),))
        return group, HNType(((2 * ss.half_degrees[0],),))
    group = ReductiveGroup((CartanType("C", ss.r),))
    return group, HNType((ss.gaps(),))
