"""Stratification of the co-Higgs moduli by Harder-Narasimhan type.

Fixing the topological degree leaves finitely many allowed types: every
simple-root value must lie in {0, 1, 2}.  Each stratum is the space of
fields on the corresponding bundle modulo its automorphisms, and all three
dimensions here are computed by direct summation of section counts over the
root spaces.  The closed forms are evaluated as well and asserted against
the direct sums on every call; the generic stratum (type zero) always has
dimension twice the group dimension.

The field-space dimension deliberately avoids its tempting closed form: the
consistent simplification adds ``value - 3`` per root value above 3, and the
variant with ``value + 3`` is wrong (it disagrees with the stratum formula
by six per large root).  Direct summation sidesteps the issue and the test
suite pins the discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .lie import (
    HNType,
    ReductiveGroup,
    all_root_values,
    require_dominant,
)

MAX_SIMPLE_VALUE = 2


@dataclass(frozen=True)
class StratumRecord:
    hn: HNType
    dim_cohiggs: int
    dim_aut: int
    dim_stratum: int
    is_generic: bool


def dim_cohiggs_space(group: ReductiveGroup, hn: HNType) -> int:
    """Dimension of the space of co-Higgs fields on a bundle of this type.

    Three sections per torus direction plus, for each root, the sections of
    a line bundle of degree ``value + 2``: that is ``value + 3`` when the
    value is at least -3 and zero otherwise.
    """
    require_dominant(group, hn)
    return 3 * group.rank + sum(
        max(0, v + 3) for v in all_root_values(group, hn)
    )


def dim_automorphisms(group: ReductiveGroup, hn: HNType) -> int:
    """Dimension of the automorphism group of the bundle.

    One per torus direction plus ``value + 1`` for each root with
    nonnegative value.  The equivalent form dim(G) + sum of (value - 1) over
    roots with value > 1 is evaluated too and asserted equal.
    """
    require_dominant(group, hn)
    values = all_root_values(group, hn)
    direct = group.rank + sum(v + 1 for v in values if v > -1)
    closed = group.dim + sum(v - 1 for v in values if v > 1)
    assert direct == closed, f"BUG: automorphism forms disagree: {direct} != {closed}"
    return direct


def dim_stratum(group: ReductiveGroup, hn: HNType) -> int:
    """Stratum dimension: fields minus automorphisms.

    The closed form 2 dim(G) - 2 #{value > 3} - sum of (value - 1) over
    1 < value <= 3 is asserted against the subtraction (the automorphisms
    act freely on a generic field, so dimensions subtract).
    """
    require_dominant(group, hn)
    direct = dim_cohiggs_space(group, hn) - dim_automorphisms(group, hn)
    values = all_root_values(group, hn)
    closed = (
        2 * group.dim
        - 2 * sum(1 for v in values if v > 3)
        - sum(v - 1 for v in values if 1 < v <= 3)
    )
    assert direct == closed, f"BUG: stratum forms disagree: {direct} != {closed}"
    return direct


def enumerate_strata(
    group: ReductiveGroup, central_degrees: tuple[int, ...] | list[int] = ()
) -> list[StratumRecord]:
    """All strata of a fixed topological degree, one per allowed type.

    Every combination of simple-root values in {0, 1, 2} appears exactly
    once, in lexicographic order of the flattened value vector; the central
    part is carried through unchanged.
    """
    central = tuple(central_degrees)
    if len(central) != group.central_rank:
        raise ValueError(
            f"expected {group.central_rank} central degrees, got {len(central)}"
        )
    total_rank = group.semisimple_rank
    records = []
    for flat in product(range(MAX_SIMPLE_VALUE + 1), repeat=total_rank):
        hn = HNType.from_flat(group, flat, central)
        records.append(
            StratumRecord(
                hn=hn,
                dim_cohiggs=dim_cohiggs_space(group, hn),
                dim_aut=dim_automorphisms(group, hn),
                dim_stratum=dim_stratum(group, hn),
                is_generic=all(v == 0 for v in flat),
            )
        )
    return records
