from itertools import product

import pytest

from cohiggs import (
    CartanType,
    HNType,
    ReductiveGroup,
    all_root_values,
    dim_automorphisms,
    dim_cohiggs_space,
    dim_stratum,
    enumerate_strata,
)

A1 = ReductiveGroup((CartanType("A", 1),))

SWEEP_TYPES = [
    CartanType("A", 1), CartanType("A", 2), CartanType("A", 3), CartanType("A", 4),
    CartanType("B", 2), CartanType("B", 3), CartanType("B", 4),
    CartanType("C", 2), CartanType("C", 3), CartanType("C", 4),
    CartanType("D", 3), CartanType("D", 4),
    CartanType("F", 4), CartanType("G", 2),
]


@pytest.mark.parametrize("a,expected", [(0, 9), (2, 9), (4, 10)])
def test_field_space_dimension_rank_two(a, expected):
    # 3 per torus line plus sections of degree a+2 and -a+2
    assert dim_cohiggs_space(A1, HNType(((a,),))) == expected


@pytest.mark.parametrize("a,expected", [(0, 3), (2, 4)])
def test_automorphism_dimension_rank_two(a, expected):
    assert dim_automorphisms(A1, HNType(((a,),))) == expected


def test_automorphism_dimension_a2():
    g = ReductiveGroup((CartanType("A", 2),))
    assert dim_automorphisms(g, HNType(((1, 1),))) == 9


@pytest.mark.parametrize("a,expected", [(0, 6), (1, 6), (2, 5)])
def test_stratum_dimension_rank_two(a, expected):
    assert dim_stratum(A1, HNType(((a,),))) == expected


def test_dimensions_beyond_the_stratum_range():
    # value 4 exercises the truncated section count and the closed forms
    hn = HNType(((4,),))
    assert dim_cohiggs_space(A1, hn) == 10
    assert dim_automorphisms(A1, hn) == 6
    assert dim_stratum(A1, hn) == 4


def test_zero_type_dimensions_scale_with_group_dimension():
    for ct in SWEEP_TYPES:
        g = ReductiveGroup((ct,))
        zero = HNType(((0,) * ct.rank,))
        assert dim_cohiggs_space(g, zero) == 3 * g.dim
        assert dim_automorphisms(g, zero) == g.dim
        assert dim_stratum(g, zero) == 2 * g.dim


def test_automorphism_forms_agree_on_big_sweep():
    # the direct sum and the closed form are asserted equal internally
    for ct in SWEEP_TYPES:
        g = ReductiveGroup((ct,))
        for values in product(range(6), repeat=ct.rank):
            dim_automorphisms(g, HNType((values,)))


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        dim_cohiggs_space(A1, HNType(((-1,),)))
    with pytest.raises(ValueError):
        dim_automorphisms(A1, HNType(((-2,),)))
    with pytest.raises(ValueError):
        dim_stratum(A1, HNType(((-2,),)))


def test_enumerate_strata_rank_one():
    records = enumerate_strata(A1)
    assert [r.hn.flat_values for r in records] == [(0,), (1,), (2,)]
    assert [r.dim_stratum for r in records] == [6, 6, 5]
    assert [r.is_generic for r in records] == [True, False, False]


def test_enumerate_strata_product_group():
    g = ReductiveGroup((CartanType("A", 1), CartanType("A", 1)))
    records = enumerate_strata(g)
    assert len(records) == 9
    assert len({r.hn for r in records}) == 9
    generic = [r for r in records if r.is_generic]
    assert len(generic) == 1
    assert generic[0].dim_stratum == 2 * g.dim


def test_enumerate_strata_pure_torus():
    torus = ReductiveGroup((), central_rank=1)
    records = enumerate_strata(torus, (3,))
    assert len(records) == 1
    assert records[0].dim_stratum == 2 == 2 * torus.dim
    assert records[0].is_generic


def test_enumerate_strata_checks_central_length():
    with pytest.raises(ValueError):
        enumerate_strata(A1, (1,))
    with pytest.raises(ValueError):
        enumerate_strata(ReductiveGroup((), central_rank=2), (1,))


def test_strata_dimensions_consistent():
    for ct in SWEEP_TYPES:
        g = ReductiveGroup((ct,))
        for record in enumerate_strata(g):
            assert record.dim_stratum == record.dim_cohiggs - record.dim_aut
            assert record.dim_stratum <= 2 * g.dim


def test_stratum_deficit_vanishes_iff_no_root_value_exceeds_one():
    for ct in SWEEP_TYPES:
        g = ReductiveGroup((ct,))
        for record in enumerate_strata(g):
            deficit = 2 * g.dim - record.dim_stratum
            big = max(all_root_values(g, record.hn), default=0)
            assert (deficit == 0) == (big <= 1), (ct, record.hn)


def test_central_part_carried_through():
    g = ReductiveGroup((CartanType("A", 1),), central_rank=2)
    records = enumerate_strata(g, (4, -1))
    assert len(records) == 3
    assert all(r.hn.central_degrees == (4, -1) for r in records)
