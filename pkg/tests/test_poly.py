import random
from fractions import Fraction

import pytest

from cohiggs import QQ, HomogPoly, PrimeField
from cohiggs.poly import all_polys, gcd_many, random_nonzero_poly, random_poly

F2 = PrimeField(2)
F5 = PrimeField(5)


def P(field, degree, *coeffs):
    return HomogPoly(field, degree, coeffs)


def test_prime_field_validation():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    assert PrimeField(7).name == "F7"


def test_prime_field_arithmetic():
    assert F5.add(3, 4) == 2
    assert F5.mul(3, 4) == 2
    assert F5.neg(2) == 3
    assert F5.mul(F5.inv(3), 3) == 1
    assert list(F2.elements()) == [0, 1]
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_rational_field_is_exact():
    assert QQ.coerce(2) == Fraction(2)
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    p = P(QQ, 1, Fraction(1, 3), Fraction(1, 6))
    q = p.scale(6)
    assert q.coeffs == (Fraction(2), Fraction(1))


def test_construction_validates_lengths_and_degree():
    with pytest.raises(ValueError):
        HomogPoly(F5, 2, (1, 2))
    with pytest.raises(ValueError):
        HomogPoly(F5, -2, ())
    assert HomogPoly.zero(F5, 3).coeffs == (0, 0, 0, 0)
    assert HomogPoly.zero(F5).degree == -1


def test_zero_polynomial_any_degree():
    for d in (-1, 0, 1, 5):
        assert HomogPoly.zero(F5, d).is_zero


def test_add_and_mul_track_degrees():
    f = P(F5, 1, 1, 2)      # x + 2y
    g = P(F5, 1, 3, 1)      # 3x + y
    assert (f + g).coeffs == (4, 3)
    h = f * g               # 3x^2 + 7xy + 2y^2 -> (3, 2, 2) mod 5
    assert h.degree == 2 and h.coeffs == (3, 2, 2)
    with pytest.raises(ValueError):
        f + P(F5, 2, 1, 0, 0)
    with pytest.raises(ValueError):
        f + P(F2, 1, 1, 0)


def test_zero_marker_neutral_in_addition_absorbing_in_product():
    z = HomogPoly.zero(F5)
    f = P(F5, 2, 1, 0, 3)
    assert (f + z).coeffs == f.coeffs
    assert (f * z).is_zero


def test_gcd_basic():
    x2 = P(F5, 2, 1, 0, 0)
    xy = P(F5, 2, 0, 1, 0)
    y2 = P(F5, 2, 0, 0, 1)
    assert str(x2.gcd(xy)) == "x"
    assert x2.gcd(y2).is_constant()
    f = P(F5, 1, 1, 1)  # x + y
    a = f * P(F5, 1, 1, 2)
    b = f * P(F5, 1, 1, 3)
    assert a.gcd(b).coeffs == (1, 1)


def test_gcd_handles_y_powers():
    y = P(F5, 1, 0, 1)
    f = y * y * P(F5, 1, 1, 1)
    g = y * P(F5, 1, 1, 2)
    got = f.gcd(g)
    assert got.degree == 1 and got.coeffs == (0, 1)  # exactly y


def test_gcd_with_zero_and_monic_normalization():
    f = P(F5, 1, 2, 4)
    z = HomogPoly.zero(F5, 1)
    assert f.gcd(z).coeffs == (1, 2)
    assert z.gcd(f).coeffs == (1, 2)


def test_gcd_over_rationals():
    f = P(QQ, 2, 1, 2, 1)    # (x + y)^2
    g = P(QQ, 1, 2, 2)       # 2(x + y)
    assert f.gcd(g).coeffs == (Fraction(1), Fraction(1))


def test_gcd_many_detects_coprimality():
    const = P(F5, 0, 2)
    x2 = P(F5, 2, 1, 0, 0)
    assert gcd_many([const, x2]).is_constant()
    assert gcd_many([HomogPoly.zero(F5), x2]).coeffs == (1, 0, 0)
    assert gcd_many([HomogPoly.zero(F5, 2)]) is None


def test_string_rendering():
    assert str(P(F5, 2, 3, 1, 4)) == "3*x^2 + x*y + 4*y^2"
    assert str(P(F5, 0, 2)) == "2"
    assert str(HomogPoly.zero(F5, 2)) == "0"
    assert str(P(F5, 1, 1, 0)) == "x"


def test_random_polys_deterministic_per_seed():
    a = random_poly(F5, 3, random.Random("k:1"))
    b = random_poly(F5, 3, random.Random("k:1"))
    assert a.coeffs == b.coeffs
    assert not random_nonzero_poly(F2, 0, random.Random(0)).is_zero
    with pytest.raises(ValueError):
        random_poly(QQ, 2, random.Random(0))
    with pytest.raises(ValueError):
        random_nonzero_poly(F5, -1, random.Random(0))


def test_all_polys_counts():
    assert sum(1 for _ in all_polys(F2, 2)) == 8
    assert sum(1 for _ in all_polys(F5, 1)) == 25
    zs = list(all_polys(F5, -1))
    assert len(zs) == 1 and zs[0].is_zero
