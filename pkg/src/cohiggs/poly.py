"""Exact homogeneous polynomial arithmetic in two variables.

Sections of a degree-d line bundle on the projective line are homogeneous
forms of degree d in x and y.  A form is stored as the coefficient tuple
(c_0, ..., c_d) against the basis x^d, x^(d-1) y, ..., y^d, over an exact
coefficient field: a prime field GF(p) with elements as integers in
[0, p), or the rationals with elements as ``Fraction``.

Degree -1 encodes the zero-only section space of a negative-degree bundle;
its only inhabitant is the zero form with an empty coefficient tuple.  The
zero form is also representable at every nonnegative degree (all-zero
coefficients), so degree bookkeeping survives arithmetic.

The gcd of two binary forms is computed exactly: split off the common power
of y, run the Euclidean algorithm on the dehomogenizations at y = 1, and
rehomogenize; the result is normalized monic.  Forms are coprime exactly
when they share no zero on the projective line over the algebraic closure,
which is the saturation test for line subbundles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field with p elements, p prime; elements are ints in [0, p)."""

    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    finite = True

    @property
    def name(self) -> str:
        return f"F{self.p}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, x: int) -> int:
        return int(x) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return pow(a, self.p - 2, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RationalField:
    """The rational numbers; elements are ``Fraction``."""

    finite = False
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / a

    def __str__(self) -> str:
        return self.name


QQ = RationalField()

Field = PrimeField | RationalField


@dataclass(frozen=True)
class HomogPoly:
    """A homogeneous form in two variables over an exact field.

    ``coeffs`` has length ``degree + 1`` (empty at the zero-only degree -1),
    entry k multiplying x^(degree-k) y^k.
    """

    field: Field
    degree: int
    coeffs: tuple

    def __post_init__(self) -> None:
        if self.degree < -1:
            raise ValueError("degree must be >= -1")
        coeffs = tuple(self.field.coerce(c) for c in self.coeffs)
        if len(coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, field: Field, degree: int = -1) -> "HomogPoly":
        if degree < 0:
            return cls(field, -1, ())
        return cls(field, degree, (field.zero,) * (degree + 1))

    @classmethod
    def constant(cls, field: Field, value) -> "HomogPoly":
        return cls(field, 0, (value,))

    @property
    def is_zero(self) -> bool:
        return all(c == self.field.zero for c in self.coeffs)

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        self._check_field(other)
        if self.degree == -1:
            return other
        if other.degree == -1:
            return self
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        f = self.field
        return HomogPoly(
            f, self.degree, tuple(f.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "HomogPoly":
        f = self.field
        return HomogPoly(f, self.degree, tuple(f.neg(c) for c in self.coeffs))

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def __mul__(self, other: "HomogPoly") -> "HomogPoly":
        self._check_field(other)
        if self.degree == -1 or other.degree == -1:
            return HomogPoly.zero(self.field)
        f = self.field
        out = [f.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return HomogPoly(f, self.degree + other.degree, tuple(out))

    def scale(self, c) -> "HomogPoly":
        f = self.field
        c = f.coerce(c)
        return HomogPoly(f, self.degree, tuple(f.mul(c, a) for a in self.coeffs))

    def _check_field(self, other: "HomogPoly") -> None:
        if self.field != other.field:
            raise ValueError(f"mixed fields {self.field} and {other.field}")

    @property
    def y_multiplicity(self) -> int:
        """Largest k with y^k dividing the form; degree + 1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c != self.field.zero:
                return k
        return self.degree + 1

    def is_constant(self) -> bool:
        """Nonzero of degree 0."""
        return self.degree == 0 and not self.is_zero

    def gcd(self, other: "HomogPoly") -> "HomogPoly":
        """Monic gcd as binary forms; zero arguments act neutrally."""
        self._check_field(other)
        if self.is_zero:
            return other._monic()
        if other.is_zero:
            return self._monic()
        ys = min(self.y_multiplicity, other.y_multiplicity)
        core = _univariate_gcd(self.field, self._dehomogenize(), other._dehomogenize())
        coeffs = (self.field.zero,) * ys + tuple(reversed(core))
        return HomogPoly(self.field, len(coeffs) - 1, coeffs)

    def _monic(self) -> "HomogPoly":
        if self.is_zero:
            return self
        f = self.field
        lead = next(c for c in self.coeffs if c != f.zero)
        return self.scale(f.inv(lead))

    def _dehomogenize(self) -> list:
        """Coefficients of f(x, 1) in increasing powers of x, trimmed."""
        f = self.field
        low_to_high = list(reversed(self.coeffs))
        while low_to_high and low_to_high[-1] == f.zero:
            low_to_high.pop()
        return low_to_high

    def __str__(self) -> str:
        if self.degree == -1 or self.is_zero:
            return "0"
        d = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            xs = f"x^{d - k}" if d - k > 1 else ("x" if d - k == 1 else "")
            ys = f"y^{k}" if k > 1 else ("y" if k == 1 else "")
            mono = "*".join(t for t in (xs, ys) if t)
            if not mono:
                terms.append(str(c))
            elif c == self.field.one:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def _univariate_gcd(field: Field, a: list, b: list) -> list:
    """Euclidean gcd of univariate coefficient lists (increasing powers)."""

    def trim(u: list) -> list:
        while u and u[-1] == field.zero:
            u.pop()
        return u

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv_lead = field.inv(b[-1])
        while len(a) >= len(b):
            shift = len(a) - len(b)
            factor = field.mul(a[-1], inv_lead)
            for k in range(len(b)):
                a[shift + k] = field.sub(a[shift + k], field.mul(factor, b[k]))
            trim(a)
            if not a:
                break
        a, b = b, a
    inv_lead = field.inv(a[-1])
    return [field.mul(c, inv_lead) for c in a]


def gcd_many(polys: Iterable[HomogPoly]) -> HomogPoly | None:
    """Monic gcd of the nonzero entries; None when all are zero."""
    acc: HomogPoly | None = None
    for p in polys:
        if p.is_zero:
            continue
        acc = p._monic() if acc is None else acc.gcd(p)
        if acc.is_constant():
            return acc
    return acc


def random_poly(field: Field, degree: int, rng: random.Random) -> HomogPoly:
    """A form with coefficients drawn uniformly (prime fields only)."""
    if not field.finite:
        raise ValueError("random draws need a finite field")
    if degree < 0:
        return HomogPoly.zero(field)
    coeffs = tuple(rng.randrange(field.p) for _ in range(degree + 1))
    return HomogPoly(field, degree, coeffs)


def random_nonzero_poly(field: Field, degree: int, rng: random.Random) -> HomogPoly:
    """A nonzero form of a nonnegative degree, by rejection."""
    if degree < 0:
        raise ValueError("no nonzero forms in negative degree")
    while True:
        p = random_poly(field, degree, rng)
        if not p.is_zero:
            return p


def all_polys(field: PrimeField, degree: int) -> Iterator[HomogPoly]:
    """Every form of a degree over a prime field, zero included."""
    if degree < 0:
        yield HomogPoly.zero(field)
        return
    n = degree + 1
    total = field.p**n
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(n):
            c, r = divmod(c, field.p)
            coeffs.append(r)
        yield HomogPoly(field, degree, tuple(coeffs))
