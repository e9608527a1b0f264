"""Exact root-system and reductive-group arithmetic.

Roots are stored as integer coefficient vectors in the simple-root basis, so
pairing a root against a cocharacter reduces to an integer dot product and no
irrational arithmetic ever occurs.  A reductive group is modeled as a list of
simple Cartan factors plus a central torus rank; a Harder-Narasimhan type is
the dominant cocharacter of the group recorded through its simple-root values
(one integer vector per factor) together with the degrees on the center.

Conventions:

* Cartan matrix entry ``A[i][j]`` is the pairing of the j-th simple root
  against the i-th simple coroot, so the reflection through the i-th simple
  root sends a coefficient vector ``c`` to ``c - (A[i] . c) e_i``.
* For the B family the last simple root is short, for C it is long, matching
  the symplectic presentation where the doubled gap sits in the last slot.
* For G2 the first simple root is short, so the highest root is (3, 2).
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field

_FAMILIES = "ABCDEFG"

# Lie-algebra dimension per Cartan family, used to cross-check root counts.
_DIM_FORMULAS = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    """A simple Cartan type such as A3, C2 or E8."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown Cartan family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} invalid for family {self.family}")

    @property
    def dim(self) -> int:
        """Dimension of the simple Lie algebra of this type."""
        return _DIM_FORMULAS[self.family](self.rank)

    @property
    def is_a3_isomorphic(self) -> bool:
        """True for D3, which is the A3 root system in disguise."""
        return self.family == "D" and self.rank == 3

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of a simple type, rows indexed by simple coroots."""
    n = ct.rank
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    fam = ct.family
    if fam == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif fam == "B":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -1, -2)  # last root short
    elif fam == "C":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -2, -1)  # last root long
    elif fam == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif fam == "E":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 4, n - 1)
    elif fam == "F":
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
    elif fam == "G":
        edge(0, 1, -3, -1)  # first root short, highest root (3, 2)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    """The full root set of a simple type, in simple-root coordinates.

    ``positive_roots`` is deduplicated and ordered by nondecreasing height
    (sum of coefficients); the first ``simple_root_count`` entries are the
    simple roots themselves.
    """

    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    simple_root_count: int
    _root_set: frozenset[tuple[int, ...]] = field(repr=False, compare=False, default=frozenset())

    @property
    def all_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots followed by their negatives."""
        return self.positive_roots + tuple(
            tuple(-c for c in r) for r in self.positive_roots
        )

    def contains(self, root: tuple[int, ...]) -> bool:
        return tuple(root) in self._root_set

    def reflect(self, root: tuple[int, ...], i: int) -> tuple[int, ...]:
        """Reflect a coefficient vector through the i-th simple root."""
        pairing = sum(self.cartan_matrix[i][j] * c for j, c in enumerate(root))
        out = list(root)
        out[i] -= pairing
        return tuple(out)


@functools.lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    """Generate the root system of a simple type.

    The root set is the closure of the simple roots under all simple
    reflections; the count is validated against the known Lie-algebra
    dimension, which catches any generation or Cartan-matrix bug.
    """
    n = ct.rank
    a = cartan_matrix(ct)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen: set[tuple[int, ...]] = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for c in frontier:
            for i in range(n):
                pairing = sum(a[i][j] * c[j] for j in range(n))
                r = list(c)
                r[i] -= pairing
                rt = tuple(r)
                if rt not in seen:
                    seen.add(rt)
                    fresh.append(rt)
        frontier = fresh

    positive = sorted(
        (r for r in seen if all(c >= 0 for c in r)),
        key=lambda r: (sum(r), r),
    )
    expected = (ct.dim - n) // 2
    assert len(positive) == expected, (
        f"BUG: {ct} produced {len(positive)} positive roots, expected {expected}"
    )
    assert len(seen) == 2 * expected
    return RootSystem(
        cartan_matrix=a,
        positive_roots=tuple(positive),
        simple_root_count=n,
        _root_set=frozenset(seen),
    )


@dataclass(frozen=True)
class ReductiveGroup:
    """A connected reductive group: simple factors plus a central torus."""

    simple_factors: tuple[CartanType, ...] = ()
    central_rank: int = 0

    def __post_init__(self) -> None:
        if self.central_rank < 0:
            raise ValueError("central rank must be nonnegative")
        object.__setattr__(self, "simple_factors", tuple(self.simple_factors))

    @property
    def rank(self) -> int:
        return self.central_rank + sum(f.rank for f in self.simple_factors)

    @property
    def semisimple_rank(self) -> int:
        return sum(f.rank for f in self.simple_factors)

    @property
    def dim(self) -> int:
        return self.central_rank + sum(f.dim for f in self.simple_factors)

    def root_systems(self) -> tuple[RootSystem, ...]:
        return tuple(build_root_system(f) for f in self.simple_factors)

    def __str__(self) -> str:
        factors = "x".join(str(f) for f in self.simple_factors)
        if self.central_rank:
            return f"{factors}+z{self.central_rank}" if factors else f"+z{self.central_rank}"
        return factors


@dataclass(frozen=True)
class HNType:
    """A Harder-Narasimhan type: a cocharacter through its simple-root values.

    ``simple_values[k][i]`` is the pairing of the i-th simple root of the k-th
    factor against the cocharacter; ``central_degrees`` lists the degrees on
    the central torus.  Non-dominant vectors are representable (tests need
    them) but every criterion and stratification operation rejects them.
    """

    simple_values: tuple[tuple[int, ...], ...] = ()
    central_degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "simple_values", tuple(tuple(v) for v in self.simple_values)
        )
        object.__setattr__(self, "central_degrees", tuple(self.central_degrees))

    @classmethod
    def from_flat(
        cls,
        group: ReductiveGroup,
        values: tuple[int, ...] | list[int],
        central_degrees: tuple[int, ...] | list[int] = (),
    ) -> "HNType":
        """Split a flat list of simple-root values along the factor ranks."""
        values = tuple(values)
        if len(values) != group.semisimple_rank:
            raise ValueError(
                f"expected {group.semisimple_rank} simple-root values, got {len(values)}"
            )
        split: list[tuple[int, ...]] = []
        k = 0
        for f in group.simple_factors:
            split.append(values[k : k + f.rank])
            k += f.rank
        return cls(tuple(split), tuple(central_degrees))

    @property
    def flat_values(self) -> tuple[int, ...]:
        return tuple(v for vec in self.simple_values for v in vec)


def check_shapes(group: ReductiveGroup, hn: HNType) -> None:
    """Raise ValueError unless the HN type has the group's shape."""
    if len(hn.simple_values) != len(group.simple_factors):
        raise ValueError(
            f"HN type has {len(hn.simple_values)} factors, group has "
            f"{len(group.simple_factors)}"
        )
    for k, (f, vec) in enumerate(zip(group.simple_factors, hn.simple_values)):
        if len(vec) != f.rank:
            raise ValueError(f"factor {k} ({f}): expected {f.rank} values, got {len(vec)}")
    if len(hn.central_degrees) != group.central_rank:
        raise ValueError(
            f"expected {group.central_rank} central degrees, got {len(hn.central_degrees)}"
        )


def root_value(rs: RootSystem, root: tuple[int, ...], values: tuple[int, ...]) -> int:
    """Pair a root (either sign) against the simple-root values of one factor.

    With roots in simple-root coordinates the pairing is the dot product of
    the coefficient vector with the value vector; it is linear in both.
    """
    root = tuple(root)
    if not rs.contains(root):
        raise ValueError(f"{root} is not a root of this system")
    if len(values) != rs.simple_root_count:
        raise ValueError("value vector length does not match the rank")
    return sum(c * a for c, a in zip(root, values))


def all_root_values(group: ReductiveGroup, hn: HNType) -> list[int]:
    """The multiset of pairings over the full root set of the group.

    Both signs are included, so the result has dim(G) - rank(G) entries and
    is symmetric under negation; the center contributes nothing.  Order:
    factor by factor, positive roots by height, each followed by its
    negative.
    """
    check_shapes(group, hn)
    out: list[int] = []
    for rs, vec in zip(group.root_systems(), hn.simple_values):
        for root in rs.positive_roots:
            v = sum(c * a for c, a in zip(root, vec))
            out.append(v)
            out.append(-v)
    return out


def is_dominant(group: ReductiveGroup, hn: HNType) -> bool:
    """True iff every simple-root value is nonnegative."""
    check_shapes(group, hn)
    return all(v >= 0 for vec in hn.simple_values for v in vec)


def require_dominant(group: ReductiveGroup, hn: HNType) -> None:
    if not is_dominant(group, hn):
        raise ValueError(f"HN type {hn.simple_values} is not dominant")


_FACTOR_RE = re.compile(r"([A-G])([0-9]+)")
_GROUP_RE = re.compile(r"^([A-G][0-9]+(?:x[A-G][0-9]+)*)(?:\+z([0-9]+))?$")


def parse_group(text: str) -> ReductiveGroup:
    """Parse a compact group string such as ``A2`` or ``C3xA1+z2``.

    Grammar: TYPE := FACTOR ("x" FACTOR)* ("+z" UINT)? with FACTOR :=
    [ABCDEFG] UINT.
    """
    m = _GROUP_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse group {text!r}")
    factors = tuple(
        CartanType(fam, int(rank)) for fam, rank in _FACTOR_RE.findall(m.group(1))
    )
    central = int(m.group(2)) if m.group(2) else 0
    return ReductiveGroup(factors, central)
