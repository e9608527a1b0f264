"""Instance-level co-Higgs fields and an exhaustive semistability oracle.

A co-Higgs field on a split rank-r bundle is an r x r matrix whose (i, j)
entry is a form of degree ``m_i - m_j + 2`` (the zero-only marker when that
degree is negative).  A line subbundle of degree d is a section tuple with
entry i of degree ``m_i - d``, saturated when the nonzero entries share no
projective zero, i.e. their gcd is a nonzero constant.

Over a prime field the oracle enumerates every saturated line subbundle
down to the destabilizing slope threshold, checks invariance exactly, and
for rank 3 repeats the search on the dual splitting with the transposed
matrix, which detects invariant rank-2 subbundles through their annihilator
lines.  A FAILS verdict is a certificate; a PASSES verdict only rules out
destabilizing subbundles rational over the chosen field, so confidence
comes from passing at several primes.  All randomness is driven by seeds
through ``random.Random``, so every run is reproducible bit for bit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .glr import SplittingType, glr_admits_semistable, hom_degree
from .poly import (
    Field,
    HomogPoly,
    PrimeField,
    gcd_many,
    random_nonzero_poly,
    random_poly,
)

ORACLE_MAX_RANK = 3


def _expected_entry(splitting: SplittingType, i: int, j: int) -> int:
    d = hom_degree(splitting, i, j)
    return d if d >= 0 else -1


@dataclass(frozen=True)
class CoHiggsMatrix:
    """A co-Higgs field as a matrix of forms with the entrywise degrees."""

    splitting: SplittingType
    field: Field
    entries: tuple[tuple[HomogPoly, ...], ...]

    def __post_init__(self) -> None:
        r = self.splitting.rank
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != r or any(len(row) != r for row in entries):
            raise ValueError(f"expected an {r} x {r} entry grid")
        for i, row in enumerate(entries):
            for j, p in enumerate(row):
                want = _expected_entry(self.splitting, i, j)
                if want == -1:
                    if not p.is_zero:
                        raise ValueError(
                            f"entry ({i}, {j}) must vanish: its space has "
                            f"degree {hom_degree(self.splitting, i, j)}"
                        )
                elif p.degree != want and not (p.degree == -1 and p.is_zero):
                    raise ValueError(
                        f"entry ({i}, {j}) has degree {p.degree}, expected {want}"
                    )
        object.__setattr__(self, "entries", entries)

    @property
    def rank(self) -> int:
        return self.splitting.rank

    def entry(self, i: int, j: int) -> HomogPoly:
        return self.entries[i][j]

    def transpose_dual(self) -> "CoHiggsMatrix":
        """The induced field on the dual splitting (entries transposed and
        both indices reversed, matching the dual's decreasing order)."""
        r = self.rank
        dual = self.splitting.dual()
        entries = tuple(
            tuple(self.entries[r - 1 - l][r - 1 - k] for l in range(r))
            for k in range(r)
        )
        return CoHiggsMatrix(dual, self.field, entries)

    def to_json_dict(self) -> dict:
        return {
            "splitting": list(self.splitting.degrees),
            "field": self.field.name,
            "entries": [
                [list(p.coeffs) if p.degree >= 0 else [] for p in row]
                for row in self.entries
            ],
        }


def _zero_matrix_entries(st: SplittingType, field: Field) -> list[list[HomogPoly]]:
    r = st.rank
    return [
        [HomogPoly.zero(field, _expected_entry(st, i, j)) for j in range(r)]
        for i in range(r)
    ]


def zero_field(st: SplittingType, field: Field) -> CoHiggsMatrix:
    """The zero co-Higgs field."""
    return CoHiggsMatrix(st, field, tuple(map(tuple, _zero_matrix_entries(st, field))))


def _rng(kind: str, st: SplittingType, field: Field, seed: int) -> random.Random:
    return random.Random(f"{kind}:{st}:{field.name}:{seed}")


def build_model_field(st: SplittingType, field: Field, seed: int = 0) -> CoHiggsMatrix:
    """The chained subdiagonal field: one nonzero form per simple gap.

    Entry (i+1, i) is a nonzero form of degree ``m_(i+1) - m_i + 2``; all
    other entries vanish.  Requires every gap to be at most 2, otherwise
    some subdiagonal space is zero and the construction is impossible.
    Deterministic per (splitting, field, seed).
    """
    if not glr_admits_semistable(st):
        raise ValueError(
            f"splitting {st} has a gap above 2; a subdiagonal space is zero"
        )
    rng = _rng("model", st, field, seed)
    entries = _zero_matrix_entries(st, field)
    for i in range(st.rank - 1):
        entries[i + 1][i] = random_nonzero_poly(field, hom_degree(st, i + 1, i), rng)
    return CoHiggsMatrix(st, field, tuple(map(tuple, entries)))


def random_field(st: SplittingType, field: Field, seed: int = 0) -> CoHiggsMatrix:
    """A field with every admissible entry drawn uniformly at random.

    Entries whose space has negative degree stay zero regardless of the
    seed.  Deterministic per (splitting, field, seed).
    """
    rng = _rng("random", st, field, seed)
    entries = _zero_matrix_entries(st, field)
    r = st.rank
    for i in range(r):
        for j in range(r):
            d = hom_degree(st, i, j)
            if d >= 0:
                entries[i][j] = random_poly(field, d, rng)
    return CoHiggsMatrix(st, field, tuple(map(tuple, entries)))


class LineSubbundle:
    """A degree-d line subbundle of the split bundle, as a section tuple.

    Entry i is a form of degree ``m_i - d`` (the zero marker when that is
    negative).  The tuple must not vanish identically; it defines an actual
    subbundle, rather than a subsheaf with smaller saturation, exactly when
    the nonzero entries have constant gcd.
    """

    __slots__ = ("splitting", "field", "degree", "sections", "_saturated")

    def __init__(
        self,
        splitting: SplittingType,
        field: Field,
        degree: int,
        sections: Sequence[HomogPoly],
    ) -> None:
        sections = tuple(sections)
        if len(sections) != splitting.rank:
            raise ValueError("one section per summand required")
        for m, p in zip(splitting.degrees, sections):
            want = m - degree
            if want < 0:
                if not p.is_zero:
                    raise ValueError(f"section into a degree-{m} summand must vanish")
            elif p.degree != want and not (p.degree == -1 and p.is_zero):
                raise ValueError(f"section has degree {p.degree}, expected {want}")
        if all(p.is_zero for p in sections):
            raise ValueError("the zero tuple defines no subbundle")
        self.splitting = splitting
        self.field = field
        self.degree = degree
        self.sections = sections
        self._saturated: bool | None = None

    @property
    def is_saturated(self) -> bool:
        if self._saturated is None:
            g = gcd_many(self.sections)
            self._saturated = g is not None and g.is_constant()
        return self._saturated

    def scale(self, c) -> "LineSubbundle":
        return LineSubbundle(
            self.splitting,
            self.field,
            self.degree,
            tuple(p.scale(c) if p.degree >= 0 else p for p in self.sections),
        )

    def section_strings(self) -> list[str]:
        return [str(p) for p in self.sections]

    def __repr__(self) -> str:
        return f"LineSubbundle(degree={self.degree}, sections={self.section_strings()})"


def apply_field(phi: CoHiggsMatrix, line: LineSubbundle) -> tuple[HomogPoly, ...]:
    """Evaluate the field on a section tuple; entry i has degree m_i - d + 2."""
    if phi.splitting != line.splitting:
        raise ValueError("field and subbundle live on different splittings")
    r = phi.rank
    out = []
    for i in range(r):
        expected = phi.splitting.degrees[i] - line.degree + 2
        acc = HomogPoly.zero(phi.field, max(expected, -1))
        for j in range(r):
            e = phi.entries[i][j]
            p = line.sections[j]
            if e.degree >= 0 and p.degree >= 0:
                acc = acc + e * p
        assert acc.degree == max(expected, -1) or acc.is_zero, (
            f"BUG: output entry {i} has degree {acc.degree}, expected {expected}"
        )
        out.append(acc)
    return tuple(out)


def is_invariant(phi: CoHiggsMatrix, line: LineSubbundle) -> bool:
    """Whether the field maps the line into itself (twisted by degree 2).

    Exact test: the image tuple is proportional to the section tuple iff all
    two-by-two wedges ``p_i (phi p)_j - p_j (phi p)_i`` vanish identically.
    """
    image = apply_field(phi, line)
    r = phi.rank
    for i in range(r):
        p_i = line.sections[i]
        for j in range(i + 1, r):
            p_j = line.sections[j]
            left = p_i * image[j] if p_i.degree >= 0 and image[j].degree >= 0 else None
            right = p_j * image[i] if p_j.degree >= 0 and image[i].degree >= 0 else None
            if left is None and right is None:
                continue
            if left is None:
                if not right.is_zero:
                    return False
            elif right is None:
                if not left.is_zero:
                    return False
            elif not (left - right).is_zero:
                return False
    return True


def enumerate_line_subbundles(
    st: SplittingType, degree: int, field: PrimeField
) -> Iterator[LineSubbundle]:
    """Every saturated line subbundle of one degree, up to scalar.

    Representatives are normalized so the first nonzero coefficient (scanning
    summands in order, coefficients within each section in order) equals 1;
    the stream is empty when the degree exceeds the largest summand degree.
    """
    if not field.finite:
        raise ValueError("subbundle enumeration needs a finite field")
    section_degrees = [m - degree for m in st.degrees]
    slots = [
        (i, k)
        for i, d in enumerate(section_degrees)
        if d >= 0
        for k in range(d + 1)
    ]
    elements = list(field.elements())

    def build(values: dict[tuple[int, int], int]) -> LineSubbundle:
        sections = []
        for i, d in enumerate(section_degrees):
            if d < 0:
                sections.append(HomogPoly.zero(field))
            else:
                sections.append(
                    HomogPoly(field, d, tuple(values.get((i, k), 0) for k in range(d + 1)))
                )
        return LineSubbundle(st, field, degree, sections)

    for pivot in range(len(slots)):
        free = slots[pivot + 1 :]
        for combo in product(elements, repeat=len(free)):
            values = dict(zip(free, combo))
            values[slots[pivot]] = field.one
            line = build(values)
            if line.is_saturated:
                yield line


@dataclass(frozen=True)
class OracleWitness:
    """A destabilizing invariant subbundle found by the oracle.

    For ``rank == 2`` the subbundle was detected on the dual splitting as an
    invariant annihilator line, recorded in ``dual_sections``.
    """

    rank: int
    degree: int
    sections: tuple[str, ...] = ()
    dual_sections: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        out: dict = {"rank": self.rank, "degree": self.degree}
        if self.sections:
            out["sections"] = list(self.sections)
        if self.dual_sections:
            out["dual_sections"] = list(self.dual_sections)
        return out


@dataclass(frozen=True)
class OracleVerdict:
    passes: bool
    mode: str
    field_name: str
    slope: Fraction
    witnesses: tuple[OracleWitness, ...] = ()

    @property
    def verdict(self) -> str:
        return "PASSES" if self.passes else "FAILS"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "field": self.field_name,
            "slope": str(self.slope),
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


def _violation_threshold(mode: str, slope: Fraction) -> int:
    # stable: an invariant subbundle of slope >= mu violates;
    # semistable: only slope > mu does.
    if mode == "stable":
        return math.ceil(slope)
    if mode == "semistable":
        return math.floor(slope) + 1
    raise ValueError(f"mode must be 'stable' or 'semistable', not {mode!r}")


def semistability_oracle(phi: CoHiggsMatrix, mode: str) -> OracleVerdict:
    """Search for a destabilizing invariant subbundle over the prime field.

    Line subbundles are enumerated from the top degree down to the slope
    threshold; for rank 3, invariant rank-2 subbundles are found as
    invariant annihilator lines of the dual splitting under the transposed
    field.  First witness wins.  PASSES only certifies the absence of
    destabilizing subbundles rational over this field.
    """
    st = phi.splitting
    fld = phi.field
    if st.rank > ORACLE_MAX_RANK:
        raise ValueError(f"oracle supports rank <= {ORACLE_MAX_RANK}, got {st.rank}")
    if not fld.finite:
        raise ValueError("oracle needs a finite coefficient field")
    mu = st.slope
    threshold = _violation_threshold(mode, mu)

    def passes() -> OracleVerdict:
        return OracleVerdict(True, mode, fld.name, mu)

    if st.rank == 1:
        # a line bundle has no proper subbundles at all
        return passes()

    for d in range(st.degrees[0], threshold - 1, -1):
        for line in enumerate_line_subbundles(st, d, fld):
            if is_invariant(phi, line):
                witness = OracleWitness(
                    rank=1, degree=d, sections=tuple(line.section_strings())
                )
                return OracleVerdict(False, mode, fld.name, mu, (witness,))

    if st.rank == 3:
        phi_t = phi.transpose_dual()
        dual = phi_t.splitting
        dual_threshold = _violation_threshold(mode, dual.slope)
        for d in range(dual.degrees[0], dual_threshold - 1, -1):
            for line in enumerate_line_subbundles(dual, d, fld):
                if is_invariant(phi_t, line):
                    witness = OracleWitness(
                        rank=2,
                        degree=st.degree + d,
                        dual_sections=tuple(line.section_strings()),
                    )
                    return OracleVerdict(False, mode, fld.name, mu, (witness,))

    return passes()


def enumerate_all_fields(st: SplittingType, field: PrimeField) -> Iterator[CoHiggsMatrix]:
    """Every co-Higgs matrix on a splitting over a prime field.

    The iteration ranges over the structurally free coefficients only;
    entries with negative degree stay zero.  Intended for small exhaustive
    certification sweeps.
    """
    r = st.rank
    free = [
        (i, j, hom_degree(st, i, j))
        for i in range(r)
        for j in range(r)
        if hom_degree(st, i, j) >= 0
    ]
    slot_counts = [d + 1 for (_, _, d) in free]
    elements = list(field.elements())
    for combo in product(*(product(elements, repeat=n) for n in slot_counts)):
        entries = _zero_matrix_entries(st, field)
        for (i, j, d), coeffs in zip(free, combo):
            entries[i][j] = HomogPoly(field, d, coeffs)
        yield CoHiggsMatrix(st, field, tuple(map(tuple, entries)))
