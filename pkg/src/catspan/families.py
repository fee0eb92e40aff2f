"""Inductive families of isotropic subspaces of V_n.

The level-0 and level-1 families are generated by a two-step induction: a
member of the smaller space is re-embedded with a gap opened at index i and
the new basis vector e_i is adjoined.  Lines spanned by consecutive-run
vectors e_a + ... + e_b recover the structure: level-0 members decompose
into odd-length runs only, level-1 members carry exactly one even-length
run, and dropping it is a bijection onto the sub-Lagrangian level-0 part.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import (
    BitVector,
    Subspace,
    _reduce,
    span_masks,
    subspace_key,
)

__all__ = [
    "Line",
    "FamilyTable",
    "embed_at",
    "build_families",
    "line_classes",
    "lines_in",
    "classify_by_lines",
    "level_down",
    "level_up",
]


@dataclass(frozen=True, slots=True, order=True)
class Line:
    """The line F(e_a + e_{a+1} + ... + e_b); 1-based, a <= b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise ValueError(f"bad line bounds ({self.a}, {self.b})")

    @property
    def parity(self) -> int:
        """Class index: 0 when b - a is odd (even-length run), else 1."""
        return 0 if (self.b - self.a) % 2 else 1

    def mask(self) -> int:
        return ((1 << (self.b - self.a + 1)) - 1) << (self.a - 1)

    def vector(self, n: int) -> BitVector:
        if self.b > n:
            raise ValueError(f"line ({self.a}, {self.b}) does not fit in V_{n}")
        return BitVector(n, self.mask())


@dataclass(frozen=True, slots=True)
class FamilyTable:
    """Both family levels at ambient dimension n, plus the Lagrangian split."""

    n: int
    f0: frozenset[Subspace]
    f1: frozenset[Subspace]
    f0_lagrangian: frozenset[Subspace]
    f0_sub: frozenset[Subspace]

    def sorted_f0(self) -> list[Subspace]:
        return sorted(self.f0, key=subspace_key)

    def sorted_f1(self) -> list[Subspace]:
        return sorted(self.f1, key=subspace_key)

    def to_json(self) -> dict:
        return {
            "D": self.n,
            "f0": [E.to_json() for E in self.sorted_f0()],
            "f1": [E.to_json() for E in self.sorted_f1()],
        }


def _check_slot(i: int, n_target: int) -> None:
    if not 1 <= i <= n_target:
        raise ValueError(f"slot {i} outside [1, {n_target}]")


def _embed_mask(i: int, m: int) -> int:
    # coordinates below i-1 stay, e_{i-1} fans out to e_{i-1}+e_i+e_{i+1},
    # coordinates from i upward shift by two
    if i < 2:
        return m << 2
    out = (m & ((1 << (i - 2)) - 1)) | ((m >> (i - 1)) << (i + 1))
    if (m >> (i - 2)) & 1:
        out |= 0b111 << (i - 2)
    return out


def embed_at(i: int, v: BitVector) -> BitVector:
    """Re-embed v in a space two wider, opening a gap at index i."""
    if v.n % 2:
        raise ValueError(f"source dimension must be even, got {v.n}")
    _check_slot(i, v.n + 2)
    return BitVector(v.n + 2, _embed_mask(i, v.mask))


def _embed_subspace(i: int, E: Subspace) -> list[int]:
    return [_embed_mask(i, r) for r in E.rows]


@lru_cache(maxsize=None)
def build_families(n: int) -> FamilyTable:
    """Generate both family levels at ambient dimension n by induction."""
    if n < 0 or n % 2:
        raise ValueError(f"ambient dimension must be even and >= 0, got {n}")
    if n == 0:
        zero = Subspace.zero(0)
        return FamilyTable(0, frozenset([zero]), frozenset(), frozenset([zero]), frozenset())

    prev = build_families(n - 2)
    f0 = {Subspace.zero(n)}
    for i in range(1, n + 1):
        ei = 1 << (i - 1)
        for E in prev.f0:
            f0.add(span_masks(_embed_subspace(i, E) + [ei], n))
    f1 = {span_masks([(1 << n) - 1], n)}
    for i in range(1, n + 1):
        ei = 1 << (i - 1)
        for E in prev.f1:
            f1.add(span_masks(_embed_subspace(i, E) + [ei], n))

    half = n // 2
    lag = frozenset(E for E in f0 if E.dim == half)
    sub = frozenset(E for E in f0 if E.dim < half)
    return FamilyTable(n, frozenset(f0), frozenset(f1), lag, sub)


def line_classes(n: int) -> tuple[frozenset[Line], frozenset[Line]]:
    """All consecutive-run lines of V_n, split by parity class (0, 1)."""
    if n < 0:
        raise ValueError(f"ambient dimension must be >= 0, got {n}")
    lines = [Line(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    return (
        frozenset(L for L in lines if L.parity == 0),
        frozenset(L for L in lines if L.parity == 1),
    )


def lines_in(E: Subspace) -> frozenset[Line]:
    """Every consecutive-run line contained in E."""
    out = []
    for a in range(1, E.n + 1):
        for b in range(a, E.n + 1):
            L = Line(a, b)
            if _reduce(L.mask(), E.rows) == 0:
                out.append(L)
    return frozenset(out)


def classify_by_lines(E: Subspace) -> tuple[str, Line | None]:
    """Shape test from the contained lines.

    Returns ("f0", None) when E is the direct sum of its lines and all of
    them are parity-1, ("f1", L) when exactly one is parity-0, and
    ("other", None) in every remaining case.  The test is necessary for
    family membership, not sufficient: F(e_1+e_2+e_3) in V_4 is the direct
    sum of one parity-1 line but belongs to neither level.
    """
    B = lines_in(E)
    if len(B) != E.dim or span_masks((L.mask() for L in B), E.n) != E:
        return ("other", None)
    marked = [L for L in B if L.parity == 0]
    if not marked:
        return ("f0", None)
    if len(marked) == 1:
        return ("f1", marked[0])
    return ("other", None)


def level_down(E: Subspace) -> Subspace:
    """Drop the unique parity-0 line of a level-1 member.

    Bijection from the level-1 family onto the sub-Lagrangian level-0 part.
    """
    table = build_families(E.n)
    if E not in table.f1:
        raise ValueError(f"subspace is not a level-1 member in V_{E.n}")
    kind, marked = classify_by_lines(E)
    if kind != "f1" or marked is None:
        raise AssertionError(f"level-1 member failed the line test in V_{E.n}")
    B = lines_in(E)
    return span_masks((L.mask() for L in B if L != marked), E.n)


@lru_cache(maxsize=None)
def _level_map(n: int) -> dict[Subspace, Subspace]:
    return {level_down(E): E for E in build_families(n).f1}


def level_up(E0: Subspace) -> Subspace:
    """Inverse of level_down, realized by inverting the finite table."""
    inv = _level_map(E0.n)
    if E0 not in inv:
        raise ValueError(f"subspace is not a sub-Lagrangian level-0 member in V_{E0.n}")
    return inv[E0]
