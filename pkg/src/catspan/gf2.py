"""GF(2) linear algebra on int bitmasks.

Vectors of V_n live in machine words: bit i-1 holds the coefficient of e_i,
so e_1 is the lowest bit.  All user-facing indices are 1-based; bit positions
never leak.  Subspaces are kept in reduced row-echelon form with pivots
ascending, which makes equality and hashing structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BitVector",
    "Subspace",
    "SymplecticSpace",
    "vec_add",
    "symplectic_form",
    "form_masks",
    "span",
    "span_masks",
    "subspace_sum",
    "contains",
    "equals",
    "is_isotropic",
    "intersection",
    "null_space",
    "mask_to_string",
    "string_to_mask",
    "subspace_key",
]


def mask_to_string(mask: int, n: int) -> str:
    """Render a mask as n chars of 0/1; leftmost char is the e_1 coefficient."""
    return "".join("1" if (mask >> k) & 1 else "0" for k in range(n))


def string_to_mask(s: str) -> int:
    """Inverse of mask_to_string; rejects anything but 0/1 chars."""
    mask = 0
    for k, c in enumerate(s):
        if c == "1":
            mask |= 1 << k
        elif c != "0":
            raise ValueError(f"bad bitstring char {c!r} in {s!r}")
    return mask


@dataclass(frozen=True, slots=True)
class BitVector:
    """Vector of V_n; immutable and hashable."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"ambient dimension must be >= 0, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} does not fit in V_{self.n}")

    @classmethod
    def zero(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, i: int) -> "BitVector":
        """The basis vector e_i, 1-based."""
        if not 1 <= i <= n:
            raise ValueError(f"unit index {i} outside [1, {n}]")
        return cls(n, 1 << (i - 1))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVector":
        """Sum of e_i over the given 1-based indices."""
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"index {i} outside [1, {n}]")
            mask ^= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        return cls(len(s), string_to_mask(s))

    def to_string(self) -> str:
        return mask_to_string(self.mask, self.n)

    def indices(self) -> tuple[int, ...]:
        """1-based support."""
        return tuple(k + 1 for k in range(self.n) if (self.mask >> k) & 1)

    def coeff(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} outside [1, {self.n}]")
        return (self.mask >> (i - 1)) & 1

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    def __add__(self, other: "BitVector") -> "BitVector":
        return vec_add(self, other)

    def __str__(self) -> str:
        return self.to_string()


def vec_add(x: BitVector, y: BitVector) -> BitVector:
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")
    return BitVector(x.n, x.mask ^ y.mask)


def form_masks(a: int, b: int) -> int:
    """Nearest-neighbour pairing of two masks: sum_i a_i*b_{i+1} + a_{i+1}*b_i."""
    return (((a >> 1) & b).bit_count() + ((b >> 1) & a).bit_count()) & 1


def symplectic_form(x: BitVector, y: BitVector) -> int:
    """<x, y> for the form with <e_i, e_j> = 1 iff |i - j| = 1."""
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")
    if x.n % 2:
        raise ValueError(f"ambient dimension must be even, got {x.n}")
    return form_masks(x.mask, y.mask)


def _rref(masks: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon form; pivot of a row is its lowest set bit."""
    rows: list[int] = []
    for m in masks:
        for r in rows:
            if m & (r & -r):
                m ^= r
        if m:
            p = m & -m
            rows = [r ^ m if r & p else r for r in rows]
            rows.append(m)
    rows.sort(key=lambda r: r & -r)
    return tuple(rows)


def _reduce(m: int, rows: Sequence[int]) -> int:
    """Residue of m after elimination against RREF rows; 0 iff m is spanned."""
    for r in rows:
        if m & (r & -r):
            m ^= r
    return m


@dataclass(frozen=True, slots=True)
class Subspace:
    """Rowspace of V_n in canonical RREF.  Build via span() or span_masks()."""

    n: int
    rows: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    @property
    def basis(self) -> tuple[BitVector, ...]:
        return tuple(BitVector(self.n, r) for r in self.rows)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    def contains_mask(self, m: int) -> bool:
        return _reduce(m, self.rows) == 0

    def __contains__(self, v: BitVector) -> bool:
        if v.n != self.n:
            raise ValueError(f"dimension mismatch: {v.n} vs {self.n}")
        return self.contains_mask(v.mask)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {other.n} vs {self.n}")
        return all(self.contains_mask(r) for r in other.rows)

    def member_masks(self) -> Iterator[int]:
        """All 2^dim member masks.  Small subspaces only."""
        k = len(self.rows)
        for sel in range(1 << k):
            m = 0
            for j in range(k):
                if (sel >> j) & 1:
                    m ^= self.rows[j]
            yield m

    def to_json(self) -> dict:
        return {"D": self.n, "basis": [mask_to_string(r, self.n) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "Subspace":
        n = obj["D"]
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"bad ambient dimension {n!r}")
        masks = []
        for s in obj["basis"]:
            if len(s) != n:
                raise ValueError(f"bitstring {s!r} has length {len(s)}, expected {n}")
            masks.append(string_to_mask(s))
        return span_masks(masks, n)


def subspace_key(E: Subspace) -> tuple:
    """Canonical sort key: (dim, lexicographic basis strings)."""
    return (E.dim, tuple(mask_to_string(r, E.n) for r in E.rows))


def span_masks(masks: Iterable[int], n: int) -> Subspace:
    rows = _rref(masks)
    if rows and rows[-1] >= (1 << n):
        raise ValueError(f"vector does not fit in V_{n}")
    return Subspace(n, rows)


def span(vectors: Iterable[BitVector], n: int | None = None) -> Subspace:
    """Canonical subspace spanned by the vectors; n is required when empty."""
    vecs = list(vectors)
    if vecs:
        m = vecs[0].n
        if n is not None and n != m:
            raise ValueError(f"dimension mismatch: {n} vs {m}")
        n = m
        for v in vecs[1:]:
            if v.n != n:
                raise ValueError(f"dimension mismatch: {v.n} vs {n}")
    elif n is None:
        raise ValueError("empty span needs an explicit ambient dimension")
    return span_masks((v.mask for v in vecs), n)


def subspace_sum(E: Subspace, F: Subspace) -> Subspace:
    if E.n != F.n:
        raise ValueError(f"dimension mismatch: {E.n} vs {F.n}")
    return span_masks(E.rows + F.rows, E.n)


def contains(E: Subspace, x: BitVector) -> bool:
    return x in E


def equals(E: Subspace, F: Subspace) -> bool:
    if E.n != F.n:
        raise ValueError(f"dimension mismatch: {E.n} vs {F.n}")
    return E.rows == F.rows


def is_isotropic(E: Subspace) -> bool:
    """True when the form vanishes on E x E.  Alternating, so pairs suffice."""
    if E.n % 2:
        raise ValueError(f"ambient dimension must be even, got {E.n}")
    rows = E.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if form_masks(rows[i], rows[j]):
                return False
    return True


def intersection(E: Subspace, F: Subspace) -> Subspace:
    """E intersect F by the Zassenhaus trick on stacked [left | right] blocks."""
    if E.n != F.n:
        raise ValueError(f"dimension mismatch: {E.n} vs {F.n}")
    n = E.n
    left = (1 << n) - 1
    stacked = [r | (r << n) for r in E.rows] + list(F.rows)
    inter = [r >> n for r in _rref(stacked) if not r & left]
    return span_masks(inter, n)


def null_space(masks: Sequence[int], width: int) -> tuple[int, ...]:
    """Canonical basis of {x : parity(r & x) = 0 for every row r}."""
    rows = _rref(masks)
    if rows and rows[-1] >= (1 << width):
        raise ValueError(f"row does not fit in width {width}")
    pivots = [(r & -r).bit_length() - 1 for r in rows]
    pivot_set = set(pivots)
    basis = []
    for c in range(width):
        if c in pivot_set:
            continue
        v = 1 << c
        for r, p in zip(rows, pivots):
            if (r >> c) & 1:
                v |= 1 << p
        basis.append(v)
    return _rref(basis)


@dataclass(frozen=True, slots=True)
class SymplecticSpace:
    """Ambient V_n with the nearest-neighbour form; n = 2d must be even."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.n % 2:
            raise ValueError(f"ambient dimension must be even and >= 0, got {self.n}")

    @property
    def d(self) -> int:
        return self.n // 2

    @property
    def odd_part_mask(self) -> int:
        """Support mask of the odd-index coordinate subspace (e_1, e_3, ...)."""
        return ((1 << self.n) - 1) // 3

    @property
    def even_part_mask(self) -> int:
        return self.odd_part_mask << 1

    def unit(self, i: int) -> BitVector:
        return BitVector.unit(self.n, i)

    def full_vector(self) -> BitVector:
        """e_1 + e_2 + ... + e_n."""
        return BitVector(self.n, (1 << self.n) - 1)

    def odd_part(self) -> Subspace:
        return span_masks((1 << k for k in range(0, self.n, 2)), self.n)

    def even_part(self) -> Subspace:
        return span_masks((1 << k for k in range(1, self.n, 2)), self.n)

    def form(self, x: BitVector, y: BitVector) -> int:
        if x.n != self.n or y.n != self.n:
            raise ValueError("vector does not live in this space")
        return form_masks(x.mask, y.mask)
