"""Noncrossing arc sets over odd indices and the odd-part collection.

An arc (a, b) with a, b odd stands for the vector e_a + e_{a+2} + ... + e_b.
A set of arcs is noncrossing when the index intervals are pairwise disjoint
or strictly nested.  Spanning the arc vectors of a noncrossing set is a
bijection onto the collection of subspaces of the odd-index part generated
by the slot induction; grades (arc count vs dimension) agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .gf2 import (
    BitVector,
    Subspace,
    intersection,
    null_space,
    span_masks,
    subspace_key,
    subspace_sum,
)

__all__ = [
    "Arc",
    "ArcSequence",
    "OddCollection",
    "is_noncrossing",
    "enumerate_noncrossing",
    "shift_arc",
    "extend_seq",
    "decompose",
    "embed_odd_at",
    "build_collection",
    "span_arcs",
    "arcs_of",
    "even_annihilator",
    "to_lagrangian",
    "from_lagrangian",
]


@dataclass(frozen=True, slots=True, order=True)
class Arc:
    """Arc (a, b): both odd, a <= b; stands for e_a + e_{a+2} + ... + e_b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise ValueError(f"bad arc bounds ({self.a}, {self.b})")
        if self.a % 2 == 0 or self.b % 2 == 0:
            raise ValueError(f"arc endpoints must be odd, got ({self.a}, {self.b})")

    def mask(self) -> int:
        # bits a-1, a+1, ..., b-1: a 0b...10101 block shifted into place
        return ((1 << (self.b - self.a + 2)) - 1) // 3 << (self.a - 1)

    def vector(self, n: int) -> BitVector:
        if self.b > n - 1:
            raise ValueError(f"arc ({self.a}, {self.b}) does not fit in V_{n}")
        return BitVector(n, self.mask())


def _pair_ok(x: Arc, y: Arc) -> bool:
    # disjoint intervals, or strictly nested either way round
    if x.b < y.a or y.b < x.a:
        return True
    if x.a < y.a and y.b < x.b:
        return True
    if y.a < x.a and x.b < y.b:
        return True
    return False


def is_noncrossing(arcs: Iterable[Arc]) -> bool:
    """Pairwise disjoint-or-strictly-nested; duplicates count as crossing."""
    xs = list(arcs)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if not _pair_ok(xs[i], xs[j]):
                return False
    return True


@dataclass(frozen=True, slots=True)
class ArcSequence:
    """A noncrossing set of arcs, stored sorted; hashable."""

    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if list(self.arcs) != sorted(set(self.arcs)):
            raise ValueError("arcs must be sorted and distinct; use ArcSequence.of")
        if not is_noncrossing(self.arcs):
            raise ValueError(f"arcs cross: {[(x.a, x.b) for x in self.arcs]}")

    @classmethod
    def of(cls, arcs: Iterable[Arc]) -> "ArcSequence":
        xs = sorted(arcs)
        if len(set(xs)) != len(xs):
            raise ValueError("duplicate arcs")
        return cls(tuple(xs))

    @property
    def s(self) -> int:
        return len(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __contains__(self, arc: Arc) -> bool:
        return arc in self.arcs

    def refines(self, other: "ArcSequence") -> bool:
        """Arc-set containment."""
        return set(self.arcs) <= set(other.arcs)

    def to_json(self) -> list[list[int]]:
        return [[x.a, x.b] for x in self.arcs]

    @classmethod
    def from_json(cls, obj: Iterable[Iterable[int]]) -> "ArcSequence":
        return cls.of(Arc(int(a), int(b)) for a, b in obj)


def seq_key(seq: ArcSequence) -> tuple:
    return (len(seq), tuple((x.a, x.b) for x in seq))


def enumerate_noncrossing(n: int) -> tuple[ArcSequence, ...]:
    """All noncrossing arc sets over odd indices in [1, n-1], canonically sorted."""
    if n < 0 or n % 2:
        raise ValueError(f"ambient dimension must be even and >= 0, got {n}")
    arcs = [Arc(a, b) for a in range(1, n, 2) for b in range(a, n, 2)]
    out: list[ArcSequence] = []
    chosen: list[Arc] = []

    def grow(start: int) -> None:
        out.append(ArcSequence(tuple(chosen)))
        for j in range(start, len(arcs)):
            c = arcs[j]
            if all(_pair_ok(c, x) for x in chosen):
                chosen.append(c)
                grow(j + 1)
                chosen.pop()

    grow(0)
    out.sort(key=seq_key)
    return tuple(out)


def shift_arc(i: int, arc: Arc, n: int) -> Arc:
    """Image of an arc over V_{n-2} under the slot-i shift into V_n."""
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} outside [1, {n}]")
    if arc.b > n - 3:
        raise ValueError(f"arc ({arc.a}, {arc.b}) does not fit in V_{n - 2}")
    if i <= arc.a:
        return Arc(arc.a + 2, arc.b + 2)
    if arc.a < i <= arc.b + 1:
        return Arc(arc.a, arc.b + 2)
    return arc


def extend_seq(i: int, seq: ArcSequence, n: int) -> ArcSequence:
    """Shift every arc past slot i; for odd i also adjoin the unit arc (i, i)."""
    mapped = [shift_arc(i, x, n) for x in seq]
    if i % 2:
        mapped.append(Arc(i, i))
    return ArcSequence.of(mapped)


def decompose(seq: ArcSequence, n: int) -> tuple[int, ArcSequence]:
    """Canonical inverse step: recover (i, seq') with extend_seq(i, seq', n) == seq.

    Picks the arc of minimal width b - a, ties broken by smallest a.  A unit
    arc gives odd i = a and is removed; otherwise i = a + 1 is even and every
    arc is kept.  The unshift below can never meet i in {a-1, a, b} for the
    remaining arcs; that structural fact is checked as it is used.
    """
    if not seq.arcs:
        raise ValueError("empty sequence has no decomposition")
    chosen = min(seq.arcs, key=lambda x: (x.b - x.a, x.a))
    if chosen.a == chosen.b:
        i = chosen.a
        rest = [x for x in seq.arcs if x != chosen]
    else:
        i = chosen.a + 1
        rest = list(seq.arcs)
    out = []
    for x in rest:
        if x.b < i:
            out.append(x)
        elif x.a < i <= x.b - 1:
            out.append(Arc(x.a, x.b - 2))
        elif i <= x.a - 2:
            out.append(Arc(x.a - 2, x.b - 2))
        else:
            raise AssertionError(
                f"unshift at slot {i} hit arc ({x.a}, {x.b}); input was not noncrossing"
            )
    if not 1 <= i <= n:
        raise ValueError(f"sequence does not fit in V_{n}")
    return i, ArcSequence.of(out)


def _embed_odd_mask(i: int, m: int) -> int:
    # odd-part version of the slot embedding: e_{i-1} fans out to
    # e_{i-1} + e_{i+1} (only reachable for even i), the rest shifts
    if i < 2:
        return m << 2
    out = (m & ((1 << (i - 2)) - 1)) | ((m >> (i - 1)) << (i + 1))
    if (m >> (i - 2)) & 1:
        out |= (1 << (i - 2)) | (1 << i)
    return out


def _odd_support(n: int) -> int:
    return ((1 << n) - 1) // 3


def embed_odd_at(i: int, v: BitVector) -> BitVector:
    """Slot-i embedding of the odd-index part of V_{v.n} into that of V_{v.n + 2}."""
    if v.n % 2:
        raise ValueError(f"source dimension must be even, got {v.n}")
    if v.mask & ~_odd_support(v.n):
        raise ValueError("vector is not supported on odd indices")
    if not 1 <= i <= v.n + 2:
        raise ValueError(f"slot {i} outside [1, {v.n + 2}]")
    return BitVector(v.n + 2, _embed_odd_mask(i, v.mask))


@dataclass(frozen=True, slots=True)
class OddCollection:
    """The induction-generated collection of subspaces of the odd-index part."""

    n: int
    members: frozenset[Subspace]

    def grade(self, s: int) -> frozenset[Subspace]:
        return frozenset(E for E in self.members if E.dim == s)

    def sorted_members(self) -> list[Subspace]:
        return sorted(self.members, key=subspace_key)

    def to_json(self) -> dict:
        return {"D": self.n, "members": [E.to_json() for E in self.sorted_members()]}


@lru_cache(maxsize=None)
def build_collection(n: int) -> OddCollection:
    """Generate the odd-part collection at ambient dimension n by induction."""
    if n < 0 or n % 2:
        raise ValueError(f"ambient dimension must be even and >= 0, got {n}")
    if n == 0:
        return OddCollection(0, frozenset([Subspace.zero(0)]))
    prev = build_collection(n - 2)
    members = {Subspace.zero(n)}
    for i in range(1, n + 1):
        for E in prev.members:
            rows = [_embed_odd_mask(i, r) for r in E.rows]
            if i % 2:
                rows.append(1 << (i - 1))
            members.add(span_masks(rows, n))
    return OddCollection(n, frozenset(members))


def span_arcs(seq: ArcSequence, n: int) -> Subspace:
    """Span of the arc vectors; lands in the collection with dim = arc count."""
    if n < 0 or n % 2:
        raise ValueError(f"ambient dimension must be even and >= 0, got {n}")
    for x in seq:
        if x.b > n - 1:
            raise ValueError(f"arc ({x.a}, {x.b}) does not fit in V_{n}")
    return span_masks((x.mask() for x in seq), n)


@lru_cache(maxsize=None)
def _arc_map(n: int) -> dict[Subspace, ArcSequence]:
    out: dict[Subspace, ArcSequence] = {}
    for seq in enumerate_noncrossing(n):
        E = span_arcs(seq, n)
        if E in out:
            raise AssertionError(f"two arc sets span the same subspace in V_{n}")
        out[E] = seq
    return out


def arcs_of(E: Subspace) -> ArcSequence:
    """The unique noncrossing arc set spanning a collection member."""
    table = _arc_map(E.n)
    if E not in table:
        raise ValueError(f"subspace is not a collection member in V_{E.n}")
    return table[E]


def even_annihilator(E: Subspace) -> Subspace:
    """Vectors of the even-index part pairing to zero with all of E."""
    n = E.n
    if n % 2:
        raise ValueError(f"ambient dimension must be even, got {n}")
    if any(r & ~_odd_support(n) for r in E.rows):
        raise ValueError("subspace is not supported on odd indices")
    d = n // 2
    # unknowns: coefficients of e_2, e_4, ..., e_{2d}; constraint per basis
    # vector v of E: <e_{2t}, v> = v_{2t-1} + v_{2t+1}
    constraints = []
    for r in E.rows:
        c = 0
        for t in range(1, d + 1):
            bit = (r >> (2 * t - 2)) & 1
            if 2 * t < n:
                bit ^= (r >> (2 * t)) & 1
            c |= bit << (t - 1)
        constraints.append(c)
    kernel = null_space(constraints, d)
    rows = [
        sum(((v >> t) & 1) << (2 * t + 1) for t in range(d))
        for v in kernel
    ]
    return span_masks(rows, n)


def to_lagrangian(E: Subspace) -> Subspace:
    """Collection member to Lagrangian level-0 member: E plus its annihilator."""
    if E not in build_collection(E.n).members:
        raise ValueError(f"subspace is not a collection member in V_{E.n}")
    bang = even_annihilator(E)
    out = subspace_sum(E, bang)
    if out.dim != E.dim + bang.dim or 2 * out.dim != E.n:
        raise AssertionError(f"annihilator sum is not Lagrangian in V_{E.n}")
    return out


def from_lagrangian(E: Subspace) -> Subspace:
    """Inverse direction: cut a Lagrangian level-0 member with the odd part."""
    from .families import build_families

    if E not in build_families(E.n).f0_lagrangian:
        raise ValueError(f"subspace is not a Lagrangian level-0 member in V_{E.n}")
    n = E.n
    odd = span_masks((1 << k for k in range(0, n, 2)), n)
    return intersection(E, odd)
