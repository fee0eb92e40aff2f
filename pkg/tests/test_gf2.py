"""Core GF(2) linear algebra: vectors, the form, canonical subspaces."""

import random

import pytest

from catspan.gf2 import (
    BitVector,
    Subspace,
    SymplecticSpace,
    contains,
    equals,
    form_masks,
    intersection,
    is_isotropic,
    mask_to_string,
    null_space,
    span,
    span_masks,
    string_to_mask,
    subspace_key,
    subspace_sum,
    symplectic_form,
    vec_add,
)
from catspan.oracle import all_subspaces


def test_bitstring_examples():
    assert mask_to_string(0b0101, 4) == "1010"
    assert mask_to_string(0, 3) == "000"
    assert string_to_mask("1010") == 0b0101
    assert string_to_mask("") == 0
    with pytest.raises(ValueError):
        string_to_mask("10x1")


def test_bitstring_roundtrip_random():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randrange(0, 20)
        m = rng.randrange(1 << n) if n else 0
        s = mask_to_string(m, n)
        assert len(s) == n
        assert string_to_mask(s) == m


def test_bitvector_constructors():
    v = BitVector.unit(4, 3)
    assert v.mask == 0b100
    assert v.indices() == (3,)
    assert v.coeff(3) == 1 and v.coeff(2) == 0
    assert BitVector.from_indices(4, [1, 3]).to_string() == "1010"
    assert BitVector.from_string("0110").mask == 0b0110
    assert str(BitVector.from_string("0110")) == "0110"
    assert BitVector.zero(5).is_zero
    assert not BitVector.unit(5, 1).is_zero


def test_bitvector_validation():
    with pytest.raises(ValueError):
        BitVector(-1)
    with pytest.raises(ValueError):
        BitVector(2, 4)
    with pytest.raises(ValueError):
        BitVector.unit(4, 0)
    with pytest.raises(ValueError):
        BitVector.unit(4, 5)
    with pytest.raises(ValueError):
        BitVector.from_indices(4, [5])
    with pytest.raises(ValueError):
        BitVector.unit(4, 1).coeff(5)


def test_vector_addition():
    x = BitVector.from_indices(4, [1, 2])
    y = BitVector.from_indices(4, [2, 3])
    assert (x + y).indices() == (1, 3)
    assert vec_add(x, x).is_zero
    with pytest.raises(ValueError):
        vec_add(x, BitVector.unit(6, 1))


def test_form_neighbour_table():
    n = 8
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            got = symplectic_form(BitVector.unit(n, i), BitVector.unit(n, j))
            assert got == (1 if abs(i - j) == 1 else 0)


def test_form_bilinear_exhaustive_v4():
    for a in range(16):
        for b in range(16):
            for c in range(16):
                assert form_masks(a ^ b, c) == form_masks(a, c) ^ form_masks(b, c)
                assert form_masks(c, a ^ b) == form_masks(c, a) ^ form_masks(c, b)


def test_form_symmetric_and_alternating_v6():
    for a in range(64):
        assert form_masks(a, a) == 0
        for b in range(64):
            assert form_masks(a, b) == form_masks(b, a)


def test_form_bilinear_random_v12():
    rng = random.Random(3)
    for _ in range(2000):
        a, b, c = (rng.randrange(1 << 12) for _ in range(3))
        assert form_masks(a ^ b, c) == form_masks(a, c) ^ form_masks(b, c)


def test_form_nondegenerate_through_v8():
    for n in (2, 4, 6, 8):
        for x in range(1, 1 << n):
            assert any(form_masks(x, 1 << k) for k in range(n)), (n, x)


def test_form_needs_even_dimension():
    with pytest.raises(ValueError):
        symplectic_form(BitVector.unit(3, 1), BitVector.unit(3, 2))
    with pytest.raises(ValueError):
        symplectic_form(BitVector.unit(4, 1), BitVector.unit(6, 1))


def test_span_canonical_under_row_operations():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randrange(1, 9)
        masks = [rng.randrange(1 << n) for _ in range(rng.randrange(0, 5))]
        E = span_masks(masks, n)
        # recombine generators: shuffles and row additions cannot move the span
        mixed = list(masks)
        rng.shuffle(mixed)
        for _ in range(5):
            if len(mixed) >= 2:
                i, j = rng.sample(range(len(mixed)), 2)
                mixed[i] ^= mixed[j]
        assert span_masks(mixed, n) == E
        assert span_masks(E.rows, n) == E


def test_rref_pivot_structure():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randrange(1, 10)
        E = span_masks([rng.randrange(1 << n) for _ in range(4)], n)
        pivots = [r & -r for r in E.rows]
        assert pivots == sorted(pivots)
        assert len(set(pivots)) == len(pivots)
        for k, r in enumerate(E.rows):
            for j, other in enumerate(E.rows):
                if j != k:
                    assert other & pivots[k] == 0


def test_membership_matches_member_masks():
    rng = random.Random(41)
    for _ in range(100):
        n = 6
        E = span_masks([rng.randrange(1 << n) for _ in range(3)], n)
        members = set(E.member_masks())
        assert len(members) == 1 << E.dim
        for x in range(1 << n):
            assert E.contains_mask(x) == (x in members)


def test_span_input_validation():
    with pytest.raises(ValueError):
        span_masks([0b100], 2)
    with pytest.raises(ValueError):
        span([])
    with pytest.raises(ValueError):
        span([BitVector.unit(2, 1), BitVector.unit(4, 1)])
    with pytest.raises(ValueError):
        span([BitVector.unit(2, 1)], n=4)
    assert span([], n=3) == Subspace.zero(3)


def test_intersection_and_dim_formula_exhaustive_f2_3():
    subs = all_subspaces(3)
    assert len(subs) == 16
    for E in subs:
        for F in subs:
            got = intersection(E, F)
            want = set(E.member_masks()) & set(F.member_masks())
            assert set(got.member_masks()) == want
            total = subspace_sum(E, F)
            assert got.dim + total.dim == E.dim + F.dim


def test_intersection_random_v6():
    rng = random.Random(59)
    for _ in range(200):
        E = span_masks([rng.randrange(64) for _ in range(3)], 6)
        F = span_masks([rng.randrange(64) for _ in range(3)], 6)
        got = intersection(E, F)
        want = set(E.member_masks()) & set(F.member_masks())
        assert set(got.member_masks()) == want


def test_subspace_predicates():
    E = span_masks([0b0111, 0b0100], 4)
    assert BitVector.from_string("1100") in E
    assert BitVector.from_string("1000") not in E
    assert contains(E, BitVector.from_string("0010"))
    assert E.contains_subspace(span_masks([0b0100], 4))
    assert not E.contains_subspace(span_masks([0b1000], 4))
    assert equals(E, span_masks([0b0011, 0b0100], 4))
    with pytest.raises(ValueError):
        BitVector.unit(6, 1) in E
    with pytest.raises(ValueError):
        E.contains_subspace(span_masks([1], 6))
    with pytest.raises(ValueError):
        equals(E, span_masks([1], 6))


def test_is_isotropic_examples_and_oracle():
    assert is_isotropic(Subspace.zero(4))
    assert is_isotropic(span_masks([0b0001, 0b0100], 4))
    assert not is_isotropic(span_masks([0b0001, 0b0010], 4))
    with pytest.raises(ValueError):
        is_isotropic(span_masks([1], 3))
    for E in all_subspaces(4):
        members = list(E.member_masks())
        want = all(form_masks(x, y) == 0 for x in members for y in members)
        assert is_isotropic(E) == want


def test_null_space_against_direct_enumeration():
    rng = random.Random(11)
    for _ in range(80):
        width = rng.randrange(1, 7)
        masks = [rng.randrange(1 << width) for _ in range(rng.randrange(0, 4))]
        basis = null_space(masks, width)
        direct = {
            x
            for x in range(1 << width)
            if all((m & x).bit_count() % 2 == 0 for m in masks)
        }
        assert set(span_masks(basis, width).member_masks()) == direct
        assert len(basis) == width - span_masks(masks, width).dim
    with pytest.raises(ValueError):
        null_space([0b100], 2)


def test_subspace_serialization():
    E = span_masks([0b0111, 0b0100], 4)
    obj = E.to_json()
    assert obj["D"] == 4
    assert Subspace.from_json(obj) == E
    assert Subspace.from_json({"D": 0, "basis": []}) == Subspace.zero(0)
    with pytest.raises(ValueError):
        Subspace.from_json({"D": 4, "basis": ["101"]})
    with pytest.raises(ValueError):
        Subspace.from_json({"D": -2, "basis": []})


def test_subspace_key_is_injective():
    subs = all_subspaces(4)
    keys = {subspace_key(E) for E in subs}
    assert len(keys) == len(subs)
    ordered = sorted(subs, key=subspace_key)
    assert ordered[0] == Subspace.zero(4)
    assert [E.dim for E in ordered] == sorted(E.dim for E in subs)


def test_symplectic_space_parts():
    V = SymplecticSpace(6)
    assert V.d == 3
    assert V.odd_part_mask == 0b010101
    assert V.even_part_mask == 0b101010
    assert V.odd_part().dim == 3
    assert V.even_part().dim == 3
    assert intersection(V.odd_part(), V.even_part()).is_zero
    assert V.full_vector().indices() == (1, 2, 3, 4, 5, 6)
    assert V.unit(3) == BitVector.unit(6, 3)
    assert V.form(V.unit(2), V.unit(3)) == 1
    assert is_isotropic(V.odd_part())
    assert is_isotropic(V.even_part())
    with pytest.raises(ValueError):
        SymplecticSpace(5)
    with pytest.raises(ValueError):
        V.form(BitVector.unit(4, 1), V.unit(1))
