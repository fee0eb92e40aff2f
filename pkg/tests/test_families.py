"""Inductive isotropic families, run lines, and the level bijection."""

import math

import pytest

from _fixtures import F0_V2, F0_V4, F1_V2, F1_V4, sub
from catspan.counting import catalan
from catspan.families import (
    Line,
    build_families,
    classify_by_lines,
    embed_at,
    level_down,
    level_up,
    line_classes,
    lines_in,
)
from catspan.gf2 import (
    BitVector,
    Subspace,
    is_isotropic,
    span_masks,
    subspace_sum,
    symplectic_form,
)


def test_line_basics():
    assert Line(2, 3).mask() == 0b0110
    assert Line(1, 1).mask() == 0b1
    assert Line(1, 2).parity == 0
    assert Line(1, 3).parity == 1
    assert Line(2, 2).parity == 1
    assert Line(1, 4).vector(4).to_string() == "1111"
    assert Line(1, 2) < Line(2, 2)
    with pytest.raises(ValueError):
        Line(0, 1)
    with pytest.raises(ValueError):
        Line(3, 2)
    with pytest.raises(ValueError):
        Line(3, 5).vector(4)


def test_line_classes_v4():
    parity0, parity1 = line_classes(4)
    assert parity0 == {Line(1, 2), Line(2, 3), Line(3, 4), Line(1, 4)}
    assert parity1 == {Line(1, 1), Line(2, 2), Line(3, 3), Line(4, 4), Line(1, 3), Line(2, 4)}


def test_line_vectors_isotropy():
    # a run vector pairs to zero with itself, and runs of odd length are the
    # ones whose span can sit inside a level-0 member
    for n in (2, 4, 6):
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                v = Line(a, b).vector(n)
                assert symplectic_form(v, v) == 0


def test_embed_examples():
    e1 = BitVector.unit(2, 1)
    assert embed_at(1, e1) == BitVector.unit(4, 3)
    assert embed_at(2, e1) == BitVector.from_indices(4, [1, 2, 3])
    assert embed_at(3, BitVector.unit(2, 2)) == BitVector.from_indices(4, [2, 3, 4])
    assert embed_at(4, BitVector.from_indices(2, [1, 2])) == BitVector.from_indices(4, [1, 2])
    with pytest.raises(ValueError):
        embed_at(0, e1)
    with pytest.raises(ValueError):
        embed_at(5, e1)
    with pytest.raises(ValueError):
        embed_at(1, BitVector.unit(3, 1))


def test_embed_is_linear_and_injective():
    for i in range(1, 7):
        seen = set()
        for m in range(16):
            img = embed_at(i, BitVector(4, m))
            assert img not in seen
            seen.add(img)
        for a in range(16):
            for b in range(16):
                lhs = embed_at(i, BitVector(4, a ^ b))
                rhs = embed_at(i, BitVector(4, a)) + embed_at(i, BitVector(4, b))
                assert lhs == rhs


def test_embed_preserves_form():
    for i in range(1, 7):
        for a in range(16):
            for b in range(16):
                x, y = BitVector(4, a), BitVector(4, b)
                assert symplectic_form(embed_at(i, x), embed_at(i, y)) == symplectic_form(x, y)


def test_family_tables_match_reference_lists():
    t2 = build_families(2)
    assert t2.f0 == F0_V2
    assert t2.f1 == F1_V2
    t4 = build_families(4)
    assert t4.f0 == F0_V4
    assert t4.f1 == F1_V4


def test_family_cardinalities_small():
    for D in (2, 4, 6, 8):
        table = build_families(D)
        assert len(table.f0) == math.comb(D + 1, D // 2)
        assert len(table.f1) == math.comb(D + 1, (D - 2) // 2)
        assert len(table.f0_lagrangian) == catalan(D // 2 + 1)


def test_families_isotropic_and_disjoint():
    for D in (2, 4, 6, 8):
        table = build_families(D)
        for E in table.f0 | table.f1:
            assert is_isotropic(E)
            assert E.dim <= D // 2
        assert not table.f0 & table.f1
        assert table.f0 == table.f0_lagrangian | table.f0_sub
        assert all(E.dim == D // 2 for E in table.f0_lagrangian)
        assert all(E.dim < D // 2 for E in table.f0_sub)


def test_build_families_validation():
    with pytest.raises(ValueError):
        build_families(3)
    with pytest.raises(ValueError):
        build_families(-2)


def test_lines_in_example():
    E = sub(4, (1, 2, 3), (2,))
    assert lines_in(E) == {Line(2, 2), Line(1, 3)}
    assert lines_in(Subspace.zero(4)) == frozenset()


def test_classify_examples():
    assert classify_by_lines(sub(4, (1,), (3,))) == ("f0", None)
    assert classify_by_lines(sub(2, (1, 2))) == ("f1", Line(1, 2))
    assert classify_by_lines(sub(2, (1,), (2,))) == ("other", None)
    assert classify_by_lines(sub(4, (1, 2, 3, 4), (2,))) == ("f1", Line(1, 4))


def test_classify_is_not_a_membership_test():
    # the line test is necessary but not sufficient: this span of a single
    # odd-length run looks level-0 shaped yet the builder never produces it
    E = sub(4, (1, 2, 3))
    assert classify_by_lines(E) == ("f0", None)
    assert E not in build_families(4).f0


def test_classification_exact_within_families():
    for D in (2, 4, 6, 8):
        table = build_families(D)
        for E in table.f0:
            kind, marked = classify_by_lines(E)
            assert kind == "f0" and marked is None
        for E in table.f1:
            kind, marked = classify_by_lines(E)
            assert kind == "f1"
            assert marked is not None and marked.parity == 0


def test_marked_line_endpoints():
    # the unique even-length run of a level-1 member always starts odd and
    # ends even
    for D in (2, 4, 6, 8):
        for E in build_families(D).f1:
            _, marked = classify_by_lines(E)
            assert marked.a % 2 == 1
            assert marked.b % 2 == 0


def test_level_down_example():
    E = sub(4, (1, 2, 3, 4), (2,))
    assert level_down(E) == sub(4, (2,))
    with pytest.raises(ValueError):
        level_down(sub(4, (1,)))
    with pytest.raises(ValueError):
        level_down(sub(4, (1,), (2,)))


def test_level_up_example():
    assert level_up(sub(2)) == sub(2, (1, 2))
    with pytest.raises(ValueError):
        level_up(sub(2, (1,)))


def test_level_bijection_exhaustive():
    for D in (2, 4, 6, 8):
        table = build_families(D)
        images = {}
        for E in table.f1:
            E0 = level_down(E)
            _, marked = classify_by_lines(E)
            assert E0 in table.f0_sub
            assert E0.dim + 1 == E.dim
            line_span = span_masks([marked.mask()], D)
            assert subspace_sum(E0, line_span) == E
            assert E0 not in images
            images[E0] = E
            assert level_up(E0) == E
        assert set(images) == set(table.f0_sub)


def test_family_table_json():
    table = build_families(4)
    obj = table.to_json()
    assert obj["D"] == 4
    assert len(obj["f0"]) == 10 and len(obj["f1"]) == 5
    assert obj["f0"][0] == {"D": 4, "basis": []}
    dims = [len(entry["basis"]) for entry in obj["f0"]]
    assert dims == sorted(dims)
