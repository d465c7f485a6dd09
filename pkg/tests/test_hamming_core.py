import math

import pytest

from hamnt import (FeasibilityError, HammingScheme, SchemeMismatchError,
                   Triple, common_neighbours, distance, enumerate_triples,
                   neighbours, vertex_from_text, vertex_to_text, weight)
from helpers import brute_distance, brute_neighbours, brute_triple_count

H42 = HammingScheme(4, 2)
H33 = HammingScheme(3, 3)


def test_scheme_validation():
    with pytest.raises(ValueError):
        HammingScheme(0, 2)
    with pytest.raises(ValueError):
        HammingScheme(3, 1)
    assert HammingScheme(10, 3).vertex_count == 3**10


def test_vertex_validation():
    with pytest.raises(ValueError):
        H42.vertex([0, 1, 1])
    with pytest.raises(ValueError):
        H42.vertex([0, 1, 2, 0])


def test_distance_examples():
    assert distance(H42.vertex([0, 0, 0, 0]), H42.vertex([0, 0, 0, 0])) == 0
    assert distance(H42.vertex([0, 0, 0, 0]), H42.vertex([1, 1, 0, 0])) == 2
    s6 = HammingScheme(6, 2)
    # delta witness of the m=6 family code, checked entrywise
    assert distance(s6.vertex([0, 0, 0, 0, 0, 0]), s6.vertex([0, 1, 1, 0, 1, 1])) == 4


def test_distance_scheme_mismatch():
    with pytest.raises(SchemeMismatchError):
        distance(H42.zero(), HammingScheme(4, 3).zero())


def test_distance_is_a_metric_exhaustive_h33():
    verts = list(H33.vertices())
    for u in verts:
        for v in verts:
            d = distance(u, v)
            assert d == distance(v, u)
            assert (d == 0) == (u == v)
    for u in verts:
        for v in verts:
            for w in verts:
                assert distance(u, w) <= distance(u, v) + distance(v, w)


def test_weight_examples():
    s3 = HammingScheme(3, 3)
    assert weight(s3.vertex([0, 0, 0])) == 0
    assert weight(s3.vertex([2, 0, 1])) == 2
    assert weight(HammingScheme(4, 2).vertex([1, 1, 1, 1])) == 4


def test_weight_equals_distance_from_zero():
    for scheme in (H42, H33):
        zero = scheme.zero()
        for v in scheme.vertices():
            assert weight(v) == distance(zero, v)


def test_neighbours_of_zero_h42():
    got = neighbours(H42.zero())
    assert [vertex_to_text(v) for v in got] == ["0001", "0010", "0100", "1000"]


def test_neighbours_match_brute_force_and_count():
    for scheme in (H42, H33, HammingScheme(2, 3)):
        expected_size = scheme.m * (scheme.q - 1)
        for v in scheme.vertices():
            got = neighbours(v)
            assert list(got) == sorted(got)
            assert len(got) == expected_size
            assert set(got) == brute_neighbours(v)


def test_neighbours_h23_example():
    s = HammingScheme(2, 3)
    got = {vertex_to_text(v) for v in neighbours(s.vertex([1, 0]))}
    assert got == {"00", "20", "11", "12"}


def test_common_neighbours_examples():
    got = common_neighbours(H42.vertex([0, 0, 0, 0]), H42.vertex([1, 1, 0, 0]))
    assert {vertex_to_text(v) for v in got} == {"1000", "0100"}
    s32 = HammingScheme(3, 2)
    assert common_neighbours(s32.vertex([0, 0, 0]), s32.vertex([1, 1, 1])) == ()
    with pytest.raises(ValueError):
        common_neighbours(H42.zero(), H42.zero())


def test_common_neighbours_size_two_at_distance_two():
    # exhaustive over H(4,2), H(3,3), H(2,4)
    for scheme in (H42, H33, HammingScheme(2, 4)):
        verts = list(scheme.vertices())
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if distance(u, v) == 2:
                    assert len(common_neighbours(u, v)) == 2


def test_triple_invariant_enforced():
    with pytest.raises(ValueError):
        Triple(H42.vertex([0, 0, 0, 0]), H42.vertex([1, 0, 0, 0]),
               H42.vertex([1, 1, 1, 0]))


@pytest.mark.parametrize("m,q", [(2, 2), (3, 2)])
def test_enumerate_triples_count_vs_brute_force(m, q):
    scheme = HammingScheme(m, q)
    triples = list(enumerate_triples(scheme))
    expected = (scheme.vertex_count * math.comb(m, 2) * (q - 1) ** 2 * 2)
    assert len(triples) == expected
    assert len(triples) == brute_triple_count(scheme)
    assert len(set((t.alpha, t.nu, t.beta) for t in triples)) == len(triples)


def test_enumerate_triples_counts_frozen():
    assert sum(1 for _ in enumerate_triples(HammingScheme(2, 2))) == 8
    assert sum(1 for _ in enumerate_triples(HammingScheme(3, 2))) == 48


def test_enumerate_triples_cap():
    with pytest.raises(FeasibilityError):
        enumerate_triples(HammingScheme(4, 2), enumeration_cap=10)


def test_vertex_text_round_trip():
    for scheme in (H42, H33):
        for v in scheme.vertices():
            assert vertex_from_text(scheme, vertex_to_text(v)) == v
    wide = HammingScheme(3, 12)
    v = wide.vertex([0, 11, 3])
    assert vertex_to_text(v) == "0,11,3"
    assert vertex_from_text(wide, "0,11,3") == v
    # q = 10 is the last digit-string alphabet
    ten = HammingScheme(2, 10)
    assert vertex_to_text(ten.vertex([9, 0])) == "90"
    assert vertex_from_text(ten, "90") == ten.vertex([9, 0])


def test_brute_distance_agrees():
    for v in H33.vertices():
        for w in H33.vertices():
            assert distance(v, w) == brute_distance(v, w)
