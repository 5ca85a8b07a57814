import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geonet.chords import (
    ChordSet,
    audit_counting_argument,
    catalan,
    chords_cross,
    closed_form_bounds,
    enumerate_chord_sets,
    is_maximal,
    max_nonadjacent_chords,
    maximal_chord_sets,
    nonadjacent_max_recursive,
)
from helpers import segments_cross_float

# non-crossing chord sets on n points allowing adjacent chords, n = 3..8
# (OEIS A054726 shifted: includes the empty set and single chords)
ALLOW_ADJACENT_COUNTS = {3: 8, 4: 48, 5: 352, 6: 2880, 7: 25216, 8: 231168}


def test_chords_cross_basic():
    assert chords_cross((0, 2), (1, 3))
    assert not chords_cross((0, 1), (2, 3))
    assert not chords_cross((0, 2), (2, 4))  # shared endpoint


@given(data=st.data(), n=st.integers(min_value=4, max_value=12))
@settings(max_examples=200, deadline=None)
def test_chords_cross_matches_geometry(data, n):
    idx = st.integers(min_value=0, max_value=n - 1)
    a, b, c, d = (data.draw(idx) for _ in range(4))
    if len({a, b, c, d}) < 4:
        return
    e1 = tuple(sorted((a, b)))
    e2 = tuple(sorted((c, d)))
    points = [
        (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
        for k in range(n)
    ]
    want = segments_cross_float(points[e1[0]], points[e1[1]], points[e2[0]], points[e2[1]])
    assert chords_cross(e1, e2) == want


def test_chord_set_validation():
    ChordSet(5, ((0, 2), (0, 3)))
    with pytest.raises(ValueError):
        ChordSet(5, ((0, 2), (1, 3)))  # crossing
    with pytest.raises(ValueError):
        ChordSet(5, ((0, 2), (0, 2)))  # duplicate
    with pytest.raises(ValueError):
        ChordSet(5, ((0, 5),))  # out of range


@pytest.mark.parametrize("n", range(1, 10))
def test_exhaustive_max_equals_closed_form(n):
    assert max_nonadjacent_chords(n) == max(n - 3, 0)


@pytest.mark.parametrize("n", range(1, 21))
def test_recursion_equals_closed_form(n):
    assert nonadjacent_max_recursive(n) == closed_form_bounds(n).nonadjacent_max


@pytest.mark.parametrize("n", sorted(ALLOW_ADJACENT_COUNTS))
def test_enumeration_counts(n):
    assert sum(1 for _ in enumerate_chord_sets(n, allow_adjacent=True)) == ALLOW_ADJACENT_COUNTS[n]


def test_enumeration_rejects_large_n():
    with pytest.raises(ValueError):
        next(enumerate_chord_sets(13))


def test_enumeration_is_lexicographic_and_duplicate_free():
    seen = [cs.chords for cs in enumerate_chord_sets(6, allow_adjacent=True)]
    assert len(seen) == len(set(seen))
    assert seen == sorted(seen)


@pytest.mark.parametrize("n", range(3, 9))
def test_maximal_sets_are_triangulations(n):
    sets = maximal_chord_sets(n)
    # maximal non-crossing sets with adjacent chords allowed are exactly the
    # triangulations of the n-gon: catalan(n-2) of them, each with 2n-3 chords
    assert len(sets) == catalan(n - 2)
    assert all(len(cs.chords) == 2 * n - 3 for cs in sets)
    assert all(is_maximal(cs) for cs in sets)


def test_closed_form_bounds_small():
    b4 = closed_form_bounds(4)
    assert (b4.nonadjacent_max, b4.edge_max, b4.leaf_edge_max) == (1, 5, 3)
    b5 = closed_form_bounds(5)
    assert (b5.nonadjacent_max, b5.edge_max, b5.leaf_edge_max) == (2, 7, 5)


@pytest.mark.parametrize("n", range(3, 9))
def test_audit_no_survivors(n):
    report = audit_counting_argument(n)
    assert not report.survivors
    assert report.total == ALLOW_ADJACENT_COUNTS[n]
    assert sum(report.kills.values()) + report.forwarded_to_n3 == report.total


def test_audit_witnesses_quote_inequalities():
    assert "12 > 10" in audit_counting_argument(4).inequality_witnesses["no-leaf"]
    assert "20 > 14" in audit_counting_argument(5).inequality_witnesses["no-leaf"]


def test_audit_n3_forwards_triangle():
    report = audit_counting_argument(3)
    assert report.forwarded_to_n3 == 1
    assert not report.survivors


def test_audit_rows_cover_everything():
    report = audit_counting_argument(4)
    assert len(report.rows) == report.total
    fates = {row.fate for row in report.rows}
    assert fates == set(report.kills)
