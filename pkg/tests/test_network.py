import math
from fractions import Fraction

import pytest

from geonet.circle import INFINITY, CirclePoint
from geonet.errors import (
    DuplicateEdge,
    DuplicateVertexAngle,
    ExactDataMissing,
    SelfLoopEdge,
    ZeroMultiplicity,
)
from geonet.exact import RadExpr
from geonet.network import (
    InteriorEdge,
    Vertex,
    canonical_key,
    crossing_pairs,
    invariant_report,
    is_admissible,
    is_stationary,
    make_network,
    stationarity_residual,
)
from geonet.rng import seeded_rng
from helpers import (
    boundary_trace,
    golden_triangle,
    line_network,
    pt,
    rectangle_network,
    square_network,
)


def test_vertex_multiplicity_guard():
    with pytest.raises(ZeroMultiplicity):
        Vertex(pt(0), 0)
    with pytest.raises(ZeroMultiplicity):
        InteriorEdge(0, 1, 0)


def test_self_loop_guard():
    with pytest.raises(SelfLoopEdge):
        InteriorEdge(2, 2, 1)


def test_duplicate_angle_guard():
    with pytest.raises(DuplicateVertexAngle):
        make_network([Vertex(pt(0), 1), Vertex(pt(0), 2)], [])


def test_duplicate_edge_guard():
    with pytest.raises(DuplicateEdge):
        make_network(
            [Vertex(pt(0), 1), Vertex(pt(1), 1)],
            [InteriorEdge(0, 1, 1), InteriorEdge(1, 0, 2)],
        )


def test_make_network_sorts_by_angle():
    net = make_network(
        [Vertex(pt(INFINITY), 2), Vertex(pt(0), 1)], [InteriorEdge(0, 1, 3)]
    )
    assert [v.exterior_mult for v in net.vertices] == [1, 2]
    assert net.edges[0] == InteriorEdge(0, 1, 3)  # indices remapped to sorted order


def test_line_is_exactly_stationary():
    net = line_network(3)
    assert is_stationary(net, mode="exact")
    rx, ry = stationarity_residual(net, 0, mode="exact")
    assert rx.is_zero() and ry.is_zero()


def test_line_with_mismatched_edge_mult_is_not_stationary():
    assert not is_stationary(line_network(2, m_edge=1), mode="exact")


def test_square_residual_value():
    net = square_network()
    rx, ry = stationarity_residual(net, 0, mode="exact")
    assert rx == RadExpr.of(1) - RadExpr.sqrt(2)
    assert ry.is_zero()
    assert not is_stationary(net)
    assert not is_admissible(net).admissible


def test_golden_triangle_admissible():
    report = is_admissible(golden_triangle(), mode="exact")
    assert report.admissible
    assert report.stationary
    assert not report.crossings
    assert report.violations == []


def test_rectangle_admissible():
    assert is_admissible(rectangle_network(), mode="exact").admissible


def test_crossing_pairs_detects_diagonals():
    net = make_network(
        [Vertex(pt(0), 1), Vertex(pt(1), 1), Vertex(pt(INFINITY), 1), Vertex(pt(-1), 1)],
        [InteriorEdge(0, 2, 1), InteriorEdge(1, 3, 1)],
    )
    assert crossing_pairs(net) == [(0, 1)]
    assert not is_admissible(net).admissible


def test_float_network_falls_back():
    net = make_network(
        [Vertex(CirclePoint.from_angle(0.0), 1), Vertex(CirclePoint.from_angle(math.pi), 1)],
        [InteriorEdge(0, 1, 1)],
    )
    assert not net.is_exact
    assert is_stationary(net)  # float mode within tolerance
    with pytest.raises(ExactDataMissing):
        stationarity_residual(net, 0, mode="exact")


def test_invariant_report_exact_zero():
    rep = invariant_report(golden_triangle())
    assert rep.exact
    bx, by = rep.exterior_balance
    assert bx.is_zero() and by.is_zero()
    assert rep.mass_gap.is_zero()
    assert rep.exterior_parity == "even"


def test_invariant_report_odd_parity():
    net = make_network(
        [Vertex(pt(0), 2), Vertex(pt(INFINITY), 1)], [InteriorEdge(0, 1, 1)]
    )
    assert invariant_report(net).exterior_parity == "odd"


def test_boundary_trace_parity_even():
    rng = seeded_rng(salt=11)
    for _ in range(25):
        n = rng.randint(3, 7)
        tans = sorted(
            {Fraction(rng.randint(-60, 60), rng.randint(1, 12)) for _ in range(n)}
        )
        if len(tans) < 3:
            continue
        assert invariant_report(boundary_trace(tans)).exterior_parity == "even"


def test_canonical_key_invariant_under_rotation():
    base = golden_triangle()
    # rotate so that vertex 1 sits at angle zero: same canonical key
    from geonet.circle import point_div

    anchor = base.vertices[1].position
    moved = make_network(
        [Vertex(point_div(v.position, anchor), v.exterior_mult) for v in base.vertices],
        base.edges,
    )
    assert canonical_key(moved) == canonical_key(base)


def test_canonical_key_invariant_under_reflection():
    base = golden_triangle()
    from geonet.circle import reflect_point

    mirrored = make_network(
        [Vertex(reflect_point(v.position), v.exterior_mult) for v in base.vertices],
        [InteriorEdge(e.i, e.j, e.mult) for e in base.edges],
    )
    assert canonical_key(mirrored) == canonical_key(base)


def test_canonical_key_separates_different_networks():
    assert canonical_key(line_network(1)) != canonical_key(line_network(2))
    assert canonical_key(golden_triangle()) != canonical_key(rectangle_network())
