"""Shared builders and independent oracles for the test suite."""

from fractions import Fraction

from geonet.circle import INFINITY, CirclePoint
from geonet.network import InteriorEdge, Network, Vertex, make_network


def pt(t) -> CirclePoint:
    if t is INFINITY:
        return CirclePoint.from_tan_half(INFINITY)
    return CirclePoint.from_tan_half(Fraction(t))


def line_network(m: int = 1, m_edge: int | None = None) -> Network:
    """Diameter through t = 0; stationary exactly when all three match."""
    if m_edge is None:
        m_edge = m
    return make_network(
        [Vertex(pt(0), m), Vertex(pt(INFINITY), m)],
        [InteriorEdge(0, 1, m_edge)],
    )


def square_network() -> Network:
    """Unit multiplicities on the axis-diagonal square; not stationary."""
    return make_network(
        [Vertex(pt(0), 1), Vertex(pt(1), 1), Vertex(pt(INFINITY), 1), Vertex(pt(-1), 1)],
        [
            InteriorEdge(0, 1, 1),
            InteriorEdge(1, 2, 1),
            InteriorEdge(2, 3, 1),
            InteriorEdge(0, 3, 1),
        ],
    )


def golden_triangle() -> Network:
    """Integer-stationary three-vertex network with rational tan-halves."""
    return make_network(
        [
            Vertex(pt(0), 100),
            Vertex(pt(Fraction(4, 3)), 56),
            Vertex(pt(Fraction(-24, 7)), 100),
        ],
        [
            InteriorEdge(0, 1, 35),
            InteriorEdge(0, 2, 75),
            InteriorEdge(1, 2, 35),
        ],
    )


def rectangle_network() -> Network:
    """3-4-5 rectangle: corners at tan-halves 1/2, 2, -2, -1/2, all rays 5."""
    return make_network(
        [
            Vertex(pt(Fraction(1, 2)), 5),
            Vertex(pt(2), 5),
            Vertex(pt(-2), 5),
            Vertex(pt(Fraction(-1, 2)), 5),
        ],
        [
            InteriorEdge(0, 1, 3),
            InteriorEdge(2, 3, 3),
            InteriorEdge(1, 2, 4),
            InteriorEdge(0, 3, 4),
        ],
    )


# networks that must be exactly stationary and admissible; the global
# identity checks run over all of them
STATIONARY_FIXTURES = {
    "line": line_network,
    "line-m7": lambda: line_network(7),
    "golden-triangle": golden_triangle,
    "rectangle": rectangle_network,
}


def boundary_trace(tans, arc_mult: int = 1) -> Network:
    """Boundary of the inscribed polygon on the given tan-halves.

    Every corner meets two boundary arcs, so its exterior multiplicity is
    2 * arc_mult and the total is even by construction.  Generally not
    stationary; used for structural invariants only.
    """
    n = len(tans)
    verts = [Vertex(pt(t), 2 * arc_mult) for t in tans]
    edges = [InteriorEdge(k, (k + 1) % n, 1) for k in range(n)]
    return make_network(verts, edges)


def random_positive_fraction(rng, bound: int = 10) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_domain_pair(rng, bound: int = 10) -> tuple[Fraction, Fraction]:
    """Tan-half pair (u12, u23) with both angles in (0, pi), sum in (pi, 2pi)."""
    while True:
        a = random_positive_fraction(rng, bound)
        b = random_positive_fraction(rng, bound)
        if a * b > 1:
            return a, b


def segments_cross_float(p, q, r, s) -> bool:
    """Strict proper intersection of segments pq and rs in the plane."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    return (
        orient(p, q, r) * orient(p, q, s) < 0
        and orient(r, s, p) * orient(r, s, q) < 0
    )


def axis_point_angles() -> set[Fraction]:
    """All q in [0, 2) with cos(q*pi) and sin(q*pi) both rational.

    Independent of the implementation under test: among angles q*pi with
    rational q, only the four axis points have two rational coordinates, so
    the set is exactly the half-integers.
    """
    return {Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)}
