"""Weighted networks of circle chords with radial exterior rays.

A network has N vertices on the unit circle, each carrying a positive integer
exterior multiplicity (a radial ray to infinity), plus interior chord edges
with positive integer multiplicities.  Stationarity at a vertex v means

    m_v * v + sum over neighbors w of m_vw * (w - v)/|w - v| = 0.

Vertices are stored sorted by angle, so chord crossings are decided by the
cyclic-interval test on indices alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chords import chords_cross, closed_form_bounds
from .circle import (
    TAU,
    CirclePoint,
    point_div,
    reflect_point,
    chord_length_exact,
    tangent_components_exact,
)
from .errors import (
    DuplicateEdge,
    DuplicateVertexAngle,
    ExactDataMissing,
    InexactPosition,
    ZeroMultiplicity,
    SelfLoopEdge,
)
from .exact import RadExpr

ANGLE_MERGE_TOL = 1e-12
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Vertex:
    position: CirclePoint
    exterior_mult: int

    def __post_init__(self):
        if not isinstance(self.exterior_mult, int) or self.exterior_mult < 1:
            raise ZeroMultiplicity(
                f"exterior multiplicity must be a positive integer, got {self.exterior_mult}"
            )


@dataclass(frozen=True)
class InteriorEdge:
    i: int
    j: int
    mult: int

    def __post_init__(self):
        if self.i == self.j:
            raise SelfLoopEdge(f"edge ({self.i}, {self.j}) is a self-loop")
        if not isinstance(self.mult, int) or self.mult < 1:
            raise ZeroMultiplicity(
                f"edge multiplicity must be a positive integer, got {self.mult}"
            )


@dataclass(frozen=True)
class Network:
    vertices: tuple[Vertex, ...]
    edges: tuple[InteriorEdge, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> list[tuple[int, int]]:
        """(neighbor index, edge multiplicity) pairs for vertex i."""
        out = []
        for e in self.edges:
            if e.i == i:
                out.append((e.j, e.mult))
            elif e.j == i:
                out.append((e.i, e.mult))
        return out

    def interior_degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in (e.i, e.j))

    @property
    def is_exact(self) -> bool:
        return all(v.position.is_exact for v in self.vertices)


@dataclass(frozen=True)
class ValidationReport:
    stationary: bool
    max_residual: float
    crossings: list[tuple[int, int]]
    violations: list[str]

    @property
    def admissible(self) -> bool:
        return self.stationary and not self.crossings


def make_network(vertices: Sequence[Vertex], edges: Sequence[InteriorEdge]) -> Network:
    """Sort vertices by angle, renumber edges accordingly, enforce invariants."""
    order = sorted(range(len(vertices)), key=lambda k: vertices[k].position.angle)
    sorted_vs = tuple(vertices[k] for k in order)
    for a in range(len(sorted_vs) - 1):
        if sorted_vs[a + 1].position.angle - sorted_vs[a].position.angle < ANGLE_MERGE_TOL:
            raise DuplicateVertexAngle(
                f"vertices at angles {sorted_vs[a].position.angle} and "
                f"{sorted_vs[a + 1].position.angle} coincide"
            )
    if len(sorted_vs) >= 2:
        wrap = sorted_vs[0].position.angle + TAU - sorted_vs[-1].position.angle
        if wrap < ANGLE_MERGE_TOL:
            raise DuplicateVertexAngle("first and last vertices coincide across the cut")
    remap = [0] * len(vertices)
    for new, old in enumerate(order):
        remap[old] = new
    seen: set[tuple[int, int]] = set()
    new_edges = []
    for e in edges:
        if not (0 <= e.i < len(vertices) and 0 <= e.j < len(vertices)):
            raise ValueError(f"edge ({e.i}, {e.j}) references a missing vertex")
        i, j = sorted((remap[e.i], remap[e.j]))
        if (i, j) in seen:
            raise DuplicateEdge(f"duplicate edge between vertices {i} and {j}")
        seen.add((i, j))
        new_edges.append(InteriorEdge(i, j, e.mult))
    new_edges.sort(key=lambda e: (e.i, e.j))
    return Network(sorted_vs, tuple(new_edges))


def _residual_exact(net: Network, i: int) -> tuple[RadExpr, RadExpr]:
    v = net.vertices[i]
    px, py = v.position.exact_xy()
    rx = RadExpr.of(v.exterior_mult) * RadExpr.of(px)
    ry = RadExpr.of(v.exterior_mult) * RadExpr.of(py)
    for j, mult in net.neighbors(i):
        tx, ty = tangent_components_exact(v.position, net.vertices[j].position)
        rx = rx + mult * tx
        ry = ry + mult * ty
    return rx, ry


def _residual_float(net: Network, i: int) -> tuple[float, float]:
    v = net.vertices[i]
    px, py = v.position.xy()
    rx = v.exterior_mult * px
    ry = v.exterior_mult * py
    for j, mult in net.neighbors(i):
        wx, wy = net.vertices[j].position.xy()
        d = math.hypot(wx - px, wy - py)
        rx += mult * (wx - px) / d
        ry += mult * (wy - py) / d
    return rx, ry


def stationarity_residual(net: Network, i: int, mode: str = "auto"):
    """Force balance at vertex i: exterior ray plus weighted chord tangents.

    mode "exact" returns a RadExpr pair and raises ExactDataMissing when the
    data cannot support it; "float" always evaluates numerically; "auto"
    prefers exact and falls back.
    """
    if mode not in ("auto", "exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "float":
        return _residual_float(net, i)
    try:
        return _residual_exact(net, i)
    except (ExactDataMissing, InexactPosition):
        if mode == "exact":
            raise ExactDataMissing(
                f"vertex {i} has no exact residual (missing or irrational data)"
            )
        return _residual_float(net, i)


def _vertex_scale(net: Network, i: int) -> float:
    return net.vertices[i].exterior_mult + sum(m for _, m in net.neighbors(i))


def is_stationary(net: Network, mode: str = "auto", tol: float = DEFAULT_TOL) -> bool:
    for i in range(net.n_vertices):
        r = stationarity_residual(net, i, mode=mode)
        if isinstance(r[0], RadExpr):
            if not (r[0].is_zero() and r[1].is_zero()):
                return False
        else:
            if math.hypot(*r) > tol * _vertex_scale(net, i):
                return False
    return True


def crossing_pairs(net: Network) -> list[tuple[int, int]]:
    """Indices of edge pairs whose open chords intersect (endpoints excluded)."""
    out = []
    for a in range(net.n_edges):
        for b in range(a + 1, net.n_edges):
            ea, eb = net.edges[a], net.edges[b]
            if chords_cross((ea.i, ea.j), (eb.i, eb.j)):
                out.append((a, b))
    return out


def is_admissible(
    net: Network, mode: str = "auto", tol: float = DEFAULT_TOL
) -> ValidationReport:
    violations: list[str] = []
    max_resid = 0.0
    stationary = True
    for i in range(net.n_vertices):
        r = stationarity_residual(net, i, mode=mode)
        norm = math.hypot(float(r[0]), float(r[1]))
        max_resid = max(max_resid, norm)
        if isinstance(r[0], RadExpr):
            ok = r[0].is_zero() and r[1].is_zero()
        else:
            ok = norm <= tol * _vertex_scale(net, i)
        if not ok:
            stationary = False
            violations.append(f"vertex {i}: residual norm {norm:.3g}")
    crossings = crossing_pairs(net)
    for a, b in crossings:
        ea, eb = net.edges[a], net.edges[b]
        violations.append(
            f"edges ({ea.i},{ea.j}) and ({eb.i},{eb.j}) cross"
        )
    bound = closed_form_bounds(net.n_vertices).edge_max
    if not crossings and net.n_edges > bound:
        violations.append(f"edge count {net.n_edges} exceeds bound {bound}")
    return ValidationReport(stationary, max_resid, crossings, violations)


@dataclass(frozen=True)
class InvariantReport:
    exterior_balance: tuple
    mass_gap: object
    exterior_parity: str
    exact: bool


def invariant_report(net: Network) -> InvariantReport:
    """Global identities: ray balance, interior-vs-exterior mass, ray parity.

    For a stationary network the balance is (0, 0) (sum the per-vertex
    conditions: chord tangents cancel in opposite pairs) and the mass gap is 0
    (dot each condition with its vertex and sum; v.(w-v)/|w-v| pairs add up to
    -|w-v| per edge while v.v = 1).
    """
    total_ext = sum(v.exterior_mult for v in net.vertices)
    parity = "even" if total_ext % 2 == 0 else "odd"
    if net.is_exact:
        try:
            bx = RadExpr.of(0)
            by = RadExpr.of(0)
            for v in net.vertices:
                px, py = v.position.exact_xy()
                bx = bx + v.exterior_mult * RadExpr.of(px)
                by = by + v.exterior_mult * RadExpr.of(py)
            mass = RadExpr.of(total_ext)
            for e in net.edges:
                ln = chord_length_exact(
                    net.vertices[e.i].position, net.vertices[e.j].position
                )
                mass = mass - e.mult * ln
            return InvariantReport((bx, by), mass, parity, True)
        except (ExactDataMissing, InexactPosition):
            pass
    bx = by = 0.0
    for v in net.vertices:
        px, py = v.position.xy()
        bx += v.exterior_mult * px
        by += v.exterior_mult * py
    mass = float(total_ext)
    for e in net.edges:
        (ax, ay) = net.vertices[e.i].position.xy()
        (cx, cy) = net.vertices[e.j].position.xy()
        mass -= e.mult * math.hypot(cx - ax, cy - ay)
    return InvariantReport((bx, by), mass, parity, False)


def _transformed(net: Network, anchor: int, reflected: bool) -> Network:
    ps = [v.position for v in net.vertices]
    if reflected:
        ps = [reflect_point(p) for p in ps]
    base = ps[anchor]
    ps = [point_div(p, base) for p in ps]
    vs = [Vertex(p, v.exterior_mult) for p, v in zip(ps, net.vertices)]
    return make_network(vs, net.edges)


def _signature(net: Network):
    return (
        tuple(round(v.position.angle, 12) % TAU for v in net.vertices),
        tuple(v.exterior_mult for v in net.vertices),
        tuple((e.i, e.j, e.mult) for e in net.edges),
    )


def canonical_form(net: Network) -> Network:
    """Least representative over rotations-to-zero and reflection; idempotent."""
    if net.n_vertices == 0:
        return net
    best = None
    best_sig = None
    for anchor in range(net.n_vertices):
        for reflected in (False, True):
            cand = _transformed(net, anchor, reflected)
            sig = _signature(cand)
            if best_sig is None or sig < best_sig:
                best, best_sig = cand, sig
    return best


def canonical_key(net: Network) -> tuple:
    """Hashable rotation/reflection-invariant fingerprint."""
    return _signature(canonical_form(net))
