"""Exact solving of the stationarity system for multiplicities.

Unknowns are the exterior multiplicities (one per vertex) followed by the
interior edge multiplicities; each vertex contributes an x-row and a y-row

    m_v * v + sum_w m_vw * (w - v)/|w - v| = 0.

Entries live in the radical scalar field, so kernels and particular solutions
come out exact and positivity of candidate solutions is decided by true signs.
The three-vertex case additionally gets the closed forms in half-angle
cosines/sines that drive the rationality analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .chords import ChordSet, chords_cross
from .circle import (
    CirclePoint,
    ExactScalar,
    INFINITY,
    TanHalf,
    _InfinityType,
    tan_half_add,
    tangent_components_exact,
)
from .errors import CrossingEdges, DomainError, InexactPosition
from .exact import RadExpr
from .linalg import kernel_from_rref, matvec, particular_from_rref, rref

SEARCH_BOX_CAP = 5_000_000  # enumeration guard: bound**n_free may not exceed this


@dataclass(frozen=True)
class StationaritySystem:
    positions: tuple[CirclePoint, ...]
    edges: ChordSet
    matrix: tuple[tuple[RadExpr, ...], ...]
    rhs: tuple[RadExpr, ...]
    fixed_exterior: tuple[int, ...] | None

    @property
    def n_unknowns(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0


@dataclass(frozen=True)
class SolveResult:
    rank: int
    kernel_basis: tuple[tuple, ...]
    particular: tuple | None
    free_columns: tuple[int, ...]
    n_unknowns: int

    @property
    def nullity(self) -> int:
        return len(self.kernel_basis)


def build_system(
    positions: Sequence[CirclePoint],
    edges: ChordSet,
    fixed_exterior: Sequence[int] | None = None,
) -> StationaritySystem:
    """Assemble the 2N-row system on the angle-sorted positions.

    Positions are sorted (and chord indices remapped) so the cyclic order
    matches vertex order; with fixed_exterior the m_v columns move to the
    right-hand side and only edge multiplicities remain unknown.
    """
    n = len(positions)
    if edges.n != n:
        raise ValueError("chord set is on a different number of points")
    for p in positions:
        if not p.is_exact:
            raise InexactPosition("solver needs exact positions")
    order = sorted(range(n), key=lambda k: positions[k].angle)
    pos = tuple(positions[k] for k in order)
    for a in range(n - 1):
        if pos[a + 1].angle - pos[a].angle < 1e-12:
            raise ValueError("positions coincide")
    remap = [0] * n
    for new, old in enumerate(order):
        remap[old] = new
    pairs = sorted(tuple(sorted((remap[i], remap[j]))) for i, j in edges.chords)
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            if chords_cross(pairs[a], pairs[b]):
                raise CrossingEdges(f"chords {pairs[a]} and {pairs[b]} cross")
    chord_set = ChordSet(n, tuple(pairs))

    e = len(pairs)
    fixed = tuple(fixed_exterior) if fixed_exterior is not None else None
    if fixed is not None and len(fixed) != n:
        raise ValueError("fixed_exterior length must equal the vertex count")
    ncols = e if fixed is not None else n + e
    zero = RadExpr.of(0)
    matrix = [[zero] * ncols for _ in range(2 * n)]
    rhs = [zero] * (2 * n)

    for k in range(n):
        px, py = pos[k].exact_xy()
        if fixed is None:
            matrix[2 * k][k] = RadExpr.of(px)
            matrix[2 * k + 1][k] = RadExpr.of(py)
        else:
            rhs[2 * k] = rhs[2 * k] - fixed[k] * RadExpr.of(px)
            rhs[2 * k + 1] = rhs[2 * k + 1] - fixed[k] * RadExpr.of(py)
    for col, (i, j) in enumerate(pairs):
        c = col if fixed is not None else n + col
        tx, ty = tangent_components_exact(pos[i], pos[j])
        matrix[2 * i][c] = tx
        matrix[2 * i + 1][c] = ty
        matrix[2 * j][c] = -tx
        matrix[2 * j + 1][c] = -ty

    return StationaritySystem(
        positions=pos,
        edges=chord_set,
        matrix=tuple(tuple(row) for row in matrix),
        rhs=tuple(rhs),
        fixed_exterior=fixed,
    )


def normalize_vector(vec: Sequence) -> tuple:
    """Scale to coprime integers with positive leading entry when rational,
    otherwise to leading entry one."""
    exprs = [RadExpr.of(x) for x in vec]
    lead = next((x for x in exprs if not x.is_zero()), None)
    if lead is None:
        return tuple(0 for _ in exprs)
    if all(x.is_rational() for x in exprs):
        qs = [x.rational_value() for x in exprs]
        mult = lcm(*(q.denominator for q in qs)) if qs else 1
        ints = [int(q * mult) for q in qs]
        g = gcd(*ints)
        sign = 1 if next(v for v in ints if v) > 0 else -1
        return tuple(v // (g * sign) for v in ints)
    inv = lead.inverse()
    return tuple(x * inv for x in exprs)


def solve(system: StationaritySystem) -> SolveResult:
    m, pivots, b = rref(system.matrix, system.rhs)
    ncols = system.n_unknowns
    particular = particular_from_rref(m, pivots, b)
    kernel = [normalize_vector(v) for v in kernel_from_rref(m, pivots, ncols)]
    free = tuple(c for c in range(ncols) if c not in pivots)
    return SolveResult(
        rank=len(pivots),
        kernel_basis=tuple(kernel),
        particular=tuple(particular) if particular is not None else None,
        free_columns=free,
        n_unknowns=ncols,
    )


def _as_int_in_range(x: RadExpr, bound: int) -> int | None:
    if not x.is_integer():
        return None
    v = int(x.rational_value())
    return v if 1 <= v <= bound else None


def positive_integer_solutions(
    result: SolveResult, bound: int
) -> list[tuple[int, ...]]:
    """All solutions with every coordinate an integer in [1, bound].

    Kernel vectors are unit in their free column and zero in the others, so a
    solution is determined by its free coordinates; those are enumerated over
    the integer box and the pivot coordinates checked exactly.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if result.particular is None:
        return []
    n = result.n_unknowns
    part = [RadExpr.of(x) for x in result.particular]
    r = len(result.kernel_basis)
    if r == 0:
        vals = [_as_int_in_range(x, bound) for x in part]
        return [tuple(vals)] if all(v is not None for v in vals) else []
    if bound**r > SEARCH_BOX_CAP:
        raise ValueError("search box too large for exhaustive enumeration")
    # scale kernel vectors so their free coordinate is exactly 1 again
    basis = []
    for vec, f in zip(result.kernel_basis, result.free_columns):
        v = [RadExpr.of(x) for x in vec]
        basis.append([x / v[f] for x in v])

    out: list[tuple[int, ...]] = []

    def rec(k: int, acc: list[RadExpr]):
        if k == r:
            vals = [_as_int_in_range(x, bound) for x in acc]
            if all(v is not None for v in vals):
                out.append(tuple(vals))
            return
        for t in range(1, bound + 1):
            rec(k + 1, [a + t * bk for a, bk in zip(acc, basis[k])])

    rec(0, part)
    return sorted(out)


# --- the three-vertex closed forms --------------------------------------

def half_cos_sin(u: TanHalf) -> tuple[ExactScalar, ExactScalar]:
    """(cos(a/2), sin(a/2)) from u = tan(a/2), for a in (0, 2pi).

    There sin(a/2) > 0 while cos(a/2) carries the sign of u; u = INFINITY
    means a = pi and gives (0, 1)."""
    if isinstance(u, _InfinityType):
        return Fraction(0), Fraction(1)
    uu = RadExpr.of(u)
    sq = 1 + uu * uu
    if not sq.is_rational():
        raise InexactPosition("half-angle norm is not a representable radical")
    root = RadExpr.sqrt(sq.rational_value())
    c = root.inverse()
    s = abs(uu) * c
    if uu.sign() < 0:
        c = -c
    return c, s


def _tan_sign(u: TanHalf) -> int:
    if isinstance(u, _InfinityType):
        return 0  # boundary marker: the angle equals pi
    x = RadExpr.of(u)
    return 0 if x.is_zero() else x.sign()


@dataclass(frozen=True)
class N3ClosedForm:
    """Proportionality data for the triangle system.

    edge_vector spans the kernel of the half-angle cosine matrix; stationary
    multiplicities are beta * edge_vector and -beta * exterior_vector for one
    common beta (negative in the valid domain, where edge_vector is entrywise
    negative and exterior_vector entrywise positive).
    """

    tan12: TanHalf
    tan23: TanHalf
    tan13: TanHalf
    edge_vector: tuple[ExactScalar, ExactScalar, ExactScalar]
    exterior_vector: tuple[ExactScalar, ExactScalar, ExactScalar]
    rational: bool


def n3_closed_forms(alpha12: CirclePoint, alpha23: CirclePoint) -> N3ClosedForm:
    """Closed forms from the two independent angle differences.

    alpha12 and alpha23 are the vertex-to-vertex angle differences encoded as
    circle points e^(i*alpha); both must lie in (0, pi) with their sum in
    (pi, 2pi), else the stationarity signs are unsatisfiable.
    """
    u12 = alpha12.tan_half
    u23 = alpha23.tan_half
    if u12 is None or u23 is None:
        raise InexactPosition("closed forms need exact angle differences")
    if _tan_sign(u12) <= 0:
        raise DomainError("first angle difference must lie strictly in (0, pi)")
    if _tan_sign(u23) <= 0:
        raise DomainError("second angle difference must lie strictly in (0, pi)")
    u13 = tan_half_add(u12, u23)
    if _tan_sign(u13) >= 0:
        raise DomainError("the angle sum must lie strictly in (pi, 2pi)")
    c12, s12 = half_cos_sin(u12)
    c23, s23 = half_cos_sin(u23)
    c13, s13 = half_cos_sin(u13)
    edge = (
        RadExpr.of(c13) * RadExpr.of(c23),
        -(RadExpr.of(c12) * RadExpr.of(c23)),
        RadExpr.of(c12) * RadExpr.of(c13),
    )
    exterior = (
        RadExpr.of(c23) * RadExpr.of(s23),
        -(RadExpr.of(c13) * RadExpr.of(s13)),
        RadExpr.of(c12) * RadExpr.of(s12),
    )
    rational = all(
        not isinstance(u, _InfinityType) and RadExpr.of(u).is_rational()
        for u in (u12, u23, u13)
    )
    return N3ClosedForm(u12, u23, u13, edge, exterior, rational)


def n3_imaginary_kernel(alpha12: CirclePoint, alpha23: CirclePoint) -> tuple:
    """Kernel of the half-angle cosine matrix, via elimination, normalized."""
    forms = n3_closed_forms(alpha12, alpha23)
    c12, _ = half_cos_sin(forms.tan12)
    c23, _ = half_cos_sin(forms.tan23)
    c13, _ = half_cos_sin(forms.tan13)
    zero = RadExpr.of(0)
    c = [
        [RadExpr.of(c12), RadExpr.of(c13), zero],
        [-RadExpr.of(c12), zero, RadExpr.of(c23)],
        [zero, -RadExpr.of(c13), -RadExpr.of(c23)],
    ]
    m, pivots, _ = rref(c)
    basis = kernel_from_rref(m, pivots, 3)
    if len(basis) != 1:
        raise DomainError("cosine matrix must have nullity one in the domain")
    return normalize_vector(basis[0])


def system_residual(system: StationaritySystem, vec: Sequence) -> list[RadExpr]:
    """matrix @ vec - rhs, exactly; all zero iff vec solves the system."""
    prod = matvec(system.matrix, [RadExpr.of(x) for x in vec])
    return [p - r for p, r in zip(prod, system.rhs)]
