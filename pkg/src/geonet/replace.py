"""Replacements: boundary-data problems, the symbolic angle algebra, audits.

Replacing a network at a vertex v means finding a fresh admissible network
whose exterior rays are v's own ray plus the tangent directions of v's chords,
with the same multiplicities.  Iterating halves interior angle differences
(with a pi shift on the two slots adjacent to the replaced vertex), which is
the engine of the three-vertex refutation: two double replacements at
different vertices force e^(3i*pi/4) to be a rational circle point, and it
is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chords import enumerate_chord_sets
from .circle import CirclePoint, point_div, reflect_point, tangent_point
from .errors import InexactPosition, IsolatedVertex
from .exact import RadExpr
from .network import (
    InteriorEdge,
    Network,
    Vertex,
    canonical_key,
    is_admissible,
    make_network,
)
from .solver import build_system, positive_integer_solutions, solve

MAX_AUDIT_DEPTH = 4
MAX_AUDIT_BOUND = 50


# --- symbolic angles -----------------------------------------------------

@dataclass(frozen=True)
class AngleExpr:
    """Linear combination sum q_k * <variable_k> + r * pi, rationals exact."""

    terms: tuple[tuple[str, Fraction], ...] = ()
    pi_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        clean = tuple(
            sorted((name, Fraction(q)) for name, q in self.terms if q)
        )
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "pi_coeff", Fraction(self.pi_coeff))

    @classmethod
    def variable(cls, name: str) -> "AngleExpr":
        return cls(((name, Fraction(1)),))

    @classmethod
    def pi_multiple(cls, q) -> "AngleExpr":
        return cls((), Fraction(q))

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def __add__(self, other: "AngleExpr") -> "AngleExpr":
        acc = dict(self.terms)
        for name, q in other.terms:
            acc[name] = acc.get(name, Fraction(0)) + q
        return AngleExpr(tuple(acc.items()), self.pi_coeff + other.pi_coeff)

    def __sub__(self, other: "AngleExpr") -> "AngleExpr":
        return self + other.scale(-1)

    def scale(self, q) -> "AngleExpr":
        q = Fraction(q)
        return AngleExpr(
            tuple((name, c * q) for name, c in self.terms), self.pi_coeff * q
        )

    def evaluate(self, assignment: dict[str, float]) -> float:
        import math

        return sum(float(q) * assignment[name] for name, q in self.terms) + float(
            self.pi_coeff
        ) * math.pi

    def __str__(self) -> str:
        def coeff(q: Fraction, sym: str) -> str:
            if q == 1:
                return sym
            if q == -1:
                return f"-{sym}"
            if q.denominator == 1:
                return f"{q}·{sym}"
            return f"({q})·{sym}"

        parts = [coeff(q, name) for name, q in self.terms]
        if self.pi_coeff:
            parts.append(coeff(self.pi_coeff, "π"))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def rational_point_of_expr(e: AngleExpr) -> str:
    """Is e^(i*e) a rational circle point, decidable only when variable-free.

    A rational multiple r*pi lands on a rational point exactly when 2r is an
    integer (the four axis points; no other rational angle has both cosine
    and sine rational).
    """
    if not e.is_constant:
        return "depends-on-variables"
    doubled = 2 * e.pi_coeff
    return "forced-rational" if doubled.denominator == 1 else "forced-irrational"


_HALF = Fraction(1, 2)
_SLOTS = ("12", "13", "23")


def n3_angle_map(
    exprs: Sequence[AngleExpr], vertex: int
) -> tuple[AngleExpr, AngleExpr, AngleExpr]:
    """One replacement step on the (a12, a13, a23) angle differences.

    The two differences whose slot names the replaced vertex map to
    (x + pi)/2; the opposite difference halves.
    """
    if vertex not in (1, 2, 3):
        raise ValueError("vertex must be 1, 2 or 3")
    if len(exprs) != 3:
        raise ValueError("expected the three angle differences")
    out = []
    for slot, x in zip(_SLOTS, exprs):
        if str(vertex) in slot:
            out.append(x.scale(_HALF) + AngleExpr.pi_multiple(_HALF))
        else:
            out.append(x.scale(_HALF))
    return tuple(out)


@dataclass(frozen=True)
class AuditVerdict:
    status: str  # "good-to-depth-<k>" | "refuted-at-depth-<d>" | "inconclusive"
    depth: int
    witness: object = None
    detail: str = ""
    bound: int | None = None

    @property
    def refuted(self) -> bool:
        return self.status.startswith("refuted")

    @property
    def good(self) -> bool:
        return self.status.startswith("good")


def certify_no_good_n3() -> AuditVerdict:
    """Symbolic run of the three-vertex refutation.

    Replace twice at vertex 1 and, separately, twice at vertex 3; the a12
    slots then differ by (3/4)*pi, a variable-free angle whose circle point
    would have to be rational for both chains yet provably is not.
    """
    start = tuple(AngleExpr.variable(f"a{s}") for s in _SLOTS)
    at_v1 = n3_angle_map(n3_angle_map(start, 1), 1)
    at_v3 = n3_angle_map(n3_angle_map(start, 3), 3)
    difference = at_v1[0] - at_v3[0]
    classification = rational_point_of_expr(difference)
    if classification != "forced-irrational" or not difference.is_constant:
        # the angle algebra failed to force a contradiction; do not overclaim
        return AuditVerdict("inconclusive", 2, difference)
    return AuditVerdict(
        status="refuted-at-depth-2",
        depth=2,
        witness=difference,
        detail=f"{difference} is not a rational point",
    )


# --- concrete replacement problems ---------------------------------------

@dataclass(frozen=True)
class ReplacementProblem:
    """Prescribed boundary data: ray directions with their multiplicities.

    Rays are stored sorted by angle with the first at angle 0 (the rotated
    exterior direction of the replaced vertex).
    """

    positions: tuple[CirclePoint, ...]
    exterior_mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.positions) != len(self.exterior_mults):
            raise ValueError("one multiplicity per ray")
        if not self.positions:
            raise ValueError("need at least one ray")
        if any(not isinstance(m, int) or m < 1 for m in self.exterior_mults):
            raise ValueError("ray multiplicities must be positive integers")
        order = sorted(range(len(self.positions)), key=lambda k: self.positions[k].angle)
        ps = tuple(self.positions[k] for k in order)
        ms = tuple(self.exterior_mults[k] for k in order)
        for a in range(len(ps) - 1):
            if ps[a + 1].angle - ps[a].angle < 1e-12:
                raise ValueError("ray directions coincide")
        object.__setattr__(self, "positions", ps)
        object.__setattr__(self, "exterior_mults", ms)

    @property
    def is_exact(self) -> bool:
        return all(p.is_exact for p in self.positions)

    def canonical_key(self) -> tuple:
        best = None
        for anchor in range(len(self.positions)):
            for reflected in (False, True):
                ps = self.positions
                if reflected:
                    ps = tuple(reflect_point(p) for p in ps)
                base = ps[anchor]
                rotated = sorted(
                    (point_div(p, base).angle, m)
                    for p, m in zip(ps, self.exterior_mults)
                )
                sig = tuple((round(a, 12), m) for a, m in rotated)
                if best is None or sig < best:
                    best = sig
        return best


def replacement_problem(net: Network, i: int) -> ReplacementProblem:
    """Boundary data seen from vertex i: its ray plus its chord tangents."""
    nbrs = net.neighbors(i)
    if not nbrs:
        raise IsolatedVertex(f"vertex {i} has no interior edges to replace")
    v = net.vertices[i]
    rays = [v.position]
    mults = [v.exterior_mult]
    for j, mult in nbrs:
        rays.append(tangent_point(v.position, net.vertices[j].position))
        mults.append(mult)
    base = rays[0]
    rays = [point_div(r, base) for r in rays]
    return ReplacementProblem(tuple(rays), tuple(mults))


def _balance_nonzero(problem: ReplacementProblem) -> bool:
    bx = RadExpr.of(0)
    by = RadExpr.of(0)
    for p, m in zip(problem.positions, problem.exterior_mults):
        px, py = p.exact_xy()
        bx = bx + m * RadExpr.of(px)
        by = by + m * RadExpr.of(py)
    return not (bx.is_zero() and by.is_zero())


def replacement_feasible(problem: ReplacementProblem, bound: int) -> Network | None:
    """Search the problem's admissible networks with multiplicities <= bound.

    Enumerates non-crossing chord structures in deterministic order, solves
    each with the rays' multiplicities fixed, and returns the first network
    with a positive-integer edge solution; None when the bounded search is
    exhausted.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if not problem.is_exact:
        raise InexactPosition("feasibility search needs exact ray directions")
    if _balance_nonzero(problem):
        return None
    n = len(problem.positions)
    for cs in enumerate_chord_sets(n, allow_adjacent=True):
        system = build_system(problem.positions, cs, problem.exterior_mults)
        solutions = positive_integer_solutions(solve(system), bound)
        if not solutions:
            continue
        edge_mults = solutions[0]
        vertices = [
            Vertex(p, m) for p, m in zip(problem.positions, problem.exterior_mults)
        ]
        edges = [
            InteriorEdge(i, j, em) for (i, j), em in zip(cs.chords, edge_mults)
        ]
        net = make_network(vertices, edges)
        report = is_admissible(net, mode="exact")
        if not report.admissible:  # pragma: no cover - solver guarantees this
            raise ArithmeticError("solved replacement failed admissibility")
        return net
    return None


def good_network_audit(
    net: Network, depth: int = MAX_AUDIT_DEPTH, bound: int = MAX_AUDIT_BOUND
) -> AuditVerdict:
    """Iterated-replacement search, breadth-first over vertices.

    Refutes as soon as some vertex of some reachable network admits no
    replacement within the multiplicity bound; reports good-to-depth-k when
    every chain survives k levels.  Verdicts are bound-qualified.
    """
    if not 0 <= depth <= MAX_AUDIT_DEPTH:
        raise ValueError(f"depth must be between 0 and {MAX_AUDIT_DEPTH}")
    if not 1 <= bound <= MAX_AUDIT_BOUND:
        raise ValueError(f"bound must be between 1 and {MAX_AUDIT_BOUND}")
    if not is_admissible(net).admissible:
        raise ValueError("audit is defined for admissible networks only")

    memo: dict[tuple, AuditVerdict] = {}

    def explore(current: Network, remaining: int, level: int) -> AuditVerdict:
        if remaining == 0:
            return AuditVerdict("good-to-depth-0", 0, bound=bound)
        key = (canonical_key(current), remaining)
        hit = memo.get(key)
        if hit is not None:
            return hit
        verdict = None
        for i in range(current.n_vertices):
            if current.interior_degree(i) == 0:
                verdict = AuditVerdict(
                    f"refuted-at-depth-{level}",
                    level,
                    witness=current,
                    detail=f"vertex {i} is isolated",
                    bound=bound,
                )
                break
            problem = replacement_problem(current, i)
            replacement = replacement_feasible(problem, bound)
            if replacement is None:
                verdict = AuditVerdict(
                    f"refuted-at-depth-{level}",
                    level,
                    witness=problem,
                    detail=f"vertex {i} admits no replacement with "
                    f"multiplicities <= {bound}",
                    bound=bound,
                )
                break
            sub = explore(replacement, remaining - 1, level + 1)
            if sub.refuted:
                verdict = sub
                break
        if verdict is None:
            # all vertices replaceable and every chain survived `remaining` levels
            verdict = AuditVerdict(f"good-to-depth-{remaining}", remaining, bound=bound)
        memo[key] = verdict
        return verdict

    return explore(net, depth, 1)
