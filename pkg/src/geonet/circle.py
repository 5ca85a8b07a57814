"""Points on the unit circle with an optional exact parametrization.

A point at angle theta is stored with its half-angle tangent t = tan(theta/2)
when that value is known exactly (a Fraction, a RadExpr, or INFINITY for the
angle pi).  Rational t gives rational coordinates ((1-t^2)/(1+t^2), 2t/(1+t^2)),
and angle sums and differences become field operations on t, so rotations and
chord directions can be computed without any floating error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ExactDataMissing, InexactPosition
from .exact import RadExpr

TAU = math.tau


class _InfinityType:
    """Half-angle tangent of the angle pi (the point (-1, 0))."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _InfinityType()

ExactScalar = Union[Fraction, RadExpr]
TanHalf = Union[Fraction, RadExpr, _InfinityType]


def _simplify(x: ExactScalar) -> ExactScalar:
    if isinstance(x, RadExpr) and x.is_rational():
        return x.rational_value()
    return x


def _is_zero(x: ExactScalar) -> bool:
    return x.is_zero() if isinstance(x, RadExpr) else x == 0


def _recip(x: ExactScalar) -> TanHalf:
    if _is_zero(x):
        return INFINITY
    return _simplify(1 / x)


def as_tan_half(x) -> TanHalf:
    """Coerce ints/Fractions/RadExpr (or INFINITY) to a canonical tan-half."""
    if x is INFINITY or isinstance(x, _InfinityType):
        return INFINITY
    if isinstance(x, RadExpr):
        return _simplify(x)
    return Fraction(x)


def tan_half_add(a: TanHalf, b: TanHalf) -> TanHalf:
    """tan((alpha+beta)/2) from the two half-angle tangents."""
    ainf = isinstance(a, _InfinityType)
    binf = isinstance(b, _InfinityType)
    if ainf and binf:
        return Fraction(0)
    if ainf:
        r = _recip(b)
        return INFINITY if isinstance(r, _InfinityType) else _simplify(-r)
    if binf:
        r = _recip(a)
        return INFINITY if isinstance(r, _InfinityType) else _simplify(-r)
    denom = 1 - a * b
    if _is_zero(denom):
        return INFINITY
    return _simplify((a + b) / denom)


def tan_half_sub(a: TanHalf, b: TanHalf) -> TanHalf:
    """tan((alpha-beta)/2) from the two half-angle tangents."""
    ainf = isinstance(a, _InfinityType)
    binf = isinstance(b, _InfinityType)
    if ainf and binf:
        return Fraction(0)
    if ainf:
        return _recip(b)
    if binf:
        r = _recip(a)
        return INFINITY if isinstance(r, _InfinityType) else _simplify(-r)
    denom = 1 + a * b
    if _is_zero(denom):
        return INFINITY
    return _simplify((a - b) / denom)


def tan_half_neg(a: TanHalf) -> TanHalf:
    """Half-angle tangent of -alpha (reflection across the x-axis)."""
    if isinstance(a, _InfinityType):
        return INFINITY
    return _simplify(-a)


def exact_xy_of_tan(t: TanHalf) -> tuple[ExactScalar, ExactScalar]:
    if isinstance(t, _InfinityType):
        return Fraction(-1), Fraction(0)
    one_plus = 1 + t * t
    return _simplify((1 - t * t) / one_plus), _simplify((2 * t) / one_plus)


def angle_of_tan(t: TanHalf) -> float:
    if isinstance(t, _InfinityType):
        return math.pi
    return (2.0 * math.atan(float(t))) % TAU


@dataclass(frozen=True)
class CirclePoint:
    """A unit-circle point: float angle in [0, tau), optional exact tan-half."""

    angle: float
    tan_half: TanHalf | None = None

    def __post_init__(self):
        if not 0.0 <= self.angle < TAU:
            raise ValueError(f"angle {self.angle} not normalized to [0, tau)")
        if self.tan_half is not None:
            ex, ey = exact_xy_of_tan(self.tan_half)
            if abs(float(ex) - math.cos(self.angle)) > 1e-9 or abs(
                float(ey) - math.sin(self.angle)
            ) > 1e-9:
                raise ValueError("angle and tan_half describe different points")

    @classmethod
    def from_angle(cls, angle: float) -> "CirclePoint":
        return cls(angle % TAU, None)

    @classmethod
    def from_tan_half(cls, t) -> "CirclePoint":
        t = as_tan_half(t)
        return cls(angle_of_tan(t), t)

    @property
    def is_exact(self) -> bool:
        return self.tan_half is not None

    def xy(self) -> tuple[float, float]:
        return math.cos(self.angle), math.sin(self.angle)

    def exact_xy(self) -> tuple[ExactScalar, ExactScalar]:
        if self.tan_half is None:
            raise ExactDataMissing("point has no exact parametrization")
        return exact_xy_of_tan(self.tan_half)


def point_mul(p: CirclePoint, q: CirclePoint) -> CirclePoint:
    """The point at the angle sum (rotation of p by q)."""
    if p.tan_half is not None and q.tan_half is not None:
        return CirclePoint.from_tan_half(tan_half_add(p.tan_half, q.tan_half))
    return CirclePoint.from_angle(p.angle + q.angle)


def point_div(p: CirclePoint, q: CirclePoint) -> CirclePoint:
    """The point at the angle difference (rotation of p by -q)."""
    if p.tan_half is not None and q.tan_half is not None:
        return CirclePoint.from_tan_half(tan_half_sub(p.tan_half, q.tan_half))
    return CirclePoint.from_angle(p.angle - q.angle)


def reflect_point(p: CirclePoint) -> CirclePoint:
    """Mirror image across the x-axis."""
    if p.tan_half is not None:
        return CirclePoint.from_tan_half(tan_half_neg(p.tan_half))
    return CirclePoint.from_angle(-p.angle)


def chord_length_exact(v: CirclePoint, w: CirclePoint) -> RadExpr:
    """|w - v| as an exact radical, for exactly parametrized endpoints."""
    vx, vy = v.exact_xy()
    wx, wy = w.exact_xy()
    dx = RadExpr.of(wx) - RadExpr.of(vx)
    dy = RadExpr.of(wy) - RadExpr.of(vy)
    sq = dx * dx + dy * dy
    if not sq.is_rational():
        raise InexactPosition("chord length is not a representable radical")
    return RadExpr.sqrt(sq.rational_value())


def tangent_components_exact(
    v: CirclePoint, w: CirclePoint
) -> tuple[RadExpr, RadExpr]:
    """(w - v)/|w - v| componentwise, exact; needs a rational squared length."""
    vx, vy = v.exact_xy()
    wx, wy = w.exact_xy()
    dx = RadExpr.of(wx) - RadExpr.of(vx)
    dy = RadExpr.of(wy) - RadExpr.of(vy)
    sq = dx * dx + dy * dy
    if sq.is_zero():
        raise ValueError("tangent direction of coincident points")
    if not sq.is_rational():
        raise InexactPosition("chord direction is not a representable radical")
    length = RadExpr.sqrt(sq.rational_value())
    return dx / length, dy / length


def tangent_point(v: CirclePoint, w: CirclePoint) -> CirclePoint:
    """Unit direction from v toward w, itself as a circle point.

    Exact whenever both endpoints are exact with a rational squared chord
    length; the direction components then live in Q adjoined one square root,
    and its own tan-half is recovered from t = y/(1+x).
    """
    if v.tan_half is not None and w.tan_half is not None:
        try:
            ux, uy = tangent_components_exact(v, w)
        except InexactPosition:
            pass
        else:
            if (ux + 1).is_zero():
                return CirclePoint.from_tan_half(INFINITY)
            return CirclePoint.from_tan_half(uy / (ux + 1))
    vx, vy = v.xy()
    wx, wy = w.xy()
    return CirclePoint.from_angle(math.atan2(wy - vy, wx - vx))
