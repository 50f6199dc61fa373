"""Arcs between marked points: validity, crossing, suspension, induced triangles.

An arc joins two marked points that are neither equal nor neighbours; pairs
of adjacent points are boundary segments and count as zero objects.  Two arcs
cross when their endpoints strictly interleave in the cyclic order, and a
crossing pair spans a quadrilateral whose sides assemble into two triangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .circle import CircleModel, MarkedPoint, cyclic_key


def is_degenerate_pair(p: MarkedPoint, q: MarkedPoint) -> bool:
    """True when {p, q} is a zero object: equal or adjacent marked points."""
    return p[0] == q[0] and abs(p[1] - q[1]) <= 1


@dataclass(frozen=True, order=True)
class Arc:
    """Unordered pair of non-adjacent marked points, stored lex-sorted."""

    a: MarkedPoint
    b: MarkedPoint

    def __post_init__(self) -> None:
        p = MarkedPoint(*self.a)
        q = MarkedPoint(*self.b)
        if q < p:
            p, q = q, p
        if is_degenerate_pair(p, q):
            raise ValueError(f"degenerate arc between {p} and {q}")
        object.__setattr__(self, "a", p)
        object.__setattr__(self, "b", q)

    @property
    def endpoints(self) -> tuple[MarkedPoint, MarkedPoint]:
        return (self.a, self.b)

    @property
    def same_segment(self) -> bool:
        return self.a[0] == self.b[0]

    def shares_endpoint(self, other: "Arc") -> bool:
        return bool({self.a, self.b} & {other.a, other.b})

    def to_json(self) -> list[list[int]]:
        return [self.a.to_json(), self.b.to_json()]

    @classmethod
    def from_json(cls, data) -> "Arc":
        (s0, o0), (s1, o1) = data
        return cls(MarkedPoint(s0, o0), MarkedPoint(s1, o1))


def maybe_arc(p: MarkedPoint, q: MarkedPoint) -> Optional[Arc]:
    """The arc {p, q}, or None when the pair is degenerate (a zero object)."""
    if is_degenerate_pair(p, q):
        return None
    return Arc(p, q)


def suspend(arc: Arc, k: int = 1) -> Arc:
    """Rotate both endpoints k marked points clockwise (the shift functor).

    Validity is translation invariant, so the result is always an arc.
    """
    return Arc(
        MarkedPoint(arc.a[0], arc.a[1] - k),
        MarkedPoint(arc.b[0], arc.b[1] - k),
    )


def ext1_dim(model: CircleModel, x: Arc, y: Arc) -> int:
    """1 if the arcs cross (endpoints strictly interleave), else 0.

    Arcs sharing an endpoint never cross.
    """
    model.check_point(x.a)
    model.check_point(x.b)
    model.check_point(y.a)
    model.check_point(y.b)
    if x.shares_endpoint(y):
        return 0
    n = model.num_segments
    end = cyclic_key(x.a, x.b, n)
    inside_a = cyclic_key(x.a, y.a, n) < end
    inside_b = cyclic_key(x.a, y.b, n) < end
    return 1 if inside_a != inside_b else 0


def quadrilateral_vertices(
    model: CircleModel, m: Arc, other: Arc
) -> tuple[MarkedPoint, MarkedPoint, MarkedPoint, MarkedPoint]:
    """The four endpoints of a crossing pair in anticlockwise order.

    The walk starts at the lexicographically smaller endpoint of ``m``, so
    the result (v0, v1, v2, v3) has m = {v0, v2} and other = {v1, v3}.
    """
    if ext1_dim(model, m, other) != 1:
        raise ValueError("arcs do not cross")
    v0, v2 = m.a, m.b
    if model.in_open_interval(v0, other.a, v2):
        v1, v3 = other.a, other.b
    else:
        v1, v3 = other.b, other.a
    return v0, v1, v2, v3


def quadrilateral_sides(model: CircleModel, m: Arc, other: Arc) -> list[Optional[Arc]]:
    """Sides [{v0,v1}, {v1,v2}, {v2,v3}, {v3,v0}] of the crossing quadrilateral.

    Degenerate sides (adjacent endpoints) are returned as None.
    """
    v0, v1, v2, v3 = quadrilateral_vertices(model, m, other)
    return [maybe_arc(v0, v1), maybe_arc(v1, v2), maybe_arc(v2, v3), maybe_arc(v3, v0)]


@dataclass(frozen=True)
class InducedTriangle:
    """Distinguished triangle first -> (+)middle -> third -> shift(first)."""

    first: Arc
    middle: tuple[Arc, ...]
    third: Arc


def induced_triangles(
    model: CircleModel, m: Arc, other: Arc
) -> tuple[InducedTriangle, InducedTriangle]:
    """The two triangles induced by a crossing pair.

    The first runs m -> (+)mids -> other, with mids the opposite side pair
    ({v1,v2}, {v3,v0}); the second runs other -> (+)mids -> m with the
    remaining pair.  Zero sides are dropped from the middles.
    """
    sides = quadrilateral_sides(model, m, other)
    first_mid = tuple(s for s in (sides[1], sides[3]) if s is not None)
    second_mid = tuple(s for s in (sides[0], sides[2]) if s is not None)
    return (
        InducedTriangle(m, first_mid, other),
        InducedTriangle(other, second_mid, m),
    )
