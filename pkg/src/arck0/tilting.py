"""The standard cluster-tilting arc configuration and its exchange combinatorics.

The configuration inscribes an n-gon on anchor points z1..zn (one per
segment), fan-triangulates it from z1, and roots one zigzag ("leapfrog") of
arcs at each polygon edge, converging to the accumulation point behind it.
Leapfrogs are truncated at a finite depth; arcs whose flanking triangles are
both available are "interior" and contribute exchange relations, the deepest
arcs are "frontier" and contribute none.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .circle import CircleModel, MarkedPoint
from .arcs import Arc, ext1_dim, induced_triangles, is_degenerate_pair


class InsufficientDepthError(ValueError):
    """Raised when an operation needs arcs beyond the truncation depth."""


def _leapfrog_arc(below: MarkedPoint, above: MarkedPoint, t: int) -> Arc:
    # Zigzag step t of the ladder rooted at {below, above}: even steps advance
    # the endpoint approaching the accumulation point from below, odd steps
    # retreat the one approaching from above.
    m = t // 2
    lo = MarkedPoint(below[0], below[1] + m)
    hi = MarkedPoint(above[0], above[1] - m - (t % 2))
    return Arc(lo, hi)


@dataclass(frozen=True)
class StandardTilting:
    """An indexed maximal non-crossing arc set with one leapfrog per accumulation point.

    ``names`` maps symbolic labels (``Z1``, ``Y2``, ``X3``, ``L1[4]``, ...) to
    arc indices; several labels may share an index (e.g. ``X2`` and ``Z1``).
    ``leapfrogs[b]`` lists the arc indices of the zigzag converging to the
    accumulation point between segments b and b+1.
    """

    model: CircleModel
    anchors: tuple[MarkedPoint, ...]
    depth: int
    arcs: tuple[Arc, ...]
    names: dict[str, int]
    leapfrogs: tuple[tuple[int, ...], ...]
    _index: dict[Arc, int] = field(repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self._index:
            object.__setattr__(self, "_index", {a: i for i, a in enumerate(self.arcs)})

    def arc_index(self, arc: Arc) -> int:
        return self._index[arc]

    def __contains__(self, arc: Arc) -> bool:
        return arc in self._index

    def name_of(self, index: int) -> str:
        for name, i in self.names.items():
            if i == index:
                return name
        return f"arc{index}"

    def to_json(self) -> dict:
        return {
            "n": self.model.num_segments,
            "anchors": [p.to_json() for p in self.anchors],
            "depth": self.depth,
            "arcs": [a.to_json() for a in self.arcs],
            "names": dict(self.names),
        }


def _assert_non_crossing(model: CircleModel, arcs: tuple[Arc, ...]) -> None:
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if ext1_dim(model, arcs[i], arcs[j]):
                raise AssertionError(f"crossing arcs in tilting set: {arcs[i]} x {arcs[j]}")


def build_standard_tilting(
    n: int, anchor_offsets: list[int] | None = None, depth: int = 2
) -> StandardTilting:
    """Build the standard configuration with leapfrogs truncated at 2*depth steps.

    Special cases: for n = 1 the polygon degenerates and the single leapfrog
    is rooted at the arc one step either side of the anchor; for n = 2 the two
    polygon edges coincide and are stored once; fan diagonals appear only for
    n >= 4.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if depth < 1:
        raise ValueError(f"need depth >= 1, got {depth}")
    if anchor_offsets is None:
        anchor_offsets = [0] * n
    if len(anchor_offsets) != n:
        raise ValueError(f"expected {n} anchor offsets, got {len(anchor_offsets)}")

    model = CircleModel(n)
    anchors = tuple(MarkedPoint(s, int(anchor_offsets[s])) for s in range(n))

    arcs: list[Arc] = []
    index: dict[Arc, int] = {}
    names: dict[str, int] = {}

    def add(arc: Arc) -> int:
        if arc in index:
            return index[arc]
        index[arc] = len(arcs)
        arcs.append(arc)
        return index[arc]

    # polygon edges Z1..Zn (for n = 2 both labels point at the single chord)
    roots: list[tuple[MarkedPoint, MarkedPoint]] = []
    for b in range(n):
        if n == 1:
            below = MarkedPoint(0, anchors[0][1] + 1)
            above = MarkedPoint(0, anchors[0][1] - 1)
        else:
            below = anchors[b]
            above = anchors[(b + 1) % n]
        roots.append((below, above))
        names[f"Z{b + 1}"] = add(Arc(below, above))

    # fan triangulation from z1
    if n >= 4:
        for i in range(3, n):
            names[f"X{i}"] = add(Arc(anchors[0], anchors[i - 1]))
        names["X2"] = names["Z1"]
        names[f"X{n}"] = names[f"Z{n}"]

    # leapfrogs, one per accumulation point, rooted at the polygon edges
    leapfrogs: list[tuple[int, ...]] = []
    for b in range(n):
        below, above = roots[b]
        ladder = [names[f"Z{b + 1}"]]
        for t in range(1, 2 * depth + 1):
            ladder.append(add(_leapfrog_arc(below, above, t)))
        leapfrogs.append(tuple(ladder))
        acc = ((b + 1) % n) + 1
        y = ((acc - 2) % n) + 1
        names[f"Y{y}"] = ladder[1]
        for t, idx in enumerate(ladder):
            names[f"L{acc}[{t}]"] = idx

    tilting = StandardTilting(model, anchors, depth, tuple(arcs), names, tuple(leapfrogs))
    _assert_non_crossing(model, tilting.arcs)
    return tilting


@dataclass(frozen=True)
class ExchangePair:
    """A crossing pair of complements with the middle terms of both exchange triangles.

    ``b_m_star`` is the middle of m -> (+)b_m_star -> m_star, ``b_m`` the
    middle of m_star -> (+)b_m -> m; zero summands are dropped.
    """

    m: Arc
    m_star: Arc
    b_m: tuple[Arc, ...]
    b_m_star: tuple[Arc, ...]


def _triangle_thirds(t: StandardTilting, m: Arc) -> list[MarkedPoint]:
    """Vertices r completing a triangle (m.a, m.b, r) inside the arc set.

    A side qualifies when it is a tilting arc or a boundary pair of adjacent
    points.  At most one such vertex exists on either side of m, so the
    result has length <= 2; fewer than 2 means the truncation cut off a
    flanking triangle.
    """
    p, q = m.a, m.b
    model = t.model
    candidates: set[MarkedPoint] = set()
    for d in (-1, 1):
        candidates.add(model.step(p, d))
        candidates.add(model.step(q, d))
    for arc in t.arcs:
        if p in arc.endpoints or q in arc.endpoints:
            candidates.update(arc.endpoints)
    candidates.discard(p)
    candidates.discard(q)

    def side_present(x: MarkedPoint, y: MarkedPoint) -> bool:
        if is_degenerate_pair(x, y):
            return x != y
        return Arc(x, y) in t

    thirds = sorted(r for r in candidates if side_present(p, r) and side_present(q, r))
    if len(thirds) > 2:
        raise AssertionError(f"more than two triangles flank {m}")
    return thirds


def is_interior(t: StandardTilting, m_index: int) -> bool:
    """Whether both triangles flanking the arc survive the truncation."""
    return len(_triangle_thirds(t, t.arcs[m_index])) == 2


def exchange_pair(t: StandardTilting, m_index: int) -> ExchangePair:
    m = t.arcs[m_index]
    thirds = _triangle_thirds(t, m)
    if len(thirds) < 2:
        raise InsufficientDepthError(
            f"insufficient depth: arc {m} has only {len(thirds)} flanking triangle(s)"
        )
    m_star = Arc(thirds[0], thirds[1])
    tri_to_star, tri_to_m = induced_triangles(t.model, m, m_star)
    return ExchangePair(m=m, m_star=m_star, b_m=tri_to_m.middle, b_m_star=tri_to_star.middle)


@dataclass(frozen=True)
class Relation:
    """One exchange relation: sum of b_m_star coefficients minus those of b_m."""

    coefficients: tuple[int, ...]
    source: int  # index of the arc whose exchange produced the relation


def palu_relations(t: StandardTilting) -> list[Relation]:
    """Exchange relations of every interior arc, as vectors over the arc basis.

    Frontier arcs contribute nothing.  Each vector has support inside the two
    flanking triangles, so the sum of absolute coefficients is at most 4.
    """
    relations = []
    for i in range(len(t.arcs)):
        try:
            pair = exchange_pair(t, i)
        except InsufficientDepthError:
            continue
        coeffs = [0] * len(t.arcs)
        for arc in pair.b_m_star:
            coeffs[t.arc_index(arc)] += 1
        for arc in pair.b_m:
            coeffs[t.arc_index(arc)] -= 1
        relations.append(Relation(tuple(coeffs), i))
    return relations


def mutate(t: StandardTilting, m_index: int) -> StandardTilting:
    """Replace the arc at ``m_index`` by the other diagonal of its quadrilateral.

    The swap happens in place in the index order, so mutating twice at the
    same position restores the original arc set.  Labels pointing at the old
    arc are dropped and the new arc is labelled with a trailing ``*``.
    """
    pair = exchange_pair(t, m_index)
    new_arcs = list(t.arcs)
    new_arcs[m_index] = pair.m_star
    primary = t.name_of(m_index)
    new_names = {name: i for name, i in t.names.items() if i != m_index}
    new_names[primary + "*"] = m_index
    mutated = StandardTilting(
        t.model, t.anchors, t.depth, tuple(new_arcs), new_names, t.leapfrogs
    )
    _assert_non_crossing(t.model, mutated.arcs)
    return mutated
