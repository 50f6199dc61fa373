import pytest

from arck0 import (
    Arc,
    CircleModel,
    MarkedPoint,
    ext1_dim,
    induced_triangles,
    maybe_arc,
    quadrilateral_sides,
    suspend,
)


def P(s, o):
    return MarkedPoint(s, o)


def A(p, q):
    return Arc(P(*p), P(*q))


def test_arc_validity():
    with pytest.raises(ValueError):
        A((0, 0), (0, 0))
    with pytest.raises(ValueError):
        A((0, 0), (0, 1))
    with pytest.raises(ValueError):
        A((0, 3), (0, 2))
    # cross-segment pairs are never adjacent
    assert A((0, 0), (1, 0)).endpoints == (P(0, 0), P(1, 0))


def test_arc_canonical_order_and_json():
    arc = A((1, 5), (0, 3))
    assert arc.a == P(0, 3) and arc.b == P(1, 5)
    assert arc.to_json() == [[0, 3], [1, 5]]
    assert Arc.from_json(arc.to_json()) == arc


def test_maybe_arc():
    assert maybe_arc(P(0, 0), P(0, 1)) is None
    assert maybe_arc(P(0, 0), P(0, 0)) is None
    assert maybe_arc(P(0, 0), P(0, 2)) == A((0, 0), (0, 2))


def test_ext1_dim_examples():
    m = CircleModel(1)
    assert ext1_dim(m, A((0, 0), (0, 4)), A((0, 2), (0, 6))) == 1
    assert ext1_dim(m, A((0, 0), (0, 4)), A((0, 1), (0, 3))) == 0
    # shared endpoints never cross
    assert ext1_dim(m, A((0, 0), (0, 4)), A((0, 4), (0, 8))) == 0


def test_ext1_dim_symmetry_small_sweep():
    m = CircleModel(2)
    pts = [P(s, o) for s in range(2) for o in range(-3, 4)]
    arcs = []
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            arc = maybe_arc(p, q)
            if arc:
                arcs.append(arc)
    for x in arcs[::5]:
        for y in arcs[::7]:
            assert ext1_dim(m, x, y) == ext1_dim(m, y, x)


def test_suspend_examples():
    arc = A((0, 3), (1, 5))
    assert suspend(arc, 1) == A((0, 2), (1, 4))
    assert suspend(arc, 0) == arc
    assert suspend(suspend(arc, 1), -1) == arc


def test_suspension_equivariance_of_crossing():
    m = CircleModel(2)
    x, y = A((0, 0), (1, 1)), A((0, 2), (1, -2))
    base = ext1_dim(m, x, y)
    for k in (-4, -1, 1, 9):
        assert ext1_dim(m, suspend(x, k), suspend(y, k)) == base


def test_quadrilateral_sides_examples():
    m = CircleModel(1)
    assert quadrilateral_sides(m, A((0, 0), (0, 2)), A((0, 1), (0, 4))) == [
        None,
        None,
        A((0, 2), (0, 4)),
        A((0, 0), (0, 4)),
    ]
    assert quadrilateral_sides(m, A((0, 0), (0, 4)), A((0, 2), (0, 6))) == [
        A((0, 0), (0, 2)),
        A((0, 2), (0, 4)),
        A((0, 4), (0, 6)),
        A((0, 0), (0, 6)),
    ]


def test_quadrilateral_sides_one_nonzero_side():
    # vertex walk starts at the smaller endpoint of the first arc, so the
    # single surviving side lands in the {v2, v3} slot here
    m = CircleModel(1)
    sides = quadrilateral_sides(m, A((0, -1), (0, 1)), A((0, -2), (0, 0)))
    assert [s for s in sides if s is not None] == [A((0, 1), (0, -2))]
    assert sides == [None, None, A((0, -2), (0, 1)), None]


def test_quadrilateral_rejects_non_crossing():
    m = CircleModel(1)
    with pytest.raises(ValueError):
        quadrilateral_sides(m, A((0, 0), (0, 4)), A((0, 1), (0, 3)))


def test_induced_triangles_examples():
    m = CircleModel(1)
    big, small = A((0, 0), (0, 4)), A((0, 2), (0, 6))
    t1, t2 = induced_triangles(m, big, small)
    assert t1.first == big and t1.third == small
    assert set(t1.middle) == {A((0, 2), (0, 4)), A((0, 0), (0, 6))}
    assert t2.first == small and t2.third == big
    assert set(t2.middle) == {A((0, 0), (0, 2)), A((0, 4), (0, 6))}

    # two degenerate sides: each triangle keeps exactly one summand
    t1, t2 = induced_triangles(m, A((0, 0), (0, 2)), A((0, 1), (0, 4)))
    assert len(t1.middle) == 1 and len(t2.middle) == 1

    # three degenerate sides: one middle empty, the other a single arc
    t1, t2 = induced_triangles(m, A((0, -1), (0, 1)), A((0, -2), (0, 0)))
    middles = sorted([t1.middle, t2.middle], key=len)
    assert middles[0] == ()
    assert middles[1] == (A((0, -2), (0, 1)),)


def test_induced_triangle_sides_close_up():
    # every middle arc shares exactly one endpoint with each diagonal and
    # crosses neither; the two middles split the four sides into opposite pairs
    m = CircleModel(2)
    x, y = A((0, 0), (1, 0)), A((0, 2), (1, 2))
    t1, t2 = induced_triangles(m, x, y)
    sides = list(t1.middle) + list(t2.middle)
    assert len(sides) == 4
    for side in sides:
        assert len({side.a, side.b} & {x.a, x.b}) == 1
        assert len({side.a, side.b} & {y.a, y.b}) == 1
        assert ext1_dim(m, side, x) == 0
        assert ext1_dim(m, side, y) == 0
    assert len(set(sides)) == 4
