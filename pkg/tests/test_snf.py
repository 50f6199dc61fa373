import random
from itertools import combinations
from math import gcd

import pytest

from arck0 import GroupPresentation, IntMatrix, cokernel_presentation, smith_normal_form
from snf_reference import reference_snf


def test_snf_identity():
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]


def test_snf_diagonal_with_zero():
    assert smith_normal_form([[2, 0], [0, 0]]) == [2, 0]


def test_snf_2x2():
    # d1 = gcd of entries = 2, d1*d2 = |det| = 8
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]


def test_snf_empty_and_degenerate():
    assert smith_normal_form([]) == []
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[7]]) == [7]
    assert smith_normal_form([[-3]]) == [3]
    assert smith_normal_form([[0, -2]]) == [2]
    assert smith_normal_form([[2, 7], [0, 0], [0, 0]]) == [1, 0]


def test_snf_known_matrix():
    m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    assert smith_normal_form(m) == [1, 10, 30, 0]


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _det(minor)
    return total


def _determinantal_divisor(matrix, k):
    m, n = len(matrix), len(matrix[0])
    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            sub = [[matrix[i][j] for j in cols] for i in rows]
            g = gcd(g, _det(sub))
    return g


def test_snf_against_determinantal_divisors():
    rng = random.Random(7)
    for _ in range(40):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        mat = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        diag = smith_normal_form(mat)
        prod = 1
        for k in range(1, min(m, n, 3) + 1):
            dk = _determinantal_divisor(mat, k)
            prod *= diag[k - 1]
            assert prod == dk, (mat, diag, k)


def test_snf_against_reference_oracle():
    rng = random.Random(20240211)
    for _ in range(200):
        m = rng.randint(1, 8)
        n = rng.randint(1, 8)
        mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        diag = smith_normal_form(mat)
        assert diag == reference_snf(mat), mat
        for a, b in zip(diag, diag[1:]):
            if b:
                assert a and b % a == 0
            assert a >= 0 and b >= 0


def test_group_presentation_validation():
    with pytest.raises(ValueError):
        GroupPresentation(-1)
    with pytest.raises(ValueError):
        GroupPresentation(0, (1,))
    with pytest.raises(ValueError):
        GroupPresentation(0, (4, 2))
    p = GroupPresentation(2, (2, 6))
    assert p.to_json() == {"free_rank": 2, "invariant_factors": [2, 6]}
    assert str(p) == "Z^2 x Z/2 x Z/6"
    assert str(GroupPresentation(0)) == "0"
    assert str(GroupPresentation(1)) == "Z"


def test_cokernel_examples():
    assert cokernel_presentation(4, [(1, 1, 0, 0), (-1, -1, 2, 0)]) == GroupPresentation(2, (2,))
    assert cokernel_presentation(5, []) == GroupPresentation(5)
    assert cokernel_presentation(2, [(1, 0), (0, 1)]) == GroupPresentation(0)


def test_cokernel_accepts_sparse_columns():
    dense = cokernel_presentation(3, [(2, 0, 0), (0, 3, 0)])
    sparse = cokernel_presentation(3, [{0: 2}, {1: 3}])
    assert dense == sparse == GroupPresentation(1, (6,))


def test_cokernel_rejects_bad_columns():
    with pytest.raises(ValueError):
        cokernel_presentation(3, [(1, 2)])
    with pytest.raises(ValueError):
        cokernel_presentation(2, [{5: 1}])


def test_cokernel_invariance_under_column_signs_and_order():
    rng = random.Random(99)
    for _ in range(30):
        ambient = rng.randint(1, 6)
        cols = [
            tuple(rng.randint(-4, 4) for _ in range(ambient))
            for _ in range(rng.randint(0, 6))
        ]
        base = cokernel_presentation(ambient, cols)
        flipped = [tuple(-v for v in c) if rng.random() < 0.5 else c for c in cols]
        rng.shuffle(flipped)
        assert cokernel_presentation(ambient, flipped) == base


def test_int_matrix():
    m = IntMatrix.from_columns(3, [(1, 2, 3), (0, -1, 0)])
    assert m.rows == 3 and m.cols == 2
    assert m.column(0) == (1, 2, 3)
    assert m.to_json() == [[1, 0], [2, -1], [3, 0]]
    assert IntMatrix.from_rows(m.to_json()) == m
    with pytest.raises(ValueError):
        IntMatrix.from_columns(2, [(1, 2, 3)])


def test_quotient_transform_reads_off_classes():
    # the tracked row transform turns coordinates into quotient classes:
    # Z^2 / <(1,1), (-1,1)> is Z/2, generated by either basis vector
    from arck0.snf import _quotient_with_transform

    moduli, left, pres = _quotient_with_transform(2, [{0: 1, 1: 1}, {0: -1, 1: 1}])
    assert pres == GroupPresentation(0, (2,))

    def cls(vec):
        out = []
        for i, m in enumerate(moduli):
            v = sum(left[i][j] * c for j, c in enumerate(vec))
            if m != 1:
                out.append(v % m if m else v)
        return tuple(out)

    assert cls((1, 1)) == cls((0, 0)) == cls((2, 0))
    assert cls((1, 0)) == cls((0, 1)) != cls((0, 0))
