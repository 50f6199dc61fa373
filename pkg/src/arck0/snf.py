"""Exact integer linear algebra: Smith normal form and cokernel presentations.

Everything runs over Python's arbitrary-precision integers; there are no
modular shortcuts and no floating point anywhere.  Matrices at this scale
(a few thousand columns at most) are handled by a sparse column-echelon
pre-reduction followed by a dense Smith reduction with minimal-absolute-value
pivoting, which keeps coefficient growth tame.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class GroupPresentation:
    """A finitely generated abelian group: free rank plus invariant factors.

    ``invariant_factors`` is the torsion chain d1 | d2 | ... with every di >= 2.
    """

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        factors = self.invariant_factors
        for i, d in enumerate(factors):
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if i + 1 < len(factors) and factors[i + 1] % d:
                raise ValueError(f"broken divisibility chain: {d} does not divide {factors[i + 1]}")

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class IntMatrix:
    """A dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        return cls(len(entries), len(entries[0]) if entries else 0, entries)

    @classmethod
    def from_columns(cls, ambient: int, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        for c in columns:
            if len(c) != ambient:
                raise ValueError(f"column of length {len(c)}, expected {ambient}")
        entries = tuple(tuple(int(c[i]) for c in columns) for i in range(ambient))
        return cls(ambient, len(columns), entries)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def _echelon_columns(columns: Iterable[Mapping[int, int]]) -> dict[int, dict[int, int]]:
    """Reduce sparse integer columns to normalized column-echelon form.

    Only column operations are used, so the lattice spanned by the columns is
    unchanged.  Returns {pivot row: column}, each column a dict row -> value
    whose smallest-row entry sits at the pivot row.  After insertion every
    pivot column is reduced against the deeper pivots, which is what keeps
    entries from exploding.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in columns:
        col = {r: int(v) for r, v in raw.items() if v}
        while col:
            r = min(col)
            pivot = pivots.get(r)
            if pivot is None:
                pivots[r] = col
                break
            q = col[r] // pivot[r]
            if q:
                for rr, vv in pivot.items():
                    nv = col.get(rr, 0) - q * vv
                    if nv:
                        col[rr] = nv
                    else:
                        col.pop(rr, None)
            if col.get(r):
                # remainder beats the pivot; swap roles and keep reducing
                pivots[r] = col
                col = pivot
    # normalization pass, deepest pivot first: flip signs and take every
    # entry below a pivot row modulo that pivot
    order = sorted(pivots)
    for idx in range(len(order) - 1, -1, -1):
        r = order[idx]
        col = pivots[r]
        if col[r] < 0:
            pivots[r] = col = {k: -v for k, v in col.items()}
        for rr in order[idx + 1 :]:
            v = col.get(rr)
            if v:
                pivot = pivots[rr]
                q = v // pivot[rr]
                if q:
                    for k, pv in pivot.items():
                        nv = col.get(k, 0) - q * pv
                        if nv:
                            col[k] = nv
                        else:
                            col.pop(k, None)
    return pivots


def _divisibility_chain(values: list[int]) -> list[int]:
    """Sort positive diagonal values into a divisibility chain.

    Uses that diag(a, b) and diag(gcd(a, b), lcm(a, b)) present the same
    group; bubbling the pair operation to a fixed point sorts the prime
    powers into the invariant-factor chain.
    """
    from math import gcd

    chain = [abs(v) for v in values]
    changed = True
    while changed:
        changed = False
        for i in range(len(chain) - 1):
            x, y = chain[i], chain[i + 1]
            g = gcd(x, y)
            l = x * y // g if g else 0
            if (g, l) != (x, y):
                chain[i], chain[i + 1] = g, l
                changed = True
    return chain


def _snf_values_sparse(rows: Iterable[Mapping[int, int]]) -> list[int]:
    """Nonzero Smith diagonal of the lattice spanned by sparse rows.

    Alternates normalized echelon reduction with transposition until the
    matrix is diagonal; the normalization bounds entry growth, which plain
    row/column elimination does not (random 12x12 inputs already blow up
    to thousands of digits there).
    """
    work = [{int(i): int(v) for i, v in r.items() if v} for r in rows]
    work = [r for r in work if r]
    for _ in range(256):
        pivots = _echelon_columns(work)
        if all(set(col) == {r} for r, col in pivots.items()):
            return _divisibility_chain([col[r] for r, col in pivots.items()])
        transposed: dict[int, dict[int, int]] = {}
        for r, col in pivots.items():
            for rr, v in col.items():
                transposed.setdefault(rr, {})[r] = v
        work = list(transposed.values())
    raise RuntimeError("Smith reduction did not converge")


def _snf_dense(
    matrix: Sequence[Sequence[int]], track_left: bool = False
) -> tuple[list[int], list[list[int]] | None]:
    """Smith diagonal of a dense integer matrix via unimodular row/column ops.

    Returns (diag, left) where diag is the full diagonal (nonnegative, each
    entry dividing the next, zeros trailing) and left is the accumulated row
    transform when requested: left @ input, followed by the column operations,
    is the diagonal matrix.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    k = len(a[0]) if m else 0
    left = [[int(i == j) for j in range(m)] for i in range(m)] if track_left else None

    def add_row(dst: int, src: int, c: int) -> None:
        rd, rs = a[dst], a[src]
        for t in range(k):
            v = rs[t]
            if v:
                rd[t] += c * v
        if left is not None:
            ld, ls = left[dst], left[src]
            for t in range(m):
                v = ls[t]
                if v:
                    ld[t] += c * v

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def add_col(dst: int, src: int, c: int) -> None:
        for row in a:
            v = row[src]
            if v:
                row[dst] += c * v

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]

    rank = min(m, k)
    for s in range(min(m, k)):
        # minimal-absolute-value pivot over the trailing block
        best = 0
        pr = pc = -1
        for i in range(s, m):
            row = a[i]
            for j in range(s, k):
                v = row[j]
                if v:
                    v = -v if v < 0 else v
                    if best == 0 or v < best:
                        best, pr, pc = v, i, j
                        if v == 1:
                            break
            if best == 1:
                break
        if best == 0:
            rank = s
            break
        if pr != s:
            swap_rows(s, pr)
        if pc != s:
            swap_cols(s, pc)

        while True:
            dirty = False
            for i in range(s + 1, m):
                v = a[i][s]
                if v:
                    q = v // a[s][s]
                    if q:
                        add_row(i, s, -q)
                    if a[i][s]:
                        swap_rows(s, i)
                        dirty = True
            if dirty:
                continue
            for j in range(s + 1, k):
                v = a[s][j]
                if v:
                    q = v // a[s][s]
                    if q:
                        add_col(j, s, -q)
                    if a[s][j]:
                        swap_cols(s, j)
                        dirty = True
            if dirty:
                continue
            # the pivot must divide every remaining entry for the chain to hold
            d = a[s][s]
            offender = -1
            for i in range(s + 1, m):
                row = a[i]
                for j in range(s + 1, k):
                    if row[j] % d:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            add_row(s, offender, 1)
        if a[s][s] < 0:
            a[s] = [-v for v in a[s]]
            if left is not None:
                left[s] = [-v for v in left[s]]

    diag = [a[i][i] if i < rank else 0 for i in range(min(m, k))]
    return diag, left


def smith_normal_form(matrix: IntMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Full Smith diagonal d1 | d2 | ... of an integer matrix, zeros trailing."""
    rows = matrix.entries if isinstance(matrix, IntMatrix) else matrix
    m = len(rows)
    k = len(rows[0]) if m else 0
    values = _snf_values_sparse(
        {j: v for j, v in enumerate(row) if v} for row in rows
    )
    return values + [0] * (min(m, k) - len(values))


def _quotient_with_transform(
    ambient: int, columns: Iterable[Mapping[int, int]]
) -> tuple[list[int], list[list[int]], GroupPresentation]:
    """Present Z^ambient modulo the column span, tracking the row transform.

    Returns (moduli, left, presentation): ``moduli[i]`` is the order of the
    i-th coordinate after the left transform (0 meaning free, 1 meaning
    collapsed), so the class of x in the quotient is read off from left @ x
    componentwise mod moduli.  The dense elimination used here is only
    suitable for the small near-unimodular systems the quotient pipelines
    produce; arbitrary matrices go through ``smith_normal_form`` instead.
    """
    pivots = _echelon_columns(columns)
    order = sorted(pivots)
    dense = [[pivots[r].get(i, 0) for r in order] for i in range(ambient)]
    diag, left = _snf_dense(dense, track_left=True)
    moduli = [diag[i] if i < len(diag) else 0 for i in range(ambient)]
    free = sum(1 for v in moduli if v == 0)
    factors = tuple(d for d in diag if d > 1)
    return moduli, left, GroupPresentation(free, factors)


def cokernel_presentation(
    ambient_rank: int,
    columns: Sequence[Sequence[int] | Mapping[int, int]],
) -> GroupPresentation:
    """Presentation of Z^ambient_rank modulo the span of the given columns.

    Columns may be dense vectors of length ``ambient_rank`` or sparse
    {index: value} mappings.
    """
    if ambient_rank < 0:
        raise ValueError("ambient rank must be nonnegative")
    sparse: list[dict[int, int]] = []
    for c in columns:
        if isinstance(c, Mapping):
            col = {int(i): int(v) for i, v in c.items() if v}
            if col and not all(0 <= i < ambient_rank for i in col):
                raise ValueError("column index out of range")
        else:
            if len(c) != ambient_rank:
                raise ValueError(f"column of length {len(c)}, expected {ambient_rank}")
            col = {i: int(v) for i, v in enumerate(c) if v}
        sparse.append(col)
    values = _snf_values_sparse(sparse)
    factors = tuple(d for d in values if d > 1)
    return GroupPresentation(ambient_rank - len(values), factors)
