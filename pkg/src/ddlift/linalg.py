"""Exact linear algebra over GF(q): rank, reduced echelon form, inverse, kernel.

Matrices are immutable, stored as row tuples of integer-encoded field
elements.  The reduced row-echelon form is used as the canonical
representative of a row space throughout the package.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf import GF, check_same_field
from .guards import DEFAULT_LIMITS


class Matrix:
    """Immutable matrix over a GF field."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: GF, rows: Iterable[Sequence[int]], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError(f"ragged rows: widths {sorted(widths)}")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols={ncols} does not match row width {width}")
            self.ncols = width
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit ncols")
            self.ncols = ncols
        side = max(len(self.rows), self.ncols)
        if side > DEFAULT_LIMITS.max_matrix_side:
            raise ValueError(f"matrix side {side} exceeds guard {DEFAULT_LIMITS.max_matrix_side}")
        for r in self.rows:
            for x in r:
                field._check_element(x)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, field: GF, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: GF, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows), ncols=self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        f = self.field
        cols = other.transpose().rows
        out = [[_dot(f, r, c) for c in cols] for r in self.rows]
        return Matrix(f, out, ncols=other.ncols)

    def rref_pivots(self) -> tuple["Matrix", tuple[int, ...]]:
        rows, pivots = _rref_rows(self.field, self.rows, self.ncols)
        return Matrix(self.field, rows, ncols=self.ncols), pivots

    def rref(self) -> "Matrix":
        """Reduced row-echelon form; same shape, same row space, idempotent."""
        return self.rref_pivots()[0]

    def row_basis(self) -> tuple[tuple[int, ...], ...]:
        """Nonzero rows of the reduced echelon form (canonical row-space basis)."""
        rows, pivots = _rref_rows(self.field, self.rows, self.ncols)
        return tuple(tuple(r) for r in rows[: len(pivots)])

    def rank(self) -> int:
        return rank_rows(self.field, self.rows)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError(f"cannot invert a {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        rows, pivots = _rref_rows(self.field, aug, 2 * n)
        if len(pivots) < n or pivots[-1] >= n:
            r = sum(1 for p in pivots if p < n)
            raise ValueError(f"matrix is singular: rank {r} < {n}")
        return Matrix(self.field, [r[n:] for r in rows[:n]], ncols=n)

    def kernel(self) -> "Matrix":
        """Basis of the right null space, one vector per row (possibly no rows)."""
        f = self.field
        rows, pivots = _rref_rows(f, self.rows, self.ncols)
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(rows[i][fc])
            basis.append(v)
        return Matrix(f, basis, ncols=self.ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {list(map(list, self.rows))})"


def _dot(f: GF, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = f.add(acc, f.mul(a, b))
    return acc


def _rref_rows(f: GF, rows: Iterable[Sequence[int]], ncols: int):
    """Gauss-Jordan elimination; returns (row list, pivot column tuple)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, nrows):
            if work[i][col]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        lead = work[r][col]
        if lead != 1:
            inv = f.inv(lead)
            work[r] = [f.mul(inv, x) for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][col]:
                c = work[i][col]
                row_r = work[r]
                work[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[i], row_r)]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return work, tuple(pivots)


def rank_rows(f: GF, rows: Sequence[Sequence[int]]) -> int:
    """Row rank by plain forward elimination, no Matrix wrapper (hot path)."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    nrows = len(work)
    for col in range(ncols):
        pr = None
        for i in range(rank, nrows):
            if work[i][col]:
                pr = i
                break
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        lead = work[rank][col]
        inv = f.inv(lead) if lead != 1 else 1
        row_r = work[rank]
        if inv != 1:
            row_r = [f.mul(inv, x) for x in row_r]
            work[rank] = row_r
        for i in range(rank + 1, nrows):
            c = work[i][col]
            if c:
                work[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[i], row_r)]
        rank += 1
        if rank == nrows:
            break
    return rank
