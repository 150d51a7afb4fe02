"""Points and subspaces of PG(n,q).

A projective point is a tuple of n+1 integer-encoded field elements in
canonical form: the leftmost nonzero coordinate equals 1.  Point tables are
always enumerated in lexicographic order of the canonical coordinate
tuples, so ids and exports are reproducible run to run.

Subspaces are stored as reduced-echelon row bases, making subspace equality
structural equality.  Hyperplanes are handled dually, as normalized
coefficient vectors; membership is a dot product.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .gf import GF
from .guards import DEFAULT_LIMITS, Limits, check
from .linalg import Matrix, _dot, rank_rows

Point = tuple[int, ...]


def normalize(field: GF, vec: Sequence[int]) -> Point:
    """Canonical representative: scale so the leftmost nonzero entry is 1."""
    lead = None
    for x in vec:
        if x:
            lead = x
            break
    if lead is None:
        raise ValueError("cannot normalize the zero vector")
    if lead == 1:
        return tuple(vec)
    inv = field.inv(lead)
    return tuple(field.mul(inv, x) for x in vec)


def point_count(q: int, n: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def enumerate_points(field: GF, n: int, limits: Limits = DEFAULT_LIMITS) -> list[Point]:
    """All points of PG(n,q), lexicographic on canonical coordinates."""
    if n < 0:
        raise ValueError(f"dimension {n} must be >= 0")
    q = field.q
    check("point enumeration", point_count(q, n), limits.max_points)
    pts: list[Point] = []
    for lead in range(n, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in product(range(q), repeat=n - lead):
            pts.append(prefix + tail)
    return pts


def dot(field: GF, u: Sequence[int], v: Sequence[int]) -> int:
    return _dot(field, u, v)


class Subspace:
    """A projective subspace, held as a reduced-echelon row basis."""

    __slots__ = ("field", "basis", "ncols")

    def __init__(self, field: GF, basis_rows: Iterable[Sequence[int]], ncols: int):
        rows = Matrix(field, basis_rows, ncols=ncols)
        reduced = rows.row_basis()
        if len(reduced) != rows.nrows:
            raise ValueError("basis rows are dependent")
        self.field = field
        self.basis = reduced
        self.ncols = ncols

    @classmethod
    def from_points(cls, field: GF, points: Iterable[Point]) -> "Subspace":
        pts = list(points)
        if not pts:
            raise ValueError("span of an empty point set is undefined")
        basis = Matrix(field, pts).row_basis()
        return cls(field, basis, ncols=len(pts[0]))

    @property
    def dim(self) -> int:
        """Projective dimension (number of basis rows minus one)."""
        return len(self.basis) - 1

    def contains(self, point: Sequence[int]) -> bool:
        stacked = list(self.basis) + [tuple(point)]
        return rank_rows(self.field, stacked) == len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis={list(map(list, self.basis))})"


def span(field: GF, points: Iterable[Point]) -> Subspace:
    return Subspace.from_points(field, points)


def is_independent(field: GF, points: Iterable[Point]) -> bool:
    pts = list(points)
    return rank_rows(field, pts) == len(pts)


def vertex_subspace(field: GF, d: int, c: int) -> Subspace:
    """The (c-1)-dimensional subspace of PG(d+c,q) with the first d+1 coordinates zero."""
    if c < 1:
        raise ValueError("vertex subspace needs c >= 1")
    n = d + c
    rows = [[0] * (n + 1) for _ in range(c)]
    for i in range(c):
        rows[i][d + 1 + i] = 1
    return Subspace(field, rows, ncols=n + 1)


def in_vertex(point: Sequence[int], d: int) -> bool:
    return all(x == 0 for x in point[: d + 1])


def project_through_vertex(field: GF, point: Sequence[int], d: int, c: int) -> Point:
    """Central projection PG(d+c,q) minus the vertex onto PG(d,q): keep the head."""
    if len(point) != d + c + 1:
        raise ValueError(f"point has {len(point)} coordinates, expected {d + c + 1}")
    if in_vertex(point, d):
        raise ValueError("point lies in the vertex subspace")
    return normalize(field, point[: d + 1])


def canonical_embed(point: Sequence[int], n: int) -> Point:
    """Pad with zeros up to n+1 coordinates; canonical form is preserved."""
    d = len(point) - 1
    if n < d:
        raise ValueError(f"target dimension {n} below point dimension {d}")
    return tuple(point) + (0,) * (n - d)


def hyperplanes(field: GF, n: int, limits: Limits = DEFAULT_LIMITS) -> list[Point]:
    """All hyperplanes of PG(n,q) as normalized dual coefficient vectors."""
    if n < 1:
        raise ValueError(f"dimension {n} must be >= 1 for hyperplanes")
    return enumerate_points(field, n, limits)


def on_hyperplane(field: GF, coeffs: Sequence[int], point: Sequence[int]) -> bool:
    return _dot(field, coeffs, point) == 0
