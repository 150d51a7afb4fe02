"""Divisible design data structures.

Two kinds of incidence structures live here:

* :class:`Design` is the general structure the verifier consumes: a point
  table (projective coordinates or opaque labels), a class partition, a
  block list and declared parameters.  Construction enforces
  well-formedness only (indices in range, classes a partition, blocks
  sorted and distinct); whether the design axioms actually hold is the
  verifier's job, so that a tampered document still parses and fails with a
  witness instead of an exception.

* :class:`EmbeddedDesign` is a base design whose points carry PG(d,q)
  coordinates.  These are always produced by constructions, so they are
  validated fail-fast: classes of size s, blocks of size k and transversal,
  all blocks of one common rank beta, every transversal t-subset of points
  independent, and t <= v/s.  Whether the point set spans the whole ambient
  space is checked by the lifting context, not here.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .errors import ConstructionError
from .gf import GF
from .guards import DEFAULT_LIMITS, Limits, check
from .linalg import rank_rows
from .projective import Point


class Params(NamedTuple):
    """Declared parameters of a t-(s, k, lambda) divisible design."""

    t: int
    s: int
    k: int
    lam: int


def class_index_of(classes: Sequence[Sequence[int]], v: int) -> list[int]:
    """Map point id -> class id, validating that classes partition range(v)."""
    owner = [-1] * v
    for ci, cls in enumerate(classes):
        for p in cls:
            if not 0 <= p < v:
                raise ConstructionError(f"class {ci} contains out-of-range point {p}")
            if owner[p] != -1:
                raise ConstructionError(f"point {p} appears in classes {owner[p]} and {ci}")
            owner[p] = ci
    missing = [p for p, ci in enumerate(owner) if ci == -1]
    if missing:
        raise ConstructionError(f"points {missing[:5]} belong to no class")
    return owner


def transversal_subset_count(class_sizes: Sequence[int], t: int) -> int:
    """Number of class-transversal t-subsets: the elementary symmetric polynomial e_t."""
    es = [0] * (t + 1)
    es[0] = 1
    for size in class_sizes:
        for j in range(min(t, len(es) - 1), 0, -1):
            es[j] += es[j - 1] * size
    return es[t]


class Design:
    """An incidence structure with a class partition and declared parameters."""

    __slots__ = ("params", "points", "classes", "blocks", "field", "ambient_dim", "provenance")

    def __init__(
        self,
        params: Params,
        points: Sequence,
        classes: Sequence[Sequence[int]],
        blocks: Sequence[Sequence[int]],
        field: GF | None = None,
        ambient_dim: int | None = None,
        provenance: dict | None = None,
    ):
        self.params = Params(*params)
        self.points = tuple(points)
        self.classes = tuple(tuple(c) for c in classes)
        self.blocks = tuple(tuple(b) for b in blocks)
        self.field = field
        self.ambient_dim = ambient_dim
        self.provenance = dict(provenance or {})
        self._validate_well_formed()

    @property
    def v(self) -> int:
        return len(self.points)

    @property
    def b(self) -> int:
        return len(self.blocks)

    def class_index(self) -> list[int]:
        return class_index_of(self.classes, self.v)

    def _validate_well_formed(self) -> None:
        if min(self.params) < 1:
            raise ConstructionError(f"parameters must be positive, got {self.params}")
        self.class_index()
        seen = set()
        for bi, blk in enumerate(self.blocks):
            if blk != tuple(sorted(set(blk))):
                raise ConstructionError(f"block {bi} is not sorted ascending without repeats")
            if blk and not (0 <= blk[0] and blk[-1] < self.v):
                raise ConstructionError(f"block {bi} contains out-of-range point ids")
            if blk in seen:
                raise ConstructionError(f"block {bi} duplicates an earlier block")
            seen.add(blk)


class EmbeddedDesign:
    """A base design embedded in PG(d,q), validated fail-fast at construction."""

    __slots__ = ("field", "dim", "points", "classes", "blocks", "params", "beta", "provenance")

    def __init__(
        self,
        field: GF,
        dim: int,
        points: Sequence[Point],
        classes: Sequence[Sequence[int]],
        blocks: Sequence[Sequence[int]],
        params: Params,
        provenance: dict | None = None,
        limits: Limits = DEFAULT_LIMITS,
    ):
        self.field = field
        self.dim = dim
        self.points = tuple(tuple(p) for p in points)
        self.classes = tuple(tuple(c) for c in classes)
        self.blocks = tuple(tuple(b) for b in blocks)
        self.params = Params(*params)
        self.provenance = dict(provenance or {})
        self.beta = self._validate(limits)

    @property
    def v(self) -> int:
        return len(self.points)

    @property
    def b(self) -> int:
        return len(self.blocks)

    def _validate(self, limits: Limits) -> int:
        t, s, k, _ = self.params
        for i, p in enumerate(self.points):
            if len(p) != self.dim + 1:
                raise ConstructionError(f"point {i} has {len(p)} coordinates, ambient needs {self.dim + 1}")
        if len(set(self.points)) != len(self.points):
            raise ConstructionError("point table contains duplicate points")
        owner = class_index_of(self.classes, self.v)
        for ci, cls in enumerate(self.classes):
            if len(cls) != s:
                raise ConstructionError(f"class {ci} has size {len(cls)}, declared s={s}")
        if t * s > self.v:
            raise ConstructionError(f"t={t} exceeds v/s = {self.v}/{s}")
        for bi, blk in enumerate(self.blocks):
            if len(blk) != k:
                raise ConstructionError(f"block {bi} has size {len(blk)}, declared k={k}")
            if len({owner[p] for p in blk}) != k:
                raise ConstructionError(f"block {bi} is not class-transversal")
        if not self.blocks:
            raise ConstructionError("design has no blocks")
        ranks = {rank_rows(self.field, [self.points[p] for p in blk]) for blk in self.blocks}
        if len(ranks) != 1:
            raise ConstructionError(f"blocks span subspaces of differing ranks {sorted(ranks)}")
        beta = ranks.pop()
        witness = first_dependent_transversal(self.field, self.points, self.classes, t, limits=limits)
        if witness is not None:
            raise ConstructionError(f"transversal {t}-subset {list(witness)} is dependent")
        return beta

    def to_design(self) -> Design:
        return Design(
            self.params,
            self.points,
            self.classes,
            self.blocks,
            field=self.field,
            ambient_dim=self.dim,
            provenance=self.provenance,
        )


def iter_transversal_subsets(classes: Sequence[Sequence[int]], t: int) -> Iterable[tuple[int, ...]]:
    """All class-transversal t-subsets, as sorted point-id tuples."""
    for combo in combinations(range(len(classes)), t):
        for choice in product(*(classes[ci] for ci in combo)):
            yield tuple(sorted(choice))


def first_dependent_transversal(
    field: GF,
    points: Sequence[Point],
    classes: Sequence[Sequence[int]],
    t: int,
    limits: Limits = DEFAULT_LIMITS,
) -> tuple[int, ...] | None:
    """First transversal t-subset whose points are dependent, or None."""
    total = transversal_subset_count([len(c) for c in classes], t)
    check("transversal subset scan", total, limits.max_subsets)
    for subset in iter_transversal_subsets(classes, t):
        rows = [points[p] for p in subset]
        if rank_rows(field, rows) != t:
            return subset
    return None


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
