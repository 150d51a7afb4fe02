"""Projective embeddings of the small and large Witt designs.

Both embeddings take the columns of a Golay code generator matrix as a
point set (ternary [12,6,6] into PG(5,3), binary [24,12,8] into PG(11,2)).
Nothing about the matrices is trusted: the code's minimum weight and weight
distribution are recomputed by full codeword enumeration, and every stated
geometric property of the point set is checked before the design object is
returned.

The small design's blocks are recovered geometrically, as the hyperplane
sections with more than three points, and then cross-checked against the
weight-6 codeword supports.  The large design's blocks are the weight-8
codeword supports; their count is whatever the enumeration yields, it is
never hard-coded.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterator, Sequence

from .designs import EmbeddedDesign, Params
from .errors import ConstructionError
from .gf import GF
from .guards import DEFAULT_LIMITS, Limits, check
from .linalg import rank_rows
from .projective import Point, dot, hyperplanes, normalize

# Generator matrix [I6 | B] of the extended ternary Golay code: bordered
# circulant of (0 1 2 2 1).  Verified below by codeword enumeration.
TERNARY_GOLAY_GENERATOR: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1),
    (0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1),
    (0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2),
    (0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2),
    (0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1),
    (0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0),
)

# Generator matrix [I12 | B] of the extended binary Golay code: B is the
# standard circulant-plus-border matrix.  Verified below by enumeration.
_BINARY_B: tuple[tuple[int, ...], ...] = (
    (1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1),
    (1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1),
    (0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1),
    (1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1),
    (1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1),
    (1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1),
    (0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1),
    (0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1),
    (0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1),
    (1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1),
    (0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0),
)

BINARY_GOLAY_GENERATOR: tuple[tuple[int, ...], ...] = tuple(
    tuple(1 if i == j else 0 for j in range(12)) + _BINARY_B[i] for i in range(12)
)


def enumerate_codewords(
    field: GF, generator: Sequence[Sequence[int]], limits: Limits = DEFAULT_LIMITS
) -> Iterator[tuple[int, ...]]:
    """All q^k words of the row space of the generator, message order lexicographic."""
    kdim = len(generator)
    n = len(generator[0])
    check("codeword enumeration", field.q**kdim, limits.max_codewords)
    f = field
    for msg in product(range(f.q), repeat=kdim):
        word = [0] * n
        for coeff, row in zip(msg, generator):
            if coeff:
                for j, x in enumerate(row):
                    if x:
                        word[j] = f.add(word[j], f.mul(coeff, x))
        yield tuple(word)


def weight_distribution(
    field: GF, generator: Sequence[Sequence[int]], limits: Limits = DEFAULT_LIMITS
) -> Counter:
    dist: Counter = Counter()
    for word in enumerate_codewords(field, generator, limits):
        dist[sum(1 for x in word if x)] += 1
    return dist


def _column_points(field: GF, generator: Sequence[Sequence[int]]) -> list[Point]:
    cols = list(zip(*generator))
    pts = [normalize(field, col) for col in cols]
    if len(set(pts)) != len(pts):
        raise ConstructionError("generator matrix columns are not projectively distinct")
    return pts


def witt12_embedding(limits: Limits = DEFAULT_LIMITS) -> EmbeddedDesign:
    """The 5-(1,6,1) design on 12 points of PG(5,3).

    Blocks are the hyperplane sections of size at least four; the
    construction fails unless there are exactly 132 of them, all of size
    six and all spanning hyperplanes, and unless they coincide with the
    weight-6 codeword supports.
    """
    field = GF(3)
    gen = TERNARY_GOLAY_GENERATOR
    dist = weight_distribution(field, gen, limits)
    nonzero = {w: c for w, c in dist.items() if w > 0}
    if min(nonzero) != 6:
        raise ConstructionError(f"ternary code has minimum weight {min(nonzero)}, expected 6")
    points = _column_points(field, gen)
    if rank_rows(field, points) != 6:
        raise ConstructionError("point set does not span PG(5,3)")

    blocks = set()
    for h in hyperplanes(field, 5, limits):
        section = tuple(i for i, p in enumerate(points) if dot(field, h, p) == 0)
        if len(section) >= 4:
            if len(section) != 6:
                raise ConstructionError(f"hyperplane section of size {len(section)}, expected 6")
            blocks.add(section)
    if len(blocks) != 132:
        raise ConstructionError(f"{len(blocks)} hyperplane sections of size >= 4, expected 132")

    supports = {
        tuple(j for j, x in enumerate(word) if x)
        for word in enumerate_codewords(field, gen, limits)
        if sum(1 for x in word if x) == 6
    }
    if supports != blocks:
        raise ConstructionError("hyperplane sections disagree with weight-6 codeword supports")

    return EmbeddedDesign(
        field,
        5,
        points,
        [(i,) for i in range(12)],
        sorted(blocks),
        Params(5, 1, 6, 1),
        provenance={"generator": "witt12"},
        limits=limits,
    )


def witt24_embedding(limits: Limits = DEFAULT_LIMITS) -> EmbeddedDesign:
    """The 5-(1,8,1) design on 24 points of PG(11,2).

    Blocks are the weight-8 codeword supports of the binary Golay code; the
    block count is reported as computed by the enumeration.
    """
    field = GF(2)
    gen = BINARY_GOLAY_GENERATOR
    dist = weight_distribution(field, gen, limits)
    nonzero = {w: c for w, c in dist.items() if w > 0}
    if min(nonzero) != 8:
        raise ConstructionError(f"binary code has minimum weight {min(nonzero)}, expected 8")
    points = _column_points(field, gen)
    if rank_rows(field, points) != 12:
        raise ConstructionError("point set does not span PG(11,2)")

    blocks = sorted(
        tuple(j for j, x in enumerate(word) if x)
        for word in enumerate_codewords(field, gen, limits)
        if sum(1 for x in word if x) == 8
    )
    return EmbeddedDesign(
        field,
        11,
        points,
        [(i,) for i in range(24)],
        blocks,
        Params(5, 1, 8, 1),
        provenance={"generator": "witt24", "octad_count": len(blocks)},
        limits=limits,
    )
