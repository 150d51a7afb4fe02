"""Base point sets and base designs embedded in PG(d,q).

Everything a lifting can start from, other than the Witt designs (those sit
in their own module): Veronese varieties and normal rational curves,
elliptic quadrics with their circle designs, point sets read off linear
codes, single-block designs on independent point sets, and the embedding of
an arbitrary abstract design into a normal rational curve.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Sequence

from .designs import Design, EmbeddedDesign, Params
from .errors import ConstructionError
from .gf import GF
from .guards import DEFAULT_LIMITS, Limits, check
from .linalg import Matrix, rank_rows
from .projective import (
    Point,
    dot,
    enumerate_points,
    hyperplanes,
    normalize,
    point_count,
)


def exponent_sequences(m: int, r: int) -> list[tuple[int, ...]]:
    """All (m+1)-tuples of non-negative integers summing to r.

    Ordered by descending lexicographic comparison of the tuples (the usual
    ordering of degree-r monomials in x0 > x1 > ... > xm from largest).
    The first m+1 entries are then (r,0,...,0), (r-1,1,0,...,0), ...,
    (r-1,0,...,0,1), which is what the affine coordinate layout relies on.
    """
    if m < 0 or r < 1:
        raise ValueError(f"need m >= 0 and r >= 1, got m={m}, r={r}")
    seqs: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            seqs.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], r, m + 1)
    return seqs


def evaluate_monomials(field: GF, vec: Sequence[int], exponents: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    """Evaluate each monomial x0^e0 * ... * xm^em at the given vector."""
    out = []
    for exps in exponents:
        val = 1
        for x, e in zip(vec, exps):
            if e:
                val = field.mul(val, field.pow(x, e))
                if val == 0:
                    break
        out.append(val)
    return tuple(out)


def veronese_dimension(m: int, r: int) -> int:
    from math import comb

    return comb(m + r, m) - 1


def veronese_map(field: GF, point: Sequence[int], r: int) -> Point:
    """Degree-r monomial map PG(m,q) -> PG(d,q), d = C(m+r, m) - 1."""
    if r < 1:
        raise ValueError(f"degree {r} must be >= 1")
    m = len(point) - 1
    image = evaluate_monomials(field, point, exponent_sequences(m, r))
    return normalize(field, image)


def veronese_variety(field: GF, m: int, r: int, limits: Limits = DEFAULT_LIMITS) -> list[Point]:
    """Image of PG(m,q) under the degree-r monomial map, in source point order."""
    exps = exponent_sequences(m, r)
    pts = [normalize(field, evaluate_monomials(field, p, exps)) for p in enumerate_points(field, m, limits)]
    if len(set(pts)) != len(pts):
        raise ConstructionError("monomial map identified two distinct source points")
    return pts


def min_covering_degree(field: GF, m: int, mode: str = "projective", limits: Limits = DEFAULT_LIMITS) -> int:
    """Least degree of a nonzero form vanishing on every point of the space.

    Projective mode evaluates homogeneous degree-r monomials on the
    canonical representatives of all points of PG(m,q); affine mode
    evaluates all monomials of total degree <= r on GF(q)^m.  The answer is
    the first r whose evaluation matrix has a nontrivial kernel.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if mode not in ("projective", "affine"):
        raise ValueError(f"unknown mode {mode!r}")
    q = field.q
    if mode == "projective":
        rows_pts = enumerate_points(field, m, limits)
    else:
        check("affine point enumeration", q**m, limits.max_points)
        rows_pts = [(1,) + tail for tail in product(range(q), repeat=m)]
    r = 0
    while True:
        r += 1
        exps = exponent_sequences(m, r)
        check("monomial evaluation matrix", len(rows_pts) * len(exps), limits.max_subsets)
        rows = [evaluate_monomials(field, p, exps) for p in rows_pts]
        if Matrix(field, rows).kernel().nrows > 0:
            return r


def _irreducible_binary_form(field: GF) -> tuple[int, int]:
    """Coefficients (b, c) with z^2 + b z + c irreducible over GF(q)."""
    for b in field.elements():
        for c in field.elements():
            if all(field.add(field.mul(z, field.add(z, b)), c) != 0 for z in field.elements()):
                return b, c
    raise ConstructionError(f"no irreducible quadratic over {field}")


def elliptic_quadric(field: GF, limits: Limits = DEFAULT_LIMITS) -> EmbeddedDesign:
    """The q^2+1 point ovoid in PG(3,q) with its plane sections of size q+1 as blocks.

    The resulting 3-(1, q+1, 1) design is the classical circle geometry on
    the quadric x0*x1 + phi(x2,x3) = 0, phi an irreducible binary quadratic
    form.
    """
    q = field.q
    if q < 3:
        raise ValueError("need q >= 3 for a nondegenerate 3-design")
    b, c = _irreducible_binary_form(field)

    def on_quadric(p: Point) -> bool:
        x0, x1, x2, x3 = p
        phi = field.add(field.mul(x2, x2), field.add(field.mul(b, field.mul(x2, x3)), field.mul(c, field.mul(x3, x3))))
        return field.add(field.mul(x0, x1), phi) == 0

    points = [p for p in enumerate_points(field, 3, limits) if on_quadric(p)]
    if len(points) != q * q + 1:
        raise ConstructionError(f"quadric has {len(points)} points, expected {q * q + 1}")
    blocks = []
    for h in hyperplanes(field, 3, limits):
        section = tuple(i for i, p in enumerate(points) if dot(field, h, p) == 0)
        if len(section) == q + 1:
            blocks.append(section)
        elif len(section) > 1:
            raise ConstructionError(f"plane section of unexpected size {len(section)}")
    if len(blocks) != q**3 + q:
        raise ConstructionError(f"{len(blocks)} circles found, expected {q**3 + q}")
    return EmbeddedDesign(
        field,
        3,
        points,
        [(i,) for i in range(len(points))],
        sorted(blocks),
        Params(3, 1, q + 1, 1),
        provenance={"generator": "quadric", "q": q},
        limits=limits,
    )


def _min_weight_and_kernel(field: GF, h: Matrix, limits: Limits) -> tuple[int, tuple[int, ...]]:
    """Minimum weight over the right null space of h, with a witness word."""
    basis = h.kernel().rows
    kdim = len(basis)
    check("codeword enumeration", field.q**kdim, limits.max_codewords)
    best = None
    best_word = None
    f = field
    for msg in product(range(f.q), repeat=kdim):
        if all(x == 0 for x in msg):
            continue
        word = [0] * h.ncols
        for coeff, row in zip(msg, basis):
            if coeff:
                for j, x in enumerate(row):
                    if x:
                        word[j] = f.add(word[j], f.mul(coeff, x))
        w = sum(1 for x in word if x)
        if best is None or w < best:
            best = w
            best_word = tuple(word)
    if best is None:
        raise ConstructionError("code has no nonzero codewords (kernel is trivial)")
    return best, best_word


def code_point_set(field: GF, check_matrix: Matrix, t: int, limits: Limits = DEFAULT_LIMITS) -> list[Point]:
    """Columns of a parity-check matrix as points of PG(rank-1, q).

    Valid only when every t-subset of columns is independent and some
    (t+1)-subset is dependent, i.e. the code the matrix checks has minimum
    weight exactly t+1.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    cols = check_matrix.transpose().rows
    for j, col in enumerate(cols):
        if all(x == 0 for x in col):
            raise ValueError(f"column {j} of the check matrix is zero")
    w, word = _min_weight_and_kernel(field, check_matrix, limits)
    support = tuple(j for j, x in enumerate(word) if x)
    if w <= t:
        raise ConstructionError(
            f"columns {list(support)} are dependent: a {w}-subset fails the required {t}-independence"
        )
    if w > t + 1:
        raise ConstructionError(
            f"no dependent {t + 1}-subset exists: the smallest dependency has size {w}"
        )
    return [normalize(field, col) for col in cols]


def trivial_design(
    field: GF,
    points: Sequence[Point],
    t: int,
    provenance: dict | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> EmbeddedDesign:
    """The one-block t-(1, k, 1) design on an independent-enough point set.

    Requires every t-subset of the points to be independent (witnessed
    error otherwise) and t <= k.
    """
    pts = sorted(points)
    k = len(pts)
    if t > k:
        raise ValueError(f"t={t} exceeds the number of points {k}")
    return EmbeddedDesign(
        field,
        len(pts[0]) - 1,
        pts,
        [(i,) for i in range(k)],
        [tuple(range(k))],
        Params(t, 1, k, 1),
        provenance=provenance or {"generator": "trivial"},
        limits=limits,
    )


def embed_in_nrc(design: Design, field: GF, limits: Limits = DEFAULT_LIMITS) -> EmbeddedDesign:
    """Identify an abstract design's points with points of the normal rational curve.

    Point i goes to the i-th curve point in enumeration order; blocks,
    classes and parameters carry over.  Needs q+1 >= v >= t.
    """
    t = design.params.t
    v = design.v
    if field.q + 1 < v:
        raise ValueError(f"curve has {field.q + 1} points, design needs {v}")
    curve = veronese_variety(field, 1, t - 1, limits) if t >= 2 else None
    if curve is None:
        raise ValueError("need t >= 2 to embed in a normal rational curve")
    return EmbeddedDesign(
        field,
        t - 1,
        curve[:v],
        design.classes,
        design.blocks,
        design.params,
        provenance={"generator": "nrc-embedding", "base": dict(design.provenance), "q": field.q},
        limits=limits,
    )


def fano_design() -> Design:
    """The Fano plane as an abstract 2-(1,3,1) design, from the lines of PG(2,2)."""
    field = GF(2)
    pts = enumerate_points(field, 2)
    blocks = []
    for h in hyperplanes(field, 2):
        blocks.append(tuple(i for i, p in enumerate(pts) if dot(field, h, p) == 0))
    return Design(
        Params(2, 1, 3, 1),
        tuple(range(len(pts))),
        [(i,) for i in range(len(pts))],
        sorted(blocks),
        provenance={"generator": "fano"},
    )


def trivial_abstract_design(k: int, t: int) -> Design:
    """A single-block abstract t-(1,k,1) design on k labelled points."""
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={k}")
    return Design(
        Params(t, 1, k, 1),
        tuple(range(k)),
        [(i,) for i in range(k)],
        [tuple(range(k))],
        provenance={"generator": "trivial-abstract", "k": k, "t": t},
    )


def independent_subset_count_guard(v: int, t: int, limits: Limits) -> None:
    from math import comb

    check("t-subset scan", comb(v, t), limits.max_subsets)


def all_t_subsets_independent(field: GF, points: Sequence[Point], t: int, limits: Limits = DEFAULT_LIMITS):
    """Witness a dependent t-subset among all t-subsets, or return None."""
    independent_subset_count_guard(len(points), t, limits)
    for subset in combinations(range(len(points)), t):
        if rank_rows(field, [points[i] for i in subset]) != t:
            return subset
    return None
