"""The construction core.

An embedded base design in PG(d,q) is lifted into PG(d+c,q) by the
elementary abelian group of upper unitriangular block matrices

    [ I_{d+1}  M ]
    [ 0        I_c ],   M any (d+1) x c matrix over GF(q),

acting on row coordinate vectors from the right.  The group fixes the
vertex subspace S (first d+1 coordinates zero) pointwise; the orbit of any
point off S is the affine tail-space over its head, so orbits are computed
in closed form and the full group action is kept only as a brute-force
oracle.

Also here: the cone-section description of the blocks (valid for one-block
bases), the direct-product lifting of an arbitrary abstract design, and the
polynomial-graph model of the affine lifts.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .designs import Design, EmbeddedDesign, Params
from .errors import ConstructionError
from .gf import GF
from .guards import DEFAULT_LIMITS, Limits, check
from .linalg import Matrix, rank_rows
from .projective import (
    Point,
    Subspace,
    canonical_embed,
    in_vertex,
    normalize,
    project_through_vertex,
    vertex_subspace,
)
from .generators import exponent_sequences, evaluate_monomials, trivial_design, veronese_map


class LiftingContext:
    """A validated (base design, tail count c) pair ready for lifting."""

    __slots__ = ("base", "c", "d", "n", "vertex", "limits")

    def __init__(self, base: EmbeddedDesign, c: int, limits: Limits = DEFAULT_LIMITS):
        if c < 0:
            raise ValueError(f"c must be >= 0, got {c}")
        self.base = base
        self.c = c
        self.d = base.dim
        self.n = base.dim + c
        self.limits = limits
        if rank_rows(base.field, base.points) != self.d + 1:
            raise ConstructionError(
                "lifting hypothesis (i) fails: base points do not span the ambient space"
            )
        # hypotheses (ii) and (iii) were enforced when the base was built
        self.vertex: Subspace | None = (
            vertex_subspace(base.field, self.d, c) if c >= 1 else None
        )

    @property
    def field(self) -> GF:
        return self.base.field


def act(field: GF, point: Sequence[int], m_rows: Sequence[Sequence[int]], d: int, c: int) -> Point:
    """Image of a point of PG(d+c,q) under the group element with tail block M."""
    if len(point) != d + c + 1:
        raise ValueError(f"point has {len(point)} coordinates, expected {d + c + 1}")
    if len(m_rows) != d + 1 or any(len(r) != c for r in m_rows):
        raise ValueError(f"tail block must be {d + 1}x{c}")
    head = point[: d + 1]
    tail = list(point[d + 1 :])
    for i, h in enumerate(head):
        if h:
            row = m_rows[i]
            for j in range(c):
                if row[j]:
                    tail[j] = field.add(tail[j], field.mul(h, row[j]))
    return normalize(field, head + tuple(tail))


def orbit(field: GF, point: Sequence[int], d: int, c: int) -> list[Point]:
    """Group orbit of a point off the vertex: fixed head, every possible tail."""
    if len(point) != d + c + 1:
        raise ValueError(f"point has {len(point)} coordinates, expected {d + c + 1}")
    if in_vertex(point, d):
        raise ValueError("point lies in the vertex subspace; its orbit is not defined here")
    head = normalize(field, point[: d + 1])
    return [head + tail for tail in product(range(field.q), repeat=c)]


def enumerate_group(field: GF, d: int, c: int, limits: Limits = DEFAULT_LIMITS) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All q^(c(d+1)) tail blocks M, flattened-row lexicographic order."""
    check("group enumeration", field.q ** (c * (d + 1)), limits.max_subsets)
    for flat in product(range(field.q), repeat=(d + 1) * c):
        yield tuple(flat[i * c : (i + 1) * c] for i in range(d + 1))


def brute_orbit(field: GF, point: Sequence[int], d: int, c: int, limits: Limits = DEFAULT_LIMITS) -> set[Point]:
    """Oracle: the orbit computed by applying every group element."""
    return {act(field, point, m, d, c) for m in enumerate_group(field, d, c, limits)}


def transversal_mapper(field: GF, points: Sequence[Point], d: int, c: int) -> Matrix:
    """The unique group element moving each of d+1 given points onto its projection.

    The points, stacked as rows (L | M) with L the head block, must be
    independent and span PG(d+c,q) together with the vertex; then the
    element's tail block is -L^(-1) M.
    """
    if len(points) != d + 1:
        raise ValueError(f"need exactly {d + 1} points, got {len(points)}")
    stacked = Matrix(field, points)
    if stacked.ncols != d + c + 1:
        raise ValueError(f"points have {stacked.ncols} coordinates, expected {d + c + 1}")
    head = Matrix(field, [p[: d + 1] for p in points])
    tail = Matrix(field, [p[d + 1 :] for p in points], ncols=c)
    try:
        head_inv = head.inverse()
    except ValueError as exc:
        raise ValueError(f"head block is singular, points do not project to a basis: {exc}") from exc
    prod_ = head_inv @ tail
    neg = Matrix(field, [[field.neg(x) for x in row] for row in prod_.rows], ncols=c)
    return neg


def stabilizer_size(field: GF, points: Sequence[Point], d: int, c: int) -> int:
    """Order of the pointwise stabilizer of an independent subset of PG(d,q)."""
    u = len(points)
    if u > d + 1:
        raise ValueError(f"{u} points cannot be independent in PG({d},q)")
    if any(len(p) != d + 1 for p in points):
        raise ValueError(f"points must lie in PG({d},q) (coordinate length {d + 1})")
    if rank_rows(field, points) != u:
        raise ValueError("stabilizer formula only applies to independent point sets")
    return field.q ** (c * (d - u + 1))


def brute_stabilizer_count(
    field: GF, points: Sequence[Point], d: int, c: int, limits: Limits = DEFAULT_LIMITS
) -> int:
    """Oracle: count group elements fixing every given PG(d,q) point."""
    n = d + c
    embedded = [canonical_embed(p, n) for p in points]
    count = 0
    for m in enumerate_group(field, d, c, limits):
        if all(act(field, p, m, d, c) == p for p in embedded):
            count += 1
    return count


def predicted_params(ctx: LiftingContext) -> dict:
    """Parameters of the lifted design, from the closed formulas (no enumeration)."""
    t, s_bar, k, lam_bar = ctx.base.params
    q, c, beta = ctx.field.q, ctx.c, ctx.base.beta
    return {
        "t": t,
        "s": q**c * s_bar,
        "k": k,
        "lambda": q ** (c * (beta - t)) * lam_bar,
        "v": q**c * ctx.base.v,
        "block_count": ctx.base.b * q ** (c * beta),
    }


def _lifted_point_table(ctx: LiftingContext) -> tuple[list[Point], dict[Point, int], list[tuple[int, ...]]]:
    """Point table (orbit by orbit), coordinate lookup, and lifted classes."""
    field, c, n = ctx.field, ctx.c, ctx.n
    points: list[Point] = []
    for bp in ctx.base.points:
        head = canonical_embed(bp, n)
        if c == 0:
            points.append(head)
        else:
            points.extend(orbit(field, head, ctx.d, c))
    lookup = {p: i for i, p in enumerate(points)}
    size = field.q**c
    classes = [
        tuple(sorted(i * size + r for i in cls for r in range(size)))
        for cls in ctx.base.classes
    ]
    return points, lookup, classes


def _independent_rows(field: GF, rows: Sequence[Point], want: int) -> list[int]:
    """Greedy prefix of row indices whose rows are independent, length want."""
    chosen: list[int] = []
    for i in range(len(rows)):
        trial = chosen + [i]
        if rank_rows(field, [rows[j] for j in trial]) == len(trial):
            chosen.append(i)
            if len(chosen) == want:
                return chosen
    raise ConstructionError(f"only {len(chosen)} independent rows found, needed {want}")


def _block_orbit_direct(
    ctx: LiftingContext, block: Sequence[int], lookup: dict[Point, int]
) -> set[tuple[int, ...]]:
    """Orbit of one base block, parameterized by the tails of an independent beta-subset.

    Each group image of the block is determined by where it sends the tails
    of beta independent block points, and every tail assignment occurs; so
    the orbit is generated without touching the q^(c(d+1)) group elements.
    """
    field, d, c, n = ctx.field, ctx.d, ctx.c, ctx.n
    beta = ctx.base.beta
    q = field.q
    base_pts = [ctx.base.points[p] for p in block]
    anchor = _independent_rows(field, base_pts, beta)
    # complete the anchor rows to an invertible (d+1)x(d+1) matrix
    rows = [base_pts[i] for i in anchor]
    for j in range(d + 1):
        if len(rows) == d + 1:
            break
        unit = tuple(1 if idx == j else 0 for idx in range(d + 1))
        if rank_rows(field, rows + [unit]) == len(rows) + 1:
            rows.append(unit)
    basis_inv = Matrix(field, rows).inverse()

    embedded = [canonical_embed(p, n) for p in base_pts]
    images: set[tuple[int, ...]] = set()
    for flat in product(range(q), repeat=beta * c):
        assign = [flat[i * c : (i + 1) * c] for i in range(beta)]
        padded = Matrix(field, assign + [(0,) * c] * (d + 1 - beta), ncols=c)
        m_rows = (basis_inv @ padded).rows
        image = tuple(sorted(lookup[act(field, p, m_rows, d, c)] for p in embedded))
        images.add(image)
    expected = q ** (c * beta)
    if len(images) != expected:
        raise ConstructionError(
            f"block orbit has {len(images)} distinct images, expected {expected}"
        )
    return images


def _block_orbit_group(
    ctx: LiftingContext, block: Sequence[int], lookup: dict[Point, int]
) -> set[tuple[int, ...]]:
    """Oracle route: multiply the block by every group element and deduplicate."""
    field, d, c = ctx.field, ctx.d, ctx.c
    embedded = [canonical_embed(ctx.base.points[p], ctx.n) for p in block]
    images: set[tuple[int, ...]] = set()
    for m in enumerate_group(field, d, c, ctx.limits):
        images.add(tuple(sorted(lookup[act(field, p, m, d, c)] for p in embedded)))
    return images


def build_lifted_design(ctx: LiftingContext, route: str = "direct") -> Design:
    """The lifted design: orbit points, projected classes, block orbits.

    route="direct" parameterizes each block orbit by tail assignments;
    route="group" is the brute-force oracle over all group elements.
    """
    if route not in ("direct", "group"):
        raise ValueError(f"unknown route {route!r}")
    pred = predicted_params(ctx)
    check("lifted block enumeration", pred["block_count"], ctx.limits.max_blocks)
    points, lookup, classes = _lifted_point_table(ctx)
    provenance = {
        "method": "matrix_lift",
        "base": dict(ctx.base.provenance),
        "c": ctx.c,
        "field": {"p": ctx.field.p, "e": ctx.field.e, "modulus": list(ctx.field.modulus)},
    }
    if ctx.c == 0:
        blocks = sorted(tuple(sorted(b)) for b in ctx.base.blocks)
    else:
        orbit_fn = _block_orbit_direct if route == "direct" else _block_orbit_group
        all_blocks: set[tuple[int, ...]] = set()
        for block in ctx.base.blocks:
            all_blocks |= orbit_fn(ctx, block, lookup)
        if len(all_blocks) != pred["block_count"]:
            raise ConstructionError(
                f"lifted design has {len(all_blocks)} blocks, predicted {pred['block_count']}"
            )
        blocks = sorted(all_blocks)
    return Design(
        Params(pred["t"], pred["s"], pred["k"], pred["lambda"]),
        points,
        classes,
        blocks,
        field=ctx.field,
        ambient_dim=ctx.n,
        provenance=provenance,
    )


def section_blocks(ctx: LiftingContext) -> list[tuple[int, ...]]:
    """Blocks as sections of the cone by complements of the vertex.

    Only meaningful for a one-block base (the cone construction).  Every
    complement of the vertex is the row space of (I | M) for a unique tail
    block M, so the complements are enumerated via the group.
    """
    if ctx.base.b != 1:
        raise ValueError("section description needs a base design with a single block")
    if ctx.c == 0:
        return [tuple(sorted(ctx.base.blocks[0]))]
    check("complement enumeration", ctx.field.q ** (ctx.c * (ctx.d + 1)), ctx.limits.max_blocks)
    field, d, c, n = ctx.field, ctx.d, ctx.c, ctx.n
    points, lookup, _ = _lifted_point_table(ctx)
    embedded = [canonical_embed(p, n) for p in ctx.base.points]
    sections: set[tuple[int, ...]] = set()
    for m in enumerate_group(field, d, c, ctx.limits):
        sections.add(tuple(sorted(lookup[act(field, p, m, d, c)] for p in embedded)))
    return sorted(sections)


def build_sections_design(ctx: LiftingContext) -> Design:
    """Same points and classes as the lift, blocks built by the section route."""
    pred = predicted_params(ctx)
    points, _, classes = _lifted_point_table(ctx)
    blocks = section_blocks(ctx)
    return Design(
        Params(pred["t"], pred["s"], pred["k"], pred["lambda"]),
        points,
        classes,
        blocks,
        field=ctx.field,
        ambient_dim=ctx.n,
        provenance={
            "method": "sections",
            "base": dict(ctx.base.provenance),
            "c": ctx.c,
            "field": {"p": ctx.field.p, "e": ctx.field.e, "modulus": list(ctx.field.modulus)},
        },
    )


def embedded_base_from_design(design: Design, limits: Limits = DEFAULT_LIMITS) -> EmbeddedDesign:
    """Re-validate a lifted design as an embeddable base, for iterated lifting."""
    if design.field is None or design.ambient_dim is None:
        raise ValueError("design carries no projective coordinates")
    return EmbeddedDesign(
        design.field,
        design.ambient_dim,
        design.points,
        design.classes,
        design.blocks,
        design.params,
        provenance=dict(design.provenance),
        limits=limits,
    )


def product_lift(base: Design, w: int, limits: Limits = DEFAULT_LIMITS) -> Design:
    """Direct-product lifting: fiber every point into w copies.

    A subset of the new point set is a block exactly when its projection to
    the base is a block, so the blocks are all ways of choosing one fiber
    element above each point of each base block, and lambda scales by
    w^(k - t).
    """
    if w < 1:
        raise ValueError(f"fiber size must be >= 1, got {w}")
    t, s_bar, k, lam_bar = base.params
    block_count = base.b * w**k
    check("product block enumeration", block_count, limits.max_blocks)
    points = [(label, j) for label in base.points for j in range(w)]
    classes = [
        tuple(sorted(i * w + j for i in cls for j in range(w))) for cls in base.classes
    ]
    blocks = []
    for blk in base.blocks:
        for fibers in product(range(w), repeat=k):
            blocks.append(tuple(sorted(p * w + j for p, j in zip(blk, fibers))))
    params = Params(t, w * s_bar, k, lam_bar * w ** (k - t))
    return Design(
        params,
        points,
        classes,
        sorted(blocks),
        provenance={"method": "product_lift", "base": dict(base.provenance), "w": w},
    )


def affine_polynomial_design(field: GF, m: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> Design:
    """The polynomial-graph model on GF(q)^(m+c).

    Blocks are the graphs of all c-tuples of m-variable polynomial
    functions of total degree at most t-1; point classes are the fibers of
    the projection onto the first m coordinates.  Needs t <= q, otherwise
    the block set would not arise from a spanning base.
    """
    q = field.q
    if m < 1 or c < 1:
        raise ValueError(f"need m >= 1 and c >= 1, got m={m}, c={c}")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if t > q:
        raise ValueError(f"t={t} exceeds q={q}; the polynomial graphs would not form this design")
    monomials = [e[1:] for e in exponent_sequences(m, t - 1)] if t >= 2 else [(0,) * m]
    ncoef = len(monomials)
    block_count = q ** (c * ncoef)
    check("polynomial graph enumeration", block_count, limits.max_blocks)
    check("affine point enumeration", q ** (m + c), limits.max_points)

    xs = list(product(range(q), repeat=m))
    points = [x + y for x in xs for y in product(range(q), repeat=c)]
    lookup = {p: i for i, p in enumerate(points)}
    classes = [
        tuple(lookup[x + y] for y in product(range(q), repeat=c)) for x in xs
    ]
    mono_values = [evaluate_monomials(field, x, monomials) for x in xs]

    blocks = set()
    f = field
    for flat in product(range(q), repeat=c * ncoef):
        coeff_rows = [flat[j * ncoef : (j + 1) * ncoef] for j in range(c)]
        block = []
        for x, mv in zip(xs, mono_values):
            y = tuple(
                _dot_plain(f, coeffs, mv) for coeffs in coeff_rows
            )
            block.append(lookup[x + y])
        blocks.add(tuple(sorted(block)))
    if len(blocks) != block_count:
        raise ConstructionError(
            f"{len(blocks)} distinct polynomial graphs, expected {block_count}"
        )
    d = ncoef - 1
    params = Params(t, q**c, q**m, q ** (c * (d - t + 1)))
    return Design(
        params,
        points,
        classes,
        sorted(blocks),
        field=field,
        ambient_dim=None,
        provenance={
            "method": "affine_poly",
            "m": m,
            "c": c,
            "t": t,
            "field": {"p": field.p, "e": field.e, "modulus": list(field.modulus)},
        },
    )


def _dot_plain(f: GF, coeffs: Sequence[int], values: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(coeffs, values):
        if a and b:
            acc = f.add(acc, f.mul(a, b))
    return acc


def affine_model_equivalent(field: GF, m: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Check that deleting the middle coordinates of the affine-Veronese lift
    is a block and class preserving bijection onto the polynomial-graph model."""
    q = field.q
    if t > q:
        raise ValueError(f"t={t} exceeds q={q}")
    poly = affine_polynomial_design(field, m, c, t, limits)

    affine_heads = [(1,) + x for x in product(range(q), repeat=m)]
    base_points = [veronese_map(field, h, t - 1) for h in affine_heads]
    base = trivial_design(
        field, base_points, t, provenance={"generator": "affine-veronese", "m": m, "t": t}, limits=limits
    )
    lifted = build_lifted_design(LiftingContext(base, c, limits))

    d = base.dim
    mapping = []
    for pt in lifted.points:
        head, tail = pt[: d + 1], pt[d + 1 :]
        if head[0] != 1:
            return False
        affine_vec = tuple(head[1 : m + 1]) + tuple(tail)
        mapping.append(affine_vec)
    if len(set(mapping)) != len(mapping) or len(mapping) != poly.v:
        return False
    poly_lookup = {p: i for i, p in enumerate(poly.points)}
    to_poly = [poly_lookup[vec] for vec in mapping]

    lifted_blocks = {tuple(sorted(to_poly[p] for p in blk)) for blk in lifted.blocks}
    if lifted_blocks != set(poly.blocks):
        return False
    lifted_classes = {tuple(sorted(to_poly[p] for p in cls)) for cls in lifted.classes}
    return lifted_classes == {tuple(sorted(cls)) for cls in poly.classes}
