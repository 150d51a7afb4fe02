"""Group action, orbits, mappers, stabilizers, lifts, products, affine model."""

from itertools import combinations, product

import pytest

from ddlift.designs import Design, Params
from ddlift.errors import ConstructionError
from ddlift.gf import GF, field_from_order
from ddlift.generators import (
    elliptic_quadric,
    fano_design,
    trivial_abstract_design,
    trivial_design,
    veronese_variety,
)
from ddlift.guards import GuardExceeded, Limits
from ddlift.lifting import (
    LiftingContext,
    act,
    affine_model_equivalent,
    affine_polynomial_design,
    brute_orbit,
    brute_stabilizer_count,
    build_lifted_design,
    build_sections_design,
    embedded_base_from_design,
    enumerate_group,
    orbit,
    predicted_params,
    product_lift,
    section_blocks,
    stabilizer_size,
    transversal_mapper,
)
from ddlift.linalg import Matrix
from ddlift.projective import canonical_embed, enumerate_points, is_independent
from ddlift.verify import check_axioms, fingerprint, lambda_histogram


def test_act_examples(gf3):
    assert act(gf3, (1, 2, 0), [(1,), (0,)], 1, 1) == (1, 2, 1)
    zero = [(0,), (0,)]
    for p in enumerate_points(gf3, 2):
        assert act(gf3, p, zero, 1, 1) == p
    # vertex points are fixed by every element
    for m in enumerate_group(gf3, 1, 1):
        assert act(gf3, (0, 0, 1), m, 1, 1) == (0, 0, 1)


def test_act_is_additive_action(gf3):
    d = c = 1
    pts = enumerate_points(gf3, d + c)
    group = list(enumerate_group(gf3, d, c))
    for m1 in group:
        for m2 in group:
            msum = tuple(
                tuple(gf3.add(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(m1, m2)
            )
            for p in pts:
                assert act(gf3, act(gf3, p, m1, d, c), m2, d, c) == act(gf3, p, msum, d, c)


def test_act_dimension_mismatch(gf3):
    with pytest.raises(ValueError):
        act(gf3, (1, 0), [(1,), (0,)], 1, 1)
    with pytest.raises(ValueError):
        act(gf3, (1, 0, 0), [(1,)], 1, 1)


def test_orbit_examples(gf3):
    got = orbit(gf3, (1, 0, 0), 1, 1)
    assert got == [(1, 0, 0), (1, 0, 1), (1, 0, 2)]
    with pytest.raises(ValueError):
        orbit(gf3, (0, 0, 1), 1, 1)


def test_orbit_c0_is_singleton(gf3):
    assert orbit(gf3, (1, 2), 1, 0) == [(1, 2)]


def test_orbit_matches_brute_force(gf3, gf2):
    for f, d, c in [(gf3, 1, 1), (gf2, 2, 1), (gf3, 1, 2)]:
        for p in enumerate_points(f, d + c):
            if all(x == 0 for x in p[: d + 1]):
                continue
            assert set(orbit(f, p, d, c)) == brute_orbit(f, p, d, c)
            assert len(orbit(f, p, d, c)) == f.q**c


def test_transversal_mapper_examples(gf3):
    # points already inside PG(d,q) need the zero element
    m = transversal_mapper(gf3, [(1, 0, 0), (0, 1, 0)], 1, 1)
    assert m.rows == ((0,), (0,))
    m = transversal_mapper(gf3, [(1, 0, 1), (0, 1, 2)], 1, 1)
    assert m.rows == ((2,), (1,))
    for y in [(1, 0, 1), (0, 1, 2)]:
        image = act(gf3, y, m.rows, 1, 1)
        assert image == canonical_embed(y[:2], 2)


def test_transversal_mapper_unique(gf3):
    # brute force over all q^(c(d+1)) elements finds exactly one mapper
    pts = [(1, 0, 1), (0, 1, 2)]
    targets = [canonical_embed(p[:2], 2) for p in pts]
    hits = [
        m
        for m in enumerate_group(gf3, 1, 1)
        if all(act(gf3, p, m, 1, 1) == t for p, t in zip(pts, targets))
    ]
    assert len(hits) == 1
    assert Matrix(gf3, hits[0]) == transversal_mapper(gf3, pts, 1, 1)


def test_transversal_mapper_singular(gf3):
    with pytest.raises(ValueError, match="singular"):
        transversal_mapper(gf3, [(1, 0, 1), (2, 0, 1)], 1, 1)


def test_stabilizer_formula_against_brute_force():
    for q in (2, 3):
        f = field_from_order(q)
        for d in (1, 2):
            pts = enumerate_points(f, d)
            for c in (1, 2):
                for u in range(1, d + 2):
                    values = set()
                    for z in combinations(pts, u):
                        if not is_independent(f, z):
                            continue
                        got = brute_stabilizer_count(f, z, d, c)
                        assert got == stabilizer_size(f, z, d, c) == q ** (c * (d - u + 1))
                        values.add(got)
                    assert len(values) == 1


def test_stabilizer_rejects_dependent(gf3):
    with pytest.raises(ValueError, match="independent"):
        stabilizer_size(gf3, [(1, 0, 0), (2, 0, 0)], 2, 1)
    assert stabilizer_size(gf3, [(1, 0), (0, 1)], 1, 1) == 1  # full basis is rigid


def test_predicted_params_examples(w12, gf3):
    ctx = LiftingContext(w12, 1)
    assert predicted_params(ctx) == {
        "t": 5, "s": 3, "k": 6, "lambda": 1, "v": 36, "block_count": 32076,
    }
    base_b = trivial_design(gf3, w12.points, 5)
    assert predicted_params(LiftingContext(base_b, 1)) == {
        "t": 5, "s": 3, "k": 12, "lambda": 3, "v": 36, "block_count": 729,
    }
    nrc = trivial_design(gf3, veronese_variety(gf3, 1, 2), 3)
    assert predicted_params(LiftingContext(nrc, 1)) == {
        "t": 3, "s": 3, "k": 4, "lambda": 1, "v": 12, "block_count": 27,
    }
    assert predicted_params(LiftingContext(nrc, 0))["block_count"] == 1


def test_lift_c0_returns_base(nrc_base):
    lifted = build_lifted_design(LiftingContext(nrc_base, 0))
    assert lifted.v == nrc_base.v
    assert lifted.blocks == nrc_base.blocks
    assert lifted.params == nrc_base.params


def test_nrc_lift(nrc_lift):
    assert nrc_lift.v == 12
    assert nrc_lift.b == 27
    assert nrc_lift.params == Params(3, 3, 4, 1)
    report = check_axioms(nrc_lift)
    assert report.passed
    assert report.counts["transversal_subsets"] == 108
    assert lambda_histogram(nrc_lift) == {1: 108}


def test_nrc_lift_group_route_matches(nrc_base, nrc_lift):
    via_group = build_lifted_design(LiftingContext(nrc_base, 1), route="group")
    assert via_group.blocks == nrc_lift.blocks
    assert via_group.points == nrc_lift.points


def test_section_blocks_equal_orbit_blocks(nrc_base, nrc_lift):
    ctx = LiftingContext(nrc_base, 1)
    secs = section_blocks(ctx)
    assert len(secs) == 27  # complements of the vertex point in PG(3,3)
    assert tuple(secs) == nrc_lift.blocks
    design = build_sections_design(ctx)
    assert design.blocks == nrc_lift.blocks
    assert check_axioms(design).passed


def test_section_blocks_c0(nrc_base):
    assert section_blocks(LiftingContext(nrc_base, 0)) == [tuple(range(4))]


def test_section_blocks_needs_single_block(w12):
    with pytest.raises(ValueError, match="single block"):
        section_blocks(LiftingContext(w12, 1))


def test_lifting_hypothesis_i_checked(gf3):
    # a non-spanning base: the conic inside PG(2,3) is fine, but three
    # collinear-free points inside a plane of PG(3,3) do not span it
    pts = [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0)]
    base = trivial_design(gf3, pts, 2)
    with pytest.raises(ConstructionError, match="hypothesis \\(i\\)"):
        LiftingContext(base, 1)


def test_lift_guard(w12):
    with pytest.raises(GuardExceeded):
        build_lifted_design(LiftingContext(w12, 1, Limits(max_blocks=100)))


def test_quadric_lift_gf4():
    f4 = GF(2, 2)
    ed = elliptic_quadric(f4)
    ctx = LiftingContext(ed, 1)
    pred = predicted_params(ctx)
    assert pred == {"t": 3, "s": 4, "k": 5, "lambda": 1, "v": 68, "block_count": 68 * 64}
    lifted = build_lifted_design(ctx)
    assert lifted.v == 68 and lifted.b == 68 * 64
    report = check_axioms(lifted)
    assert report.passed


def test_product_lift_fano():
    fano = fano_design()
    lifted = product_lift(fano, 2)
    assert lifted.v == 14
    assert lifted.b == 56
    assert lifted.params == Params(2, 2, 3, 2)
    report = check_axioms(lifted)
    assert report.passed
    assert report.counts["transversal_subsets"] == 84
    # stabilizer-order formula |G|/w^u reproduced by the lambda computation
    w, k, t = 2, 3, 2
    assert lifted.params.lam == fano.params.lam * (w**k) // (w**t)


def test_product_lift_w1_identity():
    fano = fano_design()
    lifted = product_lift(fano, 1)
    assert lifted.v == 7
    assert lifted.params == fano.params
    assert {frozenset(b) for b in lifted.blocks} == {frozenset(b) for b in fano.blocks}


def test_product_lift_trivial_base():
    base = trivial_abstract_design(4, 2)
    lifted = product_lift(base, 3)
    assert lifted.v == 12
    assert lifted.b == 3**4
    assert lifted.params == Params(2, 3, 4, 9)
    assert check_axioms(lifted).passed


def test_product_lift_guard():
    with pytest.raises(GuardExceeded):
        product_lift(trivial_abstract_design(10, 2), 8, Limits(max_blocks=10**6))


def test_affine_polynomial_design_t3_q3(gf3):
    d = affine_polynomial_design(gf3, 1, 1, 3)
    assert d.v == 9
    assert d.b == 27
    assert d.params == Params(3, 3, 3, 1)
    assert len(d.classes) == 3
    report = check_axioms(d)
    assert report.passed


def test_affine_polynomial_design_t2_q2(gf2):
    d = affine_polynomial_design(gf2, 1, 1, 2)
    assert d.b == 4
    assert d.params == Params(2, 2, 2, 1)
    assert check_axioms(d).passed


def test_affine_polynomial_design_t1(gf3):
    d = affine_polynomial_design(gf3, 1, 1, 1)
    assert d.b == 3  # graphs of the constants: the horizontal sections
    assert check_axioms(d).passed


def test_affine_polynomial_design_rejects_t_above_q(gf3):
    with pytest.raises(ValueError, match="exceeds q"):
        affine_polynomial_design(gf3, 1, 1, 4)


def test_affine_model_equivalence():
    for m, c, t, q in [(1, 1, 3, 3), (1, 1, 2, 2), (1, 2, 2, 3)]:
        assert affine_model_equivalent(field_from_order(q), m, c, t)


def test_iterated_lift_matches_single_step(nrc_base):
    l1 = build_lifted_design(LiftingContext(nrc_base, 1))
    twice = build_lifted_design(LiftingContext(embedded_base_from_design(l1), 1))
    single = build_lifted_design(LiftingContext(nrc_base, 2))
    assert twice.params == single.params
    assert (twice.v, twice.b) == (single.v, single.b)
    assert fingerprint(twice) == fingerprint(single)
    assert check_axioms(twice).passed
    assert check_axioms(single).passed


def test_w12_lift_brute_route_matches(w12, w12_lift):
    via_group = build_lifted_design(LiftingContext(w12, 1), route="group")
    assert via_group.blocks == w12_lift.blocks
