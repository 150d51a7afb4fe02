"""Axiom checking, histograms, hypersimplicity, fingerprints."""

import random

import pytest

from ddlift.designs import Design, Params, transversal_subset_count
from ddlift.errors import ConstructionError
from ddlift.generators import fano_design
from ddlift.guards import GuardExceeded, Limits
from ddlift.lifting import product_lift
from ddlift.verify import (
    check_axioms,
    check_hypersimple,
    fingerprint,
    is_transversal,
    lambda_histogram,
)


def test_is_transversal():
    class_of = [0, 0, 1, 1, 2]
    assert not is_transversal([0, 1], class_of)
    assert is_transversal([3], class_of)
    assert is_transversal([0, 2, 4], class_of)


def test_transversal_subset_count():
    assert transversal_subset_count([3] * 12, 5) == 192456
    assert transversal_subset_count([1] * 7, 2) == 21
    assert transversal_subset_count([2, 3], 2) == 6
    assert transversal_subset_count([2, 3], 3) == 0


def test_fano_passes():
    report = check_axioms(fano_design())
    assert report.passed
    assert report.measured == {"t": 2, "s": 1, "k": 3, "lambda": 1}
    assert report.counts == {"v": 7, "b": 7, "classes": 7, "transversal_subsets": 21}


def test_fano_missing_block_fails_with_witness():
    fano = fano_design()
    clipped = Design(
        fano.params, fano.points, fano.classes, fano.blocks[1:], provenance={"tampered": True}
    )
    report = check_axioms(clipped)
    assert not report.passed
    assert not report.axiom_c.passed
    assert "lies in 0 blocks" in report.axiom_c.witness
    assert lambda_histogram(clipped) == {0: 3, 1: 18}


def test_tampered_block_fails():
    fano = fano_design()
    blocks = [list(b) for b in fano.blocks]
    # swap one point of one block for a point off that line
    replacement = 6 if 6 not in blocks[0] else 5
    blocks[0] = sorted(set(blocks[0][:2]) | {replacement})
    tampered = Design(fano.params, fano.points, fano.classes, sorted(map(tuple, blocks)))
    report = check_axioms(tampered)
    assert not report.passed
    assert report.axiom_c.witness is not None


def test_wrong_declared_params_fail():
    fano = fano_design()
    wrong = Design(Params(2, 1, 3, 2), fano.points, fano.classes, fano.blocks)
    report = check_axioms(wrong)
    assert report.axiom_a.passed and report.axiom_c.passed
    assert not report.declared_match.passed
    assert not report.passed


def test_nonuniform_classes_fail():
    d = Design(
        Params(1, 2, 2, 1),
        range(4),
        [(0, 1, 2), (3,)],
        [(0, 3)],
    )
    report = check_axioms(d)
    assert not report.axiom_b.passed
    assert "class sizes" in report.axiom_b.witness


def test_nontransversal_block_fails():
    d = Design(
        Params(2, 2, 2, 1),
        range(4),
        [(0, 1), (2, 3)],
        [(0, 1)],
    )
    report = check_axioms(d)
    assert not report.axiom_a.passed
    assert "not class-transversal" in report.axiom_a.witness


def test_axiom_d_fail():
    d = Design(
        Params(3, 2, 2, 1),
        range(4),
        [(0, 1), (2, 3)],
        [(0, 2)],
    )
    report = check_axioms(d, t=3)
    assert not report.axiom_d.passed


def test_verify_guard():
    big = product_lift(fano_design(), 3)
    with pytest.raises(GuardExceeded):
        check_axioms(big, limits=Limits(max_subsets=10))


def test_histogram_mass(nrc_lift):
    hist = lambda_histogram(nrc_lift)
    assert hist == {1: 108}
    sizes = [len(c) for c in nrc_lift.classes]
    assert sum(hist.values()) == transversal_subset_count(sizes, nrc_lift.params.t)


def test_hypersimple_nrc(nrc_lift):
    ok, witness = check_hypersimple(nrc_lift, s_expected=1)
    assert ok and witness is None
    bad, witness = check_hypersimple(nrc_lift, s_expected=2)
    assert not bad and witness is not None


def test_hypersimple_product_fano():
    lifted = product_lift(fano_design(), 2)
    ok, _ = check_hypersimple(lifted, s_expected=2)
    assert ok
    bad, witness = check_hypersimple(lifted, s_expected=1)
    assert not bad and "closure" in witness


def test_hypersimple_requires_s():
    with pytest.raises(ValueError):
        check_hypersimple(fano_design())


def test_fingerprint_relabel_invariant():
    fano = fano_design()
    rng = random.Random(5)
    perm = list(range(7))
    rng.shuffle(perm)
    relabeled = Design(
        fano.params,
        tuple(range(7)),
        sorted(tuple(sorted(perm[p] for p in cls)) for cls in fano.classes),
        sorted(tuple(sorted(perm[p] for p in blk)) for blk in fano.blocks),
    )
    assert fingerprint(relabeled) == fingerprint(fano)


def test_fingerprint_separates_examples(w12_lift, gf3):
    from ddlift.generators import trivial_design
    from ddlift.lifting import LiftingContext, build_lifted_design
    from ddlift.witt import witt12_embedding

    base_b = trivial_design(gf3, witt12_embedding().points, 5)
    other = build_lifted_design(LiftingContext(base_b, 1))
    fp_a = fingerprint(w12_lift, Limits(max_subsets=10**9))
    fp_b = fingerprint(other)
    assert fp_a.v == fp_b.v == 36
    assert fp_a.s == fp_b.s == 3
    assert (fp_a.k, fp_a.lam) == (6, 1)
    assert (fp_b.k, fp_b.lam) == (12, 3)
    assert fp_a != fp_b


def test_fingerprint_different_v_certifies_nonisomorphism(nrc_base, nrc_lift):
    from ddlift.lifting import LiftingContext, build_lifted_design

    c2 = build_lifted_design(LiftingContext(nrc_base, 2))
    fp1 = fingerprint(nrc_lift)
    fp2 = fingerprint(c2)
    assert fp1.v == 12 and fp2.v == 36
    assert fp1 != fp2


def test_double_counting_identity(nrc_lift, w12_lift):
    from math import comb

    for design in (nrc_lift, w12_lift):
        t, s, k, lam = design.params
        total = transversal_subset_count([len(c) for c in design.classes], t)
        assert design.b * comb(k, t) == total * lam
