"""Witt design embeddings via the Golay codes."""

from collections import Counter
from itertools import combinations

import pytest

from ddlift.designs import Params
from ddlift.gf import GF
from ddlift.linalg import rank_rows
from ddlift.projective import is_independent
from ddlift.verify import check_axioms
from ddlift.witt import (
    BINARY_GOLAY_GENERATOR,
    TERNARY_GOLAY_GENERATOR,
    enumerate_codewords,
    weight_distribution,
)


def test_ternary_golay_weight_distribution(gf3):
    dist = weight_distribution(gf3, TERNARY_GOLAY_GENERATOR)
    assert dist == Counter({0: 1, 6: 264, 9: 440, 12: 24})


def test_binary_golay_weight_distribution(gf2):
    dist = weight_distribution(gf2, BINARY_GOLAY_GENERATOR)
    assert dist == Counter({0: 1, 8: 759, 12: 2576, 16: 759, 24: 1})


def test_witt12_embedding(w12, gf3):
    assert w12.v == 12
    assert w12.b == 132
    assert w12.beta == 5
    assert w12.params == Params(5, 1, 6, 1)
    assert rank_rows(gf3, w12.points) == 6
    assert all(len(b) == 6 for b in w12.blocks)
    # every block spans a hyperplane of PG(5,3)
    for blk in w12.blocks:
        assert rank_rows(gf3, [w12.points[i] for i in blk]) == 5


def test_witt12_all_5_subsets_independent(w12, gf3):
    count = 0
    for sub in combinations(range(12), 5):
        assert is_independent(gf3, [w12.points[i] for i in sub])
        count += 1
    assert count == 792


def test_witt12_verifies_as_design(w12):
    report = check_axioms(w12.to_design())
    assert report.passed
    assert report.measured == {"t": 5, "s": 1, "k": 6, "lambda": 1}
    assert report.counts["transversal_subsets"] == 792


def test_witt12_blocks_match_weight6_supports(w12, gf3):
    supports = {
        tuple(j for j, x in enumerate(word) if x)
        for word in enumerate_codewords(gf3, TERNARY_GOLAY_GENERATOR)
        if sum(1 for x in word if x) == 6
    }
    assert supports == set(w12.blocks)


def test_witt24_embedding(w24, gf2):
    assert w24.v == 24
    assert w24.beta == 7
    assert w24.params == Params(5, 1, 8, 1)
    assert rank_rows(gf2, w24.points) == 12
    assert all(len(b) == 8 for b in w24.blocks)
    # computed octad count; the literature count is 759 (not 758)
    assert w24.b == 759


def test_witt24_block_spans(w24, gf2):
    for blk in w24.blocks:
        assert rank_rows(gf2, [w24.points[i] for i in blk]) == 7


def test_witt24_verifies_as_design(w24):
    report = check_axioms(w24.to_design())
    assert report.passed
    assert report.counts["transversal_subsets"] == 42504
