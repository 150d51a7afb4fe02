"""Ground-truth checking of divisible designs by exhaustive counting.

The counting axiom is verified block-first: every block emits its C(k,t)
t-subsets into a counter, then a coverage pass confirms that every
class-transversal t-subset was hit the same number of times.  When all
classes share one size the counter is a dense array indexed by a mixed
radix rank (class combination rank times within-class choices); otherwise a
dictionary is used.  Failures always carry a concrete witness.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product
from math import comb
from typing import Sequence

from .designs import Design, transversal_subset_count
from .guards import DEFAULT_LIMITS, Limits, check


class AxiomResult:
    __slots__ = ("passed", "witness")

    def __init__(self, passed: bool, witness: str | None = None):
        self.passed = passed
        self.witness = witness

    def to_dict(self) -> dict:
        out: dict = {"passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def __repr__(self) -> str:
        return f"AxiomResult({self.passed}, {self.witness!r})"


class VerificationReport:
    """Outcome of the axiom checks plus the measured parameters."""

    __slots__ = ("axiom_a", "axiom_b", "axiom_c", "axiom_d", "measured", "counts", "declared_match", "passed")

    def __init__(self, axiom_a, axiom_b, axiom_c, axiom_d, measured: dict, counts: dict, declared_match: AxiomResult):
        self.axiom_a = axiom_a
        self.axiom_b = axiom_b
        self.axiom_c = axiom_c
        self.axiom_d = axiom_d
        self.measured = measured
        self.counts = counts
        self.declared_match = declared_match
        self.passed = all(r.passed for r in (axiom_a, axiom_b, axiom_c, axiom_d, declared_match))

    def to_dict(self) -> dict:
        return {
            "axiom_A": self.axiom_a.to_dict(),
            "axiom_B": self.axiom_b.to_dict(),
            "axiom_C": self.axiom_c.to_dict(),
            "axiom_D": self.axiom_d.to_dict(),
            "declared_match": self.declared_match.to_dict(),
            "measured": self.measured,
            "counts": self.counts,
            "passed": self.passed,
        }


def is_transversal(subset: Sequence[int], class_of: Sequence[int]) -> bool:
    """True when no class contributes two points to the subset."""
    seen = set()
    for p in subset:
        ci = class_of[p]
        if ci in seen:
            return False
        seen.add(ci)
    return True


class _TransversalCounter:
    """Counts block coverage of transversal t-subsets over a class list."""

    def __init__(self, classes: Sequence[Sequence[int]], class_of: Sequence[int], t: int, limits: Limits):
        self.classes = classes
        self.class_of = class_of
        self.t = t
        sizes = [len(c) for c in classes]
        self.total = transversal_subset_count(sizes, t)
        check("transversal subset count", self.total, limits.max_subsets)
        self.uniform = len(set(sizes)) == 1 and bool(sizes)
        if self.uniform:
            self.s = sizes[0]
            n = len(classes)
            self.offset_of = {}
            for cls in classes:
                for pos, p in enumerate(cls):
                    self.offset_of[p] = pos
            # binom[x][j] = C(n-1-x, t-1-j), precomputed for the lex rank loop
            self.n = n
            self.counts: list[int] | dict = [0] * self.total
        else:
            self.counts = {}

    def _rank(self, pairs: Sequence[tuple[int, int]]) -> int:
        """Lex rank of the class combination, then within-class mixed radix."""
        t, n, s = self.t, self.n, self.s
        rank = 0
        prev = -1
        for i, (ci, _) in enumerate(pairs):
            for x in range(prev + 1, ci):
                rank += comb(n - 1 - x, t - 1 - i)
            prev = ci
        for _, off in pairs:
            rank = rank * s + off
        return rank

    def _unrank(self, rank: int) -> tuple[int, ...]:
        t, n, s = self.t, self.n, self.s
        offs = []
        for _ in range(t):
            rank, off = divmod(rank, s)
            offs.append(off)
        offs.reverse()
        combo = []
        x = 0
        j = 0
        while j < t:
            c = comb(n - 1 - x, t - 1 - j)
            if rank < c:
                combo.append(x)
                j += 1
            else:
                rank -= c
            x += 1
        return tuple(sorted(self.classes[ci][off] for ci, off in zip(combo, offs)))

    def add_block(self, block: Sequence[int]) -> None:
        class_of = self.class_of
        pts = sorted(block, key=class_of.__getitem__)
        if self.uniform:
            offset_of = self.offset_of
            counts = self.counts
            for sub in combinations(pts, self.t):
                pairs = [(class_of[p], offset_of[p]) for p in sub]
                counts[self._rank(pairs)] += 1
        else:
            counts = self.counts
            for sub in combinations(sorted(block), self.t):
                counts[sub] = counts.get(sub, 0) + 1

    def histogram(self) -> dict[int, int]:
        if self.uniform:
            hist = Counter(self.counts)
        else:
            hist = Counter(self.counts.values())
            hist[0] += self.total - len(self.counts)
            if hist[0] == 0:
                del hist[0]
        return dict(hist)

    def witness_not_equal(self, lam: int) -> str | None:
        """A transversal subset whose block count differs from lam."""
        if self.uniform:
            for idx, cnt in enumerate(self.counts):
                if cnt != lam:
                    return f"transversal subset {list(self._unrank(idx))} lies in {cnt} blocks, not {lam}"
        else:
            for sub, cnt in self.counts.items():
                if cnt != lam:
                    return f"transversal subset {list(sub)} lies in {cnt} blocks, not {lam}"
            if lam != 0 and self.total > len(self.counts):
                for sub in _iter_transversal(self.classes, self.t):
                    if sub not in self.counts:
                        return f"transversal subset {list(sub)} lies in 0 blocks, not {lam}"
        return None


def _iter_transversal(classes: Sequence[Sequence[int]], t: int):
    for combo in combinations(range(len(classes)), t):
        for choice in product(*(classes[ci] for ci in combo)):
            yield tuple(sorted(choice))


def check_axioms(design: Design, t: int | None = None, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    """Verify the four divisible design axioms by exhaustive counting."""
    t = design.params.t if t is None else t
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    class_of = design.class_index()
    v, b = design.v, design.b

    # (A) blocks are transversal and share one size
    sizes = {len(blk) for blk in design.blocks}
    axiom_a = AxiomResult(True)
    if len(sizes) > 1:
        axiom_a = AxiomResult(False, f"block sizes are not constant: {sorted(sizes)}")
    else:
        for bi, blk in enumerate(design.blocks):
            if not is_transversal(blk, class_of):
                axiom_a = AxiomResult(False, f"block {bi} = {list(blk)} is not class-transversal")
                break
    k = sizes.pop() if len(sizes) == 1 else None

    # (B) classes share one size
    class_sizes = {len(c) for c in design.classes}
    if len(class_sizes) == 1:
        s = class_sizes.pop()
        axiom_b = AxiomResult(True)
    else:
        s = None
        axiom_b = AxiomResult(False, f"class sizes are not constant: {sorted(class_sizes)}")

    # (C) constant block count over all transversal t-subsets
    counter = _TransversalCounter(design.classes, class_of, t, limits)
    if k is not None:
        check("block subset emission", b * comb(k, t), limits.max_subsets)
    for blk in design.blocks:
        counter.add_block(blk)
    hist = counter.histogram()
    if counter.total == 0:
        axiom_c = AxiomResult(False, f"no transversal {t}-subsets exist")
        lam = None
    elif len(hist) == 1:
        lam = next(iter(hist))
        if lam >= 1:
            axiom_c = AxiomResult(True)
        else:
            axiom_c = AxiomResult(False, f"no block contains any transversal {t}-subset")
    else:
        lam = None
        common = max(hist.items(), key=lambda kv: kv[1])[0]
        axiom_c = AxiomResult(False, counter.witness_not_equal(common))

    # (D) t <= v / s
    s_eff = s if s is not None else max(class_sizes, default=0)
    if s_eff and t * s_eff <= v:
        axiom_d = AxiomResult(True)
    else:
        axiom_d = AxiomResult(False, f"t={t} exceeds v/s = {v}/{s_eff}")

    measured = {"t": t, "s": s, "k": k, "lambda": lam if lam is not None else hist}
    counts = {
        "v": v,
        "b": b,
        "classes": len(design.classes),
        "transversal_subsets": counter.total,
    }
    declared = design.params
    if (t, s, k, lam) == (declared.t, declared.s, declared.k, declared.lam):
        declared_match = AxiomResult(True)
    else:
        declared_match = AxiomResult(
            False,
            f"measured (t,s,k,lambda)=({t},{s},{k},{lam}) differs from declared {tuple(declared)}",
        )
    report = VerificationReport(axiom_a, axiom_b, axiom_c, axiom_d, measured, counts, declared_match)
    if report.passed and lam is not None and k is not None:
        # double counting sanity: every pass must satisfy b*C(k,t) = T*lambda
        if b * comb(k, t) != counter.total * lam:
            raise AssertionError("double counting identity violated; internal error")
    return report


def lambda_histogram(design: Design, t: int | None = None, limits: Limits = DEFAULT_LIMITS) -> dict[int, int]:
    """Map block-count -> number of transversal t-subsets with that count."""
    t = design.params.t if t is None else t
    class_of = design.class_index()
    counter = _TransversalCounter(design.classes, class_of, t, limits)
    for blk in design.blocks:
        counter.add_block(blk)
    return counter.histogram()


def check_hypersimple(
    design: Design, t: int | None = None, s_expected: int | None = None, limits: Limits = DEFAULT_LIMITS
) -> tuple[bool, str | None]:
    """Check the closure-refined counting property.

    For every block B with class closure B* (union of the classes B meets)
    and every transversal t-subset Y of B*, exactly s_expected blocks
    through Y have closure B*.  Blocks are grouped by closure and each
    group is counted like a small design on its own classes.
    """
    t = design.params.t if t is None else t
    if s_expected is None:
        raise ValueError("s_expected is required")
    class_of = design.class_index()
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for blk in design.blocks:
        key = tuple(sorted({class_of[p] for p in blk}))
        groups.setdefault(key, []).append(blk)
    for key, blocks in groups.items():
        local_classes = [design.classes[ci] for ci in key]
        local_of = dict(class_of_restricted(local_classes))
        counter = _TransversalCounter(
            local_classes, _ListView(local_of), t, limits
        )
        for blk in blocks:
            counter.add_block(blk)
        hist = counter.histogram()
        if set(hist) != {s_expected}:
            witness = counter.witness_not_equal(s_expected)
            return False, f"closure over classes {list(key)}: {witness}"
    return True, None


def class_of_restricted(local_classes: Sequence[Sequence[int]]):
    for ci, cls in enumerate(local_classes):
        for p in cls:
            yield p, ci


class _ListView:
    """Minimal mapping with list-style __getitem__ over a dict of point ids."""

    __slots__ = ("data",)

    def __init__(self, data: dict):
        self.data = data

    def __getitem__(self, p: int) -> int:
        return self.data[p]


class Fingerprint:
    """Isomorphism-invariant summary; differing fingerprints certify non-isomorphism."""

    __slots__ = ("v", "b", "s", "k", "lam", "block_sizes", "intersection_dist", "class_incidence")

    def __init__(self, v, b, s, k, lam, block_sizes, intersection_dist, class_incidence):
        self.v = v
        self.b = b
        self.s = s
        self.k = k
        self.lam = lam
        self.block_sizes = block_sizes
        self.intersection_dist = intersection_dist
        self.class_incidence = class_incidence

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "b": self.b,
            "s": self.s,
            "k": self.k,
            "lambda": self.lam,
            "block_sizes": [list(p) for p in self.block_sizes],
            "intersection_distribution": [list(p) for p in self.intersection_dist],
            "class_incidence_distribution": list(self.class_incidence),
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, Fingerprint) and self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self.v, self.b, self.s, self.k, self.lam, self.block_sizes, self.intersection_dist, self.class_incidence))

    def __repr__(self) -> str:
        return f"Fingerprint({self.to_dict()})"


def fingerprint(design: Design, limits: Limits = DEFAULT_LIMITS) -> Fingerprint:
    """Parameters plus block-size, pairwise-intersection and class-incidence distributions."""
    b = design.b
    check("block pair scan", b * (b - 1) // 2, limits.max_subsets)
    sizes = Counter(len(blk) for blk in design.blocks)
    sets = [frozenset(blk) for blk in design.blocks]
    inter = Counter()
    for i in range(b):
        si = sets[i]
        for j in range(i + 1, b):
            inter[len(si & sets[j])] += 1
    point_blocks: dict[int, set[int]] = {}
    for bi, blk in enumerate(design.blocks):
        for p in blk:
            point_blocks.setdefault(p, set()).add(bi)
    incidence = []
    for cls in design.classes:
        touching: set[int] = set()
        for p in cls:
            touching |= point_blocks.get(p, set())
        incidence.append(len(touching))
    t, s, k, lam = design.params
    return Fingerprint(
        design.v,
        b,
        s,
        k,
        lam,
        tuple(sorted(sizes.items())),
        tuple(sorted(inter.items())),
        tuple(sorted(incidence)),
    )
