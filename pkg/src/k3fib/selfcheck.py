"""Consistency suites over the embedded data and the computed invariants.

Each suite returns a ``SuiteResult``; ``run_all`` drives them for the
``check`` subcommand.  Table-driven suites take an optional replacement
table so that a corrupted copy can be checked in tests.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .covers import BranchData, enumerate_branch_data, partitions_of, realizable
from .hodge import classify, h21_formula, h21_monodromy, is_smooth, mirror_pairs
from .lattice import (IOTA, conj_fricke, det3, discriminant_group, dolgachev_map,
                      is_isometry, matmul, mn_perp)
from .modular import genus_x0, genus_x0_plus, h1_invariant
from .monodromy import h1_rank, profile_preserving_covers, vplus_system
from .permsearch import realizable_cycle_types
from .tables import (SUPPORTED_N, ZERO_FIBRE_TABLE, allowed_zero_partitions,
                     ade_rank_sum, max_zero_column)

GENUS_ZERO_X0 = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25)
RATIONAL_PLUS_EXTRA = (11, 14, 15, 17, 19, 20, 21, 23, 24, 26, 27, 29, 31, 32, 35, 36,
                       39, 41, 47, 49, 50, 59, 71)
H1_ZERO = (2, 3, 4, 5, 6, 7, 8, 9, 11)
H1_TWO = (10, 12, 13, 14, 15, 16, 17, 19, 23)
MIRROR_PAIRS = ((2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1),
                (5, 2), (6, 1), (7, 1), (8, 1), (9, 1), (11, 1))


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, message: str):
        self.checked += 1
        if not ok:
            self.failures.append(message)

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failed": len(self.failures), "failures": self.failures[:20]}


def _rational_plus(limit: int = 100) -> list:
    return [n for n in range(2, limit + 1) if genus_x0_plus(n) == 0]


def h1_census() -> SuiteResult:
    res = SuiteResult("h1-census")
    plus = [n for n in _rational_plus(100)]
    zero = sorted(n for n in plus if h1_invariant(n) == 0)
    two = sorted(n for n in plus if h1_invariant(n) == 2)
    res.expect(tuple(zero) == H1_ZERO, f"h1 = 0 on {zero}")
    res.expect(tuple(two) == H1_TWO, f"h1 = 2 on {two}")
    return res


def genus_lists() -> SuiteResult:
    res = SuiteResult("genus-lists")
    zero = tuple(n for n in range(1, 101) if genus_x0(n) == 0)
    res.expect(zero == GENUS_ZERO_X0, f"genus 0 for n <= 100 on {zero}")
    for n in RATIONAL_PLUS_EXTRA:
        res.expect(genus_x0_plus(n) == 0, f"X_0({n})^+ has genus {genus_x0_plus(n)}")
    return res


def monodromy_consistency() -> SuiteResult:
    res = SuiteResult("monodromy-consistency")
    for n in SUPPORTED_N:
        total = sum(vplus_system(n).R_values())
        res.expect(total == 6, f"sum R = {total} for n={n}")
    for n in range(5, 31):
        if genus_x0_plus(n) == 0:
            a, b = h1_rank(vplus_system(n)), h1_invariant(n)
            res.expect(a == b, f"n={n}: rank {a} vs invariant {b}")
    return res


def route_agreement(d_max: int = 8, k_max: int = 8) -> SuiteResult:
    res = SuiteResult("route-agreement")
    for n in SUPPORTED_N:
        for b in enumerate_branch_data(n, d_max, require_smooth=True):
            if b.k > k_max or not is_smooth(b):
                continue
            f, m = h21_formula(b), h21_monodromy(b)
            res.expect(f == m, f"{b}: formula {f}, monodromy {m}")
            b3 = 2 * (f + 1)
            res.expect(b3 >= 2 and b3 % 2 == 0, f"{b}: b3 = {b3}")
    return res


def mirror_pair_suite() -> SuiteResult:
    res = SuiteResult("mirror-pairs")
    got = tuple(mirror_pairs())
    for pair in MIRROR_PAIRS:
        res.expect(pair in got, f"missing {pair}")
    res.expect(len(got) == len(MIRROR_PAIRS), f"{len(got)} pairs instead of 15")
    return res


def _merge_pairs():
    """Matched (before, after) data for each listed degeneration."""
    out = []

    def smooth(n, x, y):
        d = sum(x)
        return BranchData.solve(n, x, y, [(1,) * d] * len(_lams(n)))

    for a in (5, 6, 7, 8):
        for x in partitions_of(a):
            out.append((smooth(2, x, (a,)), smooth(2, x, (4, a - 4))))
    for x in partitions_of(5):
        out.append((smooth(3, x, (5,)), smooth(3, x, (3, 2))))
    for a in (3, 4):
        for x in partitions_of(a):
            out.append((smooth(5, x, (a,)), smooth(5, x, (a - 2, 2))))
    for a in (1, 2, 3, 4):
        for x in partitions_of(3 + a):
            out.append((smooth(2, x, (3, a)), smooth(2, (1,) + x, (4, a))))
    return out


def _lams(n):
    from .tables import orbifold_signature
    return orbifold_signature(n).lambda_labels


def degeneration_invariance() -> SuiteResult:
    res = SuiteResult("degeneration-invariance")
    for before, after in _merge_pairs():
        h_before = classify(before).h21
        h_after = classify(after).h21
        res.expect(h_before is not None and h_before == h_after,
                   f"{before} -> {after}: {h_before} vs {h_after}")
    return res


def _random_sl2(rng: random.Random, steps: int = 12):
    m = ((1, 0), (0, 1))
    gens = (((1, 1), (0, 1)), ((1, -1), (0, 1)), ((0, -1), (1, 0)))
    for _ in range(steps):
        g = rng.choice(gens)
        m = ((m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]),
             (m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]))
    return m


def lattice_suite(samples: int = 100, seed: int = 20240601) -> SuiteResult:
    res = SuiteResult("lattice")
    for n in range(2, 51):
        group = discriminant_group(mn_perp(n))
        res.expect(group.invariant_factors == (2 * n,), f"A(M_{n}^perp) = {group}")
    rng = random.Random(seed)
    for n in range(2, 12):
        for _ in range(samples):
            g1, g2 = _random_sl2(rng), _random_sl2(rng)
            a1, a2 = dolgachev_map(g1, n), dolgachev_map(g2, n)
            g12 = tuple(tuple(sum(g1[i][k] * g2[k][j] for k in range(2)) for j in range(2))
                        for i in range(2))
            res.expect(dolgachev_map(g12, n) == matmul(a1, a2), f"homomorphism fails at n={n}")
            res.expect(is_isometry(a1, n), f"isometry fails at n={n}")
            res.expect(det3(a1) == 1, f"det != 1 at n={n}")
        res.expect(dolgachev_map(conj_fricke(n), n) == [list(r) for r in IOTA],
                   f"A(conjugated Fricke) != iota at n={n}")
    return res


def realizability_suite(d_max: int = 6) -> SuiteResult:
    res = SuiteResult("realizability")
    for n in SUPPORTED_N:
        for b in enumerate_branch_data(n, d_max):
            w = realizable(b)
            res.expect(w is not None, f"no permutation tuple for {b}")
    return res


def lemma_suite(d_max: int = 4) -> SuiteResult:
    res = SuiteResult("lemmas")
    for n in (5, 6, 8, 9, 11):
        found = profile_preserving_covers(vplus_system(n), d_max)
        res.expect(not found, f"n={n}: {len(found)} profile-preserving covers")
    res.expect(realizable_cycle_types([(2, 2), (2, 2), (3, 1)], 4) is None,
               "[2,2],[2,2],[3,1] realized in degree 4")
    return res


def type_iii_law(table=None) -> SuiteResult:
    table = ZERO_FIBRE_TABLE if table is None else table
    res = SuiteResult("type-iii-law")
    for n in (6, 8, 9):
        c1, c2 = table[n][1].count, table[n][2].count
        res.expect(c2 == (c1 - 2) * 4 + 2, f"n={n}: c(2) = {c2}, c(1) = {c1}")
    c2, c4 = table[4][2].count, table[4][4].count
    res.expect(c4 == (c2 - 2) * 4 + 2, f"n=4: c(4) = {c4}, c(2) = {c2}")
    return res


def zero_fibre_periodicity(table=None) -> SuiteResult:
    table = ZERO_FIBRE_TABLE if table is None else table
    res = SuiteResult("zero-fibre-periodicity")
    for n, period, upto in ((2, 4, 4), (3, 3, 2), (5, 2, 2)):
        for y in range(1, upto + 1):
            a, b = table[n][y].count, table[n][y + period].count
            res.expect(a == b, f"n={n}: c({y}) = {a} but c({y + period}) = {b}")
    return res


def ade_rank_18() -> SuiteResult:
    res = SuiteResult("ade-rank-18")
    for n in SUPPORTED_N:
        total = ade_rank_sum(n)
        res.expect(total == 18, f"n={n}: ADE ranks sum to {total}")
    return res


def column_coverage(table=None) -> SuiteResult:
    res = SuiteResult("profile-coverage")
    for n in SUPPORTED_N:
        top = max_zero_column(n, table)
        for p in allowed_zero_partitions(n):
            res.expect(max(p) <= top, f"n={n}: part {max(p)} beyond column {top}")
    return res


SUITES = {
    "h1-census": h1_census,
    "genus-lists": genus_lists,
    "monodromy-consistency": monodromy_consistency,
    "route-agreement": route_agreement,
    "mirror-pairs": mirror_pair_suite,
    "degeneration-invariance": degeneration_invariance,
    "lattice": lattice_suite,
    "realizability": realizability_suite,
    "lemmas": lemma_suite,
    "type-iii-law": type_iii_law,
    "zero-fibre-periodicity": zero_fibre_periodicity,
    "ade-rank-18": ade_rank_18,
    "profile-coverage": column_coverage,
}


def run_all(names=None) -> list:
    names = list(SUITES) if names is None else list(names)
    return [SUITES[name]() for name in names]
