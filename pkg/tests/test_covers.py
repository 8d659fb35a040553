import pytest
from hypothesis import given, settings, strategies as st

from k3fib.covers import (BranchData, dedup_lambda, enumerate_branch_data, hurwitz_defect,
                          partitions_of, realizable)
from k3fib.errors import InvalidInput, NonZeroDefect, UnsupportedN
from k3fib.tables import SUPPORTED_N, orbifold_signature


def test_partitions():
    assert partitions_of(4) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert len(partitions_of(8)) == 22


@pytest.mark.parametrize("b,defect", [
    (BranchData(2, 1, [1], [1], [[1]], 0), 0),
    (BranchData(2, 8, [8], [4, 4], [[1] * 8], 1), 0),
    (BranchData(5, 2, [2], [1, 1], [[1, 1], [2]], 0), 0),
    (BranchData(2, 8, [8], [4, 4], [[1] * 8], 3), -2),
])
def test_hurwitz_defect(b, defect):
    assert hurwitz_defect(b) == defect


def test_validation():
    with pytest.raises(InvalidInput):
        BranchData(2, 3, [2], [1, 1, 1], [[1, 1, 1]], 0)
    with pytest.raises(InvalidInput):
        BranchData(5, 1, [1], [1], [[1]], 0)
    with pytest.raises(NonZeroDefect):
        BranchData.solve(2, [2], [2], [[2]])
    b = BranchData.solve(2, [8], [4, 4], [[1] * 8])
    assert b.r_extra == 1 and b.part_zero == (4, 4)
    assert BranchData(2, 3, [1, 2], [2, 1], [[1, 1, 1]], 0).part_infinity == (2, 1)


def test_enumeration_examples():
    smooth2 = enumerate_branch_data(2, 2, require_smooth=True)
    assert BranchData(2, 2, [2], [1, 1], [[1, 1]], 1) in smooth2
    smooth5 = enumerate_branch_data(5, 4, require_smooth=True)
    assert BranchData(5, 4, [4], [2, 2], [[1] * 4, [1] * 4], 1) in smooth5


@pytest.mark.parametrize("n", SUPPORTED_N)
def test_degree_one_enumeration(n):
    # [1] never appears among the allowed zero profiles, so degree one gives nothing
    assert enumerate_branch_data(n, 1) == []
    assert enumerate_branch_data(n, 1, require_smooth=True) == []


@pytest.mark.parametrize("n", SUPPORTED_N)
def test_enumeration_invariants(n):
    data = enumerate_branch_data(n, 5)
    q = orbifold_signature(n).q
    assert data == sorted(data, key=BranchData.sort_key)
    assert len(set(data)) == len(data)
    for b in data:
        assert b.hurwitz_defect == 0
        assert (b.m_odd - q * b.d) % 2 == 0
        assert b.r_extra >= 0


def test_r_max_and_dedup():
    full = enumerate_branch_data(5, 4)
    capped = enumerate_branch_data(5, 4, r_max=0)
    assert capped and all(b.r_extra == 0 for b in capped) and len(capped) < len(full)
    dedup = enumerate_branch_data(5, 4, lambda_unordered=True)
    assert len(dedup) < len(full)
    assert dedup == dedup_lambda(full)
    keys = {(b.part_infinity, b.part_zero, tuple(sorted(b.part_lambda))) for b in full}
    assert len(keys) == len(dedup)


def test_unsupported():
    with pytest.raises(UnsupportedN):
        enumerate_branch_data(10, 3)


def test_realizable_examples():
    w = realizable(BranchData(2, 1, [1], [1], [[1]], 0))
    assert w is not None and w.degree == 1
    w = realizable(BranchData(2, 2, [2], [1, 1], [[2]], 0))
    assert w is not None
    perms = dict(w.entries)
    assert perms["∞"] == (1, 0) and perms["λ=256"] == (1, 0)
    with pytest.raises(NonZeroDefect):
        realizable(BranchData(2, 8, [8], [4, 4], [[1] * 8], 3))


def test_non_realizable_datum():
    assert realizable(BranchData(2, 4, [3, 1], [2, 2], [[2, 2]], 0)) is None


@pytest.mark.parametrize("n", SUPPORTED_N)
def test_smooth_data_realizable(n):
    for b in enumerate_branch_data(n, 6, require_smooth=True):
        w = realizable(b)
        assert w is not None and w.verify()
        assert sum(1 for label, _ in w.entries if label.startswith("r")) == b.r_extra


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SUPPORTED_N), st.integers(min_value=2, max_value=6), st.data())
def test_witness_cycle_types(n, d, data):
    pool = enumerate_branch_data(n, d)
    pool = [b for b in pool if b.d == d] or pool
    if not pool:
        return
    b = data.draw(st.sampled_from(pool))
    w = realizable(b)
    if w is not None:
        entries = dict(w.entries)
        assert len(w.entries) == 2 + b.q + b.r_extra
        from k3fib.permsearch import cycle_type
        assert cycle_type(entries["∞"]) == b.part_infinity
        assert cycle_type(entries["0"]) == b.part_zero
