from fractions import Fraction

import pytest

from k3fib.covers import BranchData, enumerate_branch_data
from k3fib.errors import InternalInconsistency, NotAdmissible, NotSmooth
from k3fib.hodge import (FibreKind, Obstruction, classify, fano_anticanonical_degree, h11,
                         h21_formula, h21_monodromy, is_admissible, is_smooth, mirror_pairs,
                         singular_fibre_report, smooth_obstructions)
from k3fib.tables import SUPPORTED_N, ComponentEntry, Marker

B = BranchData
MAIN = B(2, 8, [8], [4, 4], [[1] * 8], 1)


def test_admissible():
    assert is_admissible(MAIN)
    assert not is_admissible(B(2, 4, [4], [4], [[1] * 4], 0))
    assert not is_admissible(B(10, 1, [1], [1], [], 0))
    assert not is_admissible(B(2, 8, [8], [4, 4], [[1] * 8], 3))


def test_obstructions():
    assert smooth_obstructions(B(7, 2, [2], [1, 1], [[1, 1], [1, 1]], 1)) == [Obstruction.N7]
    assert smooth_obstructions(B.solve(3, [6], [6], [[1] * 6])) == [Obstruction.N3_PROFILE_6]
    assert smooth_obstructions(B(5, 4, [4], [2, 2], [[1] * 4, [1] * 4], 1)) == []
    assert Obstruction.RAMIFIED_OVER_LAMBDA in smooth_obstructions(
        B(2, 2, [2], [1, 1], [[2]], 0))
    with pytest.raises(NotAdmissible):
        smooth_obstructions(B(2, 4, [4], [4], [[1] * 4], 0))


def test_h11_examples():
    assert h11(B(2, 2, [2], [1, 1], [[1, 1]], 1)) == 89
    assert h11(MAIN) == 149
    assert h11(B(5, 4, [4], [2, 2], [[1] * 4, [1] * 4], 1)) == 101


def test_h21_examples():
    assert h21_formula(MAIN) == 1
    assert h21_formula(B(2, 5, [5], [5], [[1] * 5], 0)) == 1
    n11 = B(11, 2, [2], [2], [[1, 1]] * 3, 0)
    with pytest.raises(NotSmooth):
        h21_formula(n11)
    assert h21_formula(n11, allow_singular=True) == 0
    assert h21_monodromy(n11, allow_singular=True) == 0


def test_h21_monodromy_examples():
    assert h21_monodromy(MAIN) == 1
    assert h21_monodromy(B(2, 6, [6], [3, 3], [[1] * 6], 1)) == 3


def test_classify_main():
    rec = classify(MAIN)
    assert (rec.h11, rec.h21, rec.b3, rec.euler) == (149, 1, 4, 296)
    assert rec.smooth and rec.admissible and rec.delta == 0


def test_classify_n7():
    rec = classify(B(7, 2, [2], [1, 1], [[1, 1], [1, 1]], 1))
    assert rec.admissible and not rec.smooth and rec.h11 is None
    nodes = [f for f in rec.fibre_reports if f.point == "λ=-1"]
    assert nodes and all(f.detail == "A2 point + threefold node" for f in nodes)


def test_classify_non_admissible():
    rec = classify(B(2, 4, [4], [4], [[1] * 4], 0))
    assert not rec.admissible and rec.reasons and rec.h21 is None


def test_fibre_reports():
    reps = singular_fibre_report(B(3, 2, [2], [1, 1], [[1, 1]], 1))
    assert any(f.kind is FibreKind.TYPE_III and f.components == 14 for f in reps)
    reps = singular_fibre_report(B(5, 4, [4], [2, 2], [[1] * 4, [1] * 4], 1))
    zero = [f for f in reps if f.point == "0"]
    assert zero[0].kind is FibreKind.ZERO_FIBRE
    assert zero[0].entry == ComponentEntry(1, Marker.STAR)
    assert "smooth K3" in zero[0].detail
    reps = singular_fibre_report(B(11, 2, [1, 1], [2], [[2], [1, 1], [1, 1]], 0))
    term = [f for f in reps if f.kind is FibreKind.TERMINAL_POINT]
    assert [f.singularity for f in term] == ["cA_1"]
    reps = singular_fibre_report(B(7, 2, [1, 1], [2], [[2], [1, 1]], 0))
    assert [f.singularity for f in reps if f.kind is FibreKind.TERMINAL_POINT] == ["cA_3"]


@pytest.mark.parametrize("n", SUPPORTED_N)
def test_routes_agree_and_b3(n):
    for b in enumerate_branch_data(n, 8, require_smooth=True):
        if not is_smooth(b):
            continue
        rec = classify(b)
        assert rec.b3 >= 2 and rec.b3 % 2 == 0
        assert rec.euler == 2 * (rec.h11 - rec.h21)
        if rec.delta == 0:
            assert rec.h21 == b.r_extra


def test_no_dagger_cell_for_smooth():
    for n in SUPPORTED_N:
        for b in enumerate_branch_data(n, 8, require_smooth=True):
            if is_smooth(b):
                h11(b)  # raises InternalInconsistency on a dagger cell


def test_route_disagreement_is_loud(monkeypatch):
    import k3fib.hodge as hodge
    monkeypatch.setattr(hodge, "h21_monodromy", lambda b: 99)
    with pytest.raises(InternalInconsistency):
        hodge.classify(MAIN)


def test_mirror_pairs():
    assert mirror_pairs() == [(2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2),
                              (5, 1), (5, 2), (6, 1), (7, 1), (8, 1), (9, 1), (11, 1)]
    small = mirror_pairs(2)
    assert (2, 1) in small and (3, 1) in small and set(small) <= set(mirror_pairs())


def test_fano_degree():
    assert fano_anticanonical_degree(64, 4) == 2
    assert fano_anticanonical_degree(54, 3) == 3
    assert fano_anticanonical_degree(2, 1) == 1
    assert fano_anticanonical_degree(3, 1) == Fraction(3, 2)
