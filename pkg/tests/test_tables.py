import pytest

from k3fib.errors import NotAllowedPartition, OutOfTable, UnsupportedN
from k3fib.tables import (ALLOWED_PARTITIONS, INF, SUPPORTED_N, ComponentEntry, Cusp, Elliptic,
                          Marker, ade_rank_sum, allowed_zero_partitions, canonical,
                          delta_correction, dump_tables, generic_fibre_singularities,
                          max_zero_column, orbifold_signature, zero_fibre_components)


def test_canonical():
    assert canonical([1, 3, 2]) == (3, 2, 1)


@pytest.mark.parametrize("n,q", [(2, 1), (3, 1), (4, 1), (5, 2), (6, 2), (7, 2), (8, 2),
                                 (9, 2), (11, 3)])
def test_q(n, q):
    assert orbifold_signature(n).q == q


def test_signatures():
    assert orbifold_signature(2).orbifold_type == (2, 4, INF)
    assert orbifold_signature(4).zero_point == Cusp(2)
    assert orbifold_signature(7).zero_point == Elliptic(3)
    assert orbifold_signature(7).lambda_labels == ("-1", "27")
    assert orbifold_signature(5).lambda_labels == ("22+10√5", "22-10√5")
    with pytest.raises(UnsupportedN):
        orbifold_signature(10)


def test_allowed():
    assert (4,) not in allowed_zero_partitions(2)
    assert (4, 4) in allowed_zero_partitions(2)
    assert (1,) not in allowed_zero_partitions(2)
    assert allowed_zero_partitions(11) == frozenset({(1, 1), (2,)})
    assert sum(len(v) for v in ALLOWED_PARTITIONS.values()) == 44


@pytest.mark.parametrize("n,y,count,marker", [
    (2, 1, 31, Marker.PLAIN), (5, 2, 1, Marker.STAR), (7, 3, 1, Marker.STAR_DAGGER),
    (11, 1, 1, Marker.DAGGER), (3, 6, 1, Marker.STAR_DAGGER), (4, 4, 6, Marker.STAR)])
def test_zero_fibre_cells(n, y, count, marker):
    assert zero_fibre_components(n, y) == ComponentEntry(count, marker)


def test_blank_cells():
    with pytest.raises(OutOfTable):
        zero_fibre_components(6, 3)
    assert max_zero_column(2) == 8 and max_zero_column(11) == 2


def test_marker_parse():
    e = ComponentEntry.parse("1*†")
    assert e.marker.star and e.marker.dagger and str(e) == "1*†"


@pytest.mark.parametrize("n,y,d", [(2, (3, 3), 2), (3, (5,), 1), (2, (1, 1), 0),
                                   (2, (7,), 2), (5, (4,), 1), (6, (2,), 0)])
def test_delta(n, y, d):
    assert delta_correction(n, y) == d


def test_delta_rejects():
    with pytest.raises(NotAllowedPartition):
        delta_correction(2, (4,))


def test_singularities():
    assert generic_fibre_singularities(2) == [("A3", 6)]
    assert generic_fibre_singularities(5) == [("A1", 3), ("D4", 3)]
    assert generic_fibre_singularities(11) == [("A1", 2), ("A2", 1), ("A3", 2)]
    assert ade_rank_sum(2) == 18


def test_dump_is_keyed_by_n():
    dump = dump_tables()
    for table in dump.values():
        assert set(table) == {str(n) for n in SUPPORTED_N}
