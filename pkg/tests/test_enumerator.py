import pytest
from hypothesis import given, strategies as st

from sixregular import enumerator as E
from sixregular.enumerator import Partition, PartitionConstraint

Q2_14_TRUE = {(13, 1), (11, 3), (9, 5), (7, 6, 1), (6, 5, 3)}
M3_18 = {(5, 5, 5, 2, 1), (6, 5, 4, 2, 1), (7, 4, 4, 2, 1)}
P2_17 = {
    (5, 3, 3, 3, 2, 1), (4, 4, 4, 2, 2, 1), (4, 4, 4, 2, 1, 1, 1),
    (4, 3, 3, 3, 2, 1, 1), (3, 3, 3, 3, 2, 2, 1), (3, 3, 3, 3, 2, 1, 1, 1),
    (3, 3, 3, 2, 2, 2, 1, 1), (3, 3, 3, 2, 2, 1, 1, 1, 1), (3, 3, 3, 2, 1, 1, 1, 1, 1, 1),
}


def test_partition_normalises():
    assert Partition([1, 3, 3]) == (3, 3, 1)
    assert Partition([2, 2]).multiplicities() == {2: 2}
    with pytest.raises(ValueError):
        Partition([0, 1])


def test_surgery():
    lam = Partition([6, 3, 3])
    assert lam.divide_by(3) == (2, 1, 1)
    assert lam.divide_by(3).multiply_by(3) == lam
    assert lam.split(lambda x: x % 2 == 0) == ((6,), (3, 3))
    with pytest.raises(ValueError):
        Partition([4, 3]).divide_by(3)


def test_lexicographic_order():
    assert E.enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_q2_listing_at_14():
    got = E.enumerate_partitions(14, E.NAMED["q2"])
    assert len(got) == 5 and set(got) == Q2_14_TRUE


def test_mk_pk_witnesses():
    assert set(E.list_mk(3, 18)) == M3_18
    assert set(E.list_pk(2, 17)) == P2_17


@given(st.integers(0, 25))
def test_count_agrees_with_listing(n):
    for name in ("p", "b6", "q2", "q2prime", "b6ee", "b6o", "c", "lt6"):
        c = E.NAMED[name]
        assert E.count(n, c) == len(E.enumerate_partitions(n, c))


@given(st.integers(0, 25))
def test_glaisher_type_identities(n):
    assert E.count(n, E.NAMED["b6"]) == E.count(n, E.NAMED["lt6"])
    assert E.count(n, E.NAMED["odd"]) == E.count(n, E.NAMED["distinct"])


def test_q61_w61():
    for n in range(0, 120):
        q, w = E.cardinality_q61_w61(n)
        assert q == w, n


def test_constraint_validation():
    with pytest.raises(ValueError):
        PartitionConstraint(forbidden_residues=frozenset({(0, 2)}), allowed_residues=frozenset({(1, 2)}))
    with pytest.raises(ValueError):
        PartitionConstraint(length_parity="maybe")
    with pytest.raises(ValueError):
        E.named_constraint("nope")
    with pytest.raises(ValueError):
        E.enumerate_partitions(-1)


def test_mk_pk_definitions():
    assert E.is_mk((5, 5, 5, 2, 1), 3)
    assert not E.is_mk((3, 2, 1), 3)
    assert E.is_pk((2, 2, 1), 1)
    assert not E.is_pk((1, 1), 1)  # no part above k at all
