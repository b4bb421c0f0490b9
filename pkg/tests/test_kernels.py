import numpy as np
import pytest
from hypothesis import given, strategies as st

from sixregular import enumerator as E, kernels as K
from sixregular.enumerator import Partition

# p(200) is MacMahon's hand-computed value, independent of any code here
P200 = 3972999029388
B6_HEAD = [1, 1, 2, 3, 5, 7, 10, 14, 20, 27, 37, 49, 65, 85, 111, 143]


def test_p_known_values():
    p = K.p_table(200)
    assert list(p.values[:11]) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert p(200) == P200


def test_b6_head_and_fixture():
    b6 = K.b6_table(15)
    assert list(b6.values) == B6_HEAD
    assert b6(7) == 14


@pytest.mark.parametrize("name", ["p", "b6", "q2"])
def test_methods_agree(name):
    tabs = [K.table(name, 2000, m) for m in K.METHODS[name]]
    assert all(t.values == tabs[0].values for t in tabs[1:])


def test_refinements_at_7():
    got = {n: K.refinement_table(n, 7)(7) for n in ("b6e", "b6o", "b6ee", "b6eo")}
    assert got == {"b6e": 6, "b6o": 8, "b6ee": 8, "b6eo": 6}


def test_out_of_range_and_negative():
    t = K.p_table(5)
    assert t(-3) == 0
    with pytest.raises(IndexError):
        t(6)


def test_unknown_names():
    with pytest.raises(ValueError):
        K.table("nope", 5)
    with pytest.raises(ValueError):
        K.table("p", 5, "watson-sum")
    with pytest.raises(ValueError):
        K.table("mk", 5)


@pytest.mark.parametrize("name", ["p", "b6", "q2", "c", "d", "b6e", "b6o", "b6ee", "b6eo", "b3"])
def test_tables_match_enumeration(name):
    t = K.table(name, 30)
    c = E.named_constraint(name)
    assert list(t.values) == [E.count(n, c) for n in range(31)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_mk_pk_match_enumeration(k):
    mk, pk = K.mk_table(k, 25), K.pk_table(k, 25)
    assert list(mk.values) == [E.count_mk(k, n) for n in range(26)]
    assert list(pk.values) == [E.count_pk(k, n) for n in range(26)]


def test_mk_pk_zero_convention():
    assert K.mk_table(1, 5)(0) == 0 and K.pk_table(1, 5)(0) == 0


def test_paper_mk_pk_fixtures():
    assert K.mk_table(3, 18)(18) == 3
    assert K.pk_table(2, 17)(17) == 9


@pytest.mark.parametrize("ell", [3, 6])
def test_residues_match_exact(ell):
    exact = K.regular_table(ell, 3000)
    res = K.regular_residues(ell, 3000, 3)
    assert res.dtype == np.int64
    assert np.array_equal(res, np.array([v % 3 for v in exact.values]))


def test_partition_residues():
    p = K.p_table(1500)
    assert np.array_equal(K.partition_residues(1500, 7), np.array([v % 7 for v in p.values]))


def test_mex_census_small():
    m = K.mex22_census(0, 1)
    assert m.count(1) == 1 and m.beyond == 0
    m = K.mex22_census(10, 3)
    assert m.counts == ((1, 20), (2, 17), (3, 5))


@given(st.integers(0, 22))
def test_mex_census_against_enumeration(n):
    jmax = 1
    while jmax * (jmax + 1) <= n:
        jmax += 1
    census = K.mex22_census(n, jmax)
    brute = {}
    for lam in E.all_partitions(n):
        parts = set(lam)
        j = 1
        while 2 * j in parts:
            j += 1
        brute[j] = brute.get(j, 0) + 1
    assert dict(census.counts) == {j: brute.get(j, 0) for j in range(1, jmax + 1)}
    assert census.total == len(E.all_partitions(n))


def test_tables_are_immutable():
    t = K.p_table(5)
    with pytest.raises(Exception):
        t.values = ()
