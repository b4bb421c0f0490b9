import pytest
from hypothesis import given, settings, strategies as st

from sixregular.series import (
    Factor,
    NonInvertibleError,
    ProductSpec,
    SubstitutionError,
    TruncatedSeries,
    build_product,
    invert,
    mul,
    pentagonal_theta,
    poch,
    quintuple_specialization,
    triple_specialization,
)

ORDER = 12
coeff = st.integers(-50, 50)
series_st = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(TruncatedSeries.from_coeffs)
unit_series = st.tuples(st.sampled_from([1, -1]), st.lists(coeff, min_size=ORDER, max_size=ORDER)).map(
    lambda t: TruncatedSeries.from_coeffs([t[0], *t[1]])
)


@given(series_st, series_st)
def test_mul_commutes(a, b):
    assert mul(a, b) == mul(b, a)


@given(series_st, series_st, series_st)
@settings(max_examples=50)
def test_mul_associates(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(unit_series)
def test_invert_is_inverse(a):
    assert mul(a, invert(a)) == TruncatedSeries.one(ORDER)


@given(series_st, series_st)
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


def test_invert_rejects_non_unit():
    with pytest.raises(NonInvertibleError):
        invert(TruncatedSeries.from_coeffs([2, 1, 0]))


def test_division_by_nonunit_factor():
    with pytest.raises(NonInvertibleError):
        build_product(ProductSpec.of((), (Factor(0, 1),)), 5)


def test_euler_product_is_pentagonal_theta():
    assert build_product(ProductSpec((poch(1, 1),)), 500) == pentagonal_theta(500)


def test_partition_numbers():
    p = build_product(ProductSpec.of((), (poch(1, 1),)), 10)
    assert list(p) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_b6_generating_function():
    b6 = build_product(ProductSpec.of((poch(6, 6),), (poch(1, 1),)), 10)
    assert b6[7] == 14


def test_q2_expansion():
    spec = ProductSpec((poch(1, 2, negated=True), poch(6, 6, negated=True)))
    s = build_product(spec, 14)
    assert list(s) == [1, 1, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 5, 5, 5]


def test_negative_index_is_zero():
    assert TruncatedSeries.one(3)[-1] == 0
    with pytest.raises(IndexError):
        TruncatedSeries.one(3)[4]


@pytest.mark.parametrize("s,m", [(2, 24), (10, 24), (2, 6), (1, 3)])
def test_quintuple_specialisations(s, m):
    lhs, rhs = quintuple_specialization(s, m, 240)
    assert lhs == rhs


@pytest.mark.parametrize("s,sign,m", [(1, 1, 6), (1, -1, 6)])
def test_triple_specialisations(s, sign, m):
    lhs, rhs = triple_specialization(s, sign, m, 240)
    assert lhs == rhs


@pytest.mark.parametrize("s,m", [(0, 6), (3, 6), (5, 6)])
def test_quintuple_rejects_bad_substitution(s, m):
    with pytest.raises(SubstitutionError):
        quintuple_specialization(s, m, 10)


def test_triple_rejects_bad_substitution():
    with pytest.raises(SubstitutionError):
        triple_specialization(6, 1, 6, 10)


@given(st.integers(1, 5), st.integers(1, 4))
def test_dilate_shift(m, k):
    p = build_product(ProductSpec.of((), (poch(1, 1),)), 30)
    d = p.dilate(m)
    assert all(d[m * i] == p[i] for i in range(30 // m + 1))
    assert p.shift(k)[k] == p[0]
