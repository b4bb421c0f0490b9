import pytest
from hypothesis import given, strategies as st

from sixregular import congruences as C
from sixregular import kernels as K

LIMIT = 20000


@given(st.integers(-5, 10**6))
def test_is_prime_matches_trial_division(n):
    def slow(m):
        return m >= 2 and all(m % d for d in range(2, int(m ** 0.5) + 1))
    assert C.is_prime(n) == slow(n)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 101])
def test_alpha_p(p):
    a = C.alpha_p(p)
    assert 0 <= a < p and (24 * a + 5) % p == 0


def test_alpha_p_rejects():
    for bad in (3, 9, 25):
        with pytest.raises(ValueError):
            C.alpha_p(bad)


def test_progression_first_terms():
    spec = C.PrimeFamilySpec((7,), 1)
    # 7 * (24 + 35) - 5 = 408, / 24 = 17
    assert C.m_n(spec, 0) == 17 and C.m_n(spec, 1) == 17 + 49


@pytest.mark.parametrize("p", [7, 11, 19, 23, 31])
def test_alpha0_families(p):
    for j in range(1, p):
        rep = C.verify_family(C.PrimeFamilySpec((p,), j), LIMIT)
        assert rep.status == "pass" and rep.checked > 0, rep.as_dict()


@pytest.mark.parametrize("primes", [(5, 7), (7, 11)])
def test_alpha1_spot(primes):
    rep = C.verify_family(C.PrimeFamilySpec(primes, 1), 100000)
    assert rep.status == "pass" and rep.checked > 0


def test_hou_class_is_valid():
    spec = C.PrimeFamilySpec((13,), 1)
    assert spec.theorem == "hou-13-17-19-23-mod-24"
    assert C.verify_family(spec, LIMIT).status == "pass"


def test_invalid_family_needs_exploratory():
    with pytest.raises(ValueError):
        C.PrimeFamilySpec((5,), 1)
    rep = C.verify_family(C.PrimeFamilySpec((5,), 1, exploratory=True), LIMIT)
    assert rep.status == "report-only"


def test_j_divisible_by_last_prime():
    with pytest.raises(ValueError):
        C.PrimeFamilySpec((7,), 14)


def test_b3_family():
    rep = C.verify_family(C.PrimeFamilySpec((7,), 1, target="b3"), LIMIT)
    assert rep.status == "pass"


@pytest.mark.parametrize("p", C.COVERED_P24)
def test_corollary_p24(p):
    rep = C.verify_corollary_p24(p, LIMIT)
    assert rep.status == "pass" and rep.checked > 0


def test_corollary_rejects_uncovered_class():
    with pytest.raises(ValueError):
        C.verify_corollary_p24(5, 1000)


def test_two_squares_witness():
    assert C.two_squares_witness(0) == (1, 1)
    assert C.two_squares_witness(17) is None
    a, b = C.two_squares_witness(1)
    assert a * a + 4 * b * b == 29


def test_two_squares_agreement():
    b6 = K.b6_table(1000)
    assert C.two_squares_agreement(1000, b6.values)["status"] == "pass"


def test_report_json_shape():
    d = C.verify_family(C.PrimeFamilySpec((7,), 1), 1000).as_dict()
    assert d["schema"] == 1
    assert {"theorem", "spec", "table_limit", "checked", "violations", "coverage_note"} <= set(d)
