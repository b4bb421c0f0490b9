import pytest

from sixregular import inequalities as I
from sixregular import kernels as K


def test_cor81_k1_threshold():
    r = I.scan("cor81", 1, 500)
    assert r.counterexample is None and r.first_strict_n == 12 and r.sharpness_match


def test_c812_tight_at_7():
    p = K.p_table(10)
    b6 = K.b6_table(10)
    assert p(7) - p(1) == b6(7) == 14
    assert I.values("c8-1-2", None, 10)[7] == 0


def test_ineq12_k1_nonneg():
    assert all(v >= 0 for v in I.values("ineq12", 1, 2000))


@pytest.mark.slow
def test_full_matrix(tables2000):
    res = I.scan_matrix(list(I.CONJECTURES), 10, 2000, tables2000)
    assert I.exit_code(res) == 0
    for r in res:
        if r.id == "cor81" and r.k <= 6:
            assert r.sharpness_match, r
        if r.id == "conj-q2-p" and r.k <= 5:
            assert r.sharpness_match, r
    assert I.consistency_check(10, 2000, tables2000) == []


def test_equivalent_forms_small():
    assert I.consistency_check(4, 300) == []


def test_counterexample_detection(monkeypatch):
    fake = I.Conjecture("fake", "", lambda T, k, b, N: [0, 1, -1] + [1] * (N - 2))
    monkeypatch.setitem(I.CONJECTURES, "fake", fake)
    r = I.scan("fake", 1, 10)
    assert r.status == "counterexample" and r.counterexample == (2, -1)
    assert I.exit_code([r]) == 1


def test_usage_errors():
    with pytest.raises(ValueError):
        I.scan("nope", 1, 10)
    with pytest.raises(ValueError):
        I.scan("cj2", 0, 10)
    with pytest.raises(ValueError):
        I.scan("conj-q2-p", 1, 10, branch=None)


def test_observed_thresholds_for_unasserted_claims():
    # measured, not asserted against the printed bound
    for k in range(1, 5):
        assert I.scan("cj2a", k, 300).first_strict_n == (k + 1) * (3 * k + 2) // 2
        r = I.scan("conj-b6-rho", k, 300, "ii")
        assert r.first_strict_n == (3 * k + 3) * (3 * k + 4) // 2 and not r.asserted


def test_csv_rows():
    rows = I.csv_rows([I.scan("cor81", 2, 100)])
    assert rows == [("cor81", 2, "", "no-counterexample", 42, 42, True)]
