import math

import pytest

import qtorus


def test_qint_shadow():
    for r in (3, 5):
        for n in range(-2 * r, 2 * r + 1):
            re, im = qtorus.qint(r, n)["approx"]
            assert re == pytest.approx(math.sin(n * math.pi / r) / math.sin(math.pi / r), abs=1e-9)
            assert im == pytest.approx(0.0, abs=1e-9)


def test_c_matrix_shape():
    m = qtorus.c_matrix(4, 1, 0)
    assert m["level"] == 4
    assert len(m["entries"]) == 3
    assert all(len(row) == 3 for row in m["entries"])


def test_bracket_matches_pairing_form():
    for k in range(1, 4):
        for m in range(1, 4):
            assert qtorus.c_bracket(4, 3, 2, k, m) == qtorus.pairing_form(4, 3, 2, k, m)


def test_product_to_sum_and_lemma():
    assert qtorus.product_to_sum(5, 1, 2, -3, 1)["ok"]
    assert qtorus.lemma_check(3, 1, 0, 1, 0, 0)["equal"]


def test_cfrac():
    assert qtorus.neg_cfrac(3, 2) == [2, 2]
    with pytest.raises(qtorus.DegenerateSlopeError):
        qtorus.neg_cfrac(0, 1)
    with pytest.raises(ValueError):
        qtorus.neg_cfrac(2, 4)


def test_kernel_compare():
    rep = qtorus.kernel_compare(3, 2)
    assert rep["symbols"] == 13
    assert rep["dim_ker_nc"] == 0
    assert rep["nc_subset_op"]


def test_verify_suite():
    assert "cfrac" in qtorus.suite_names()
    res = qtorus.verify("product-to-sum", levels=[3], bound=2)
    assert res["ok"]
    assert res["checks"] == 5**4
    with pytest.raises(ValueError):
        qtorus.verify("no-such-suite")
