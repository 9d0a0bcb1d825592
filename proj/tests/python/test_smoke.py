import math

import numpy as np
import pytest

import mimo_select as ms


def test_capacity_and_gram():
    h = ms.gen_all_ones(2, 2)
    assert h.shape == (2, 2)
    np.testing.assert_array_equal(ms.gram(h, 1.0).real, [[3, 2], [2, 3]])
    rep = ms.capacity(h, 1.0)
    assert rep.capacity_bits == pytest.approx(math.log2(5), abs=1e-12)
    assert rep.spectrum == pytest.approx([5.0, 1.0], abs=1e-12)
    row = np.array([[1, 1]], dtype=complex)
    assert ms.log_det(ms.dual_gram(row, 1.0)) == pytest.approx(math.log2(3), abs=1e-12)


def test_polynomials():
    a = np.diag([1.0, 2.0, 3.0]).astype(complex)
    assert ms.char_poly(a) == pytest.approx([-6, 11, -6, 1])
    assert ms.poly_derivative([-6, 11, -6, 1], 1) == [11, -12, 3]
    assert ms.sum_subset_charpolys(a, 2) == pytest.approx([11, -12, 3])
    assert ms.principal_submatrix(a, [1, 3]).real.tolist() == [[1, 0], [0, 3]]


def test_selection():
    d = np.diag([2.0, 1.0]).astype(complex)
    best = ms.exhaustive_best(d, 1.0, 1, 1)
    assert (best.tx, best.rx) == ([1], [1])
    greedy = ms.greedy_prune(d, 1.0, 1, 1, ms.PruneOrder.RX_FIRST)
    assert [(s.side, s.removed) for s in greedy.trace] == [(ms.Side.RX, 2), (ms.Side.TX, 2)]
    assert greedy.capacity_bits == pytest.approx(best.capacity_bits)

    full = ms.capacity(ms.gen_parallel(4), 100.0)
    par = ms.exhaustive_best(ms.gen_parallel(4), 100.0, 2, 2)
    b2 = ms.theorem2_bound(full, 2, 2, par.capacity_bits)
    assert b2.slack_bits == pytest.approx(math.log2(36), abs=1e-9)
    b1 = ms.theorem1_bound(full, 2, 2, par.capacity_bits)
    assert b1.satisfied

    bad = [ms.RemovalStep(ms.Side.RX, 5, 4, 5.0)]
    assert not ms.per_step_ratio_check(10.0, bad)


def test_identities():
    h = ms.gen_gaussian(5, 5, 3)
    f = ms.gram(h, 1.0)
    for k in range(1, 5):
        assert ms.verify_property1(f, k).passed
        assert ms.verify_induction_step(f, k).passed
    assert ms.verify_symmetric_coeff(f, 3).passed
    assert ms.verify_avg_det_bound(f).passed
    assert ms.verify_case2_tuple_count(4, 2, 3)


def test_runs():
    v = ms.verify(1, trials=5, max_n=4, seed=1)
    assert v["schema_version"] == 1
    assert v["report"]["passed"]
    i = ms.identity(4, trials=2)
    assert i["report"]["passed"]
    t = ms.tight("parallel", 4, 4, 2, 2, 100.0)
    assert t["report"]["ratio_observed"] == pytest.approx(0.5, abs=1e-9)


def test_errors_and_io(tmp_path):
    with pytest.raises(ValueError):
        ms.capacity(np.array([[np.nan]]), 1.0)
    with pytest.raises(ms.BudgetExceeded):
        ms.exhaustive_best(ms.gen_gaussian(6, 6, 1), 1.0, 3, 3, cap=10)
    with pytest.raises(ValueError):
        ms.gram(ms.gen_parallel(2), 0.0)
    h = ms.gen_gaussian(3, 2, 9)
    path = tmp_path / "h.json"
    ms.save_channel(h, str(path))
    np.testing.assert_array_equal(ms.load_channel(str(path)), h)
