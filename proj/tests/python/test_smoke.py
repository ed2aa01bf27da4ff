"""Smoke tests for the Python bindings (built extension on PYTHONPATH)."""

import pytest

import tricode


def test_version():
    assert tricode.__version__ == "0.1.0"


def test_builtin_code_shape():
    q = tricode.builtin15()
    assert (q.n, q.k) == (15, 1)
    assert len(q.x_stab) == 4
    assert all(row.count("1") == 8 for row in q.x_stab)
    assert len(q.z_stab) == 10
    assert q.map_a == ["1" * 15]
    assert tricode.code_distance(q) == 3
    m = tricode.mirror(q)
    assert len(m.x_stab) == 10
    assert len(m.z_stab) == 4
    assert "CssCode(n=15, k=1)" in repr(q)


def test_triorthogonality_check():
    q = tricode.builtin15()
    rows = ["1" * 15] + q.x_stab
    report = tricode.check_triorthogonal(rows)
    assert report["is_triorthogonal"]
    assert list(report["odd_rows"]) == [0]

    bad = tricode.check_triorthogonal(["110", "011"])
    assert not bad["is_triorthogonal"]
    assert [list(v) for v in bad["pair_violations"]] == [[0, 1]]


def test_transversality_verdicts():
    q = tricode.builtin15()
    m = tricode.mirror(q)

    t = tricode.verify_t(q)
    assert t["holds"] and t["induced_sign"] == -1
    assert tricode.verify_tx(m, q)["holds"]

    assert tricode.check_cnot_condition(q, m)["holds"]
    assert not tricode.check_cnot_condition(m, q)["holds"]
    assert tricode.check_cz_condition(q, m)["holds"]

    good = tricode.verify_toffoli(q, q, m)
    assert good["holds"] and good["checks_performed"] == 1024
    bad = tricode.verify_toffoli(q, q, q)
    assert not bad["holds"] and "witness" in bad


def test_build_css_validation():
    with pytest.raises(ValueError):
        tricode.build_css(["11"], ["10"])
    tiny = tricode.build_css(["100", "010", "001"], ["111"])
    assert (tiny.n, tiny.k) == (3, 1)


def test_distillation_analysis():
    q = tricode.builtin15()
    assert tricode.count_undetectable(q, 3) == (35, 35)
    assert tricode.count_undetectable(q, 2) == (0, 0)

    rep = tricode.exact_distill(q, 0.01)
    assert rep["accept_prob"] == pytest.approx(0.6362327967431043, rel=1e-9)
    assert rep["output_error_per_block"][0] == pytest.approx(3.6087683965323304e-05, rel=1e-9)

    p_star = tricode.find_threshold(q)
    assert 0.136 < p_star < 0.146
    assert tricode.toffoli_threshold(p_star) == pytest.approx(0.3128, abs=1e-3)


def test_monte_carlo_reproducible():
    q = tricode.builtin15()
    a = tricode.monte_carlo(q, 0.05, trials=20000, seed=7)
    b = tricode.monte_carlo(q, 0.05, trials=20000, seed=7)
    assert a["accept_prob"] == b["accept_prob"]
    assert a["output_error_per_block"] == b["output_error_per_block"]
    assert a["rng"].startswith("splitmix64")
    with pytest.raises(ValueError):
        tricode.monte_carlo(q, 0.05, trials=0, seed=7)


def test_level_iteration():
    trace = tricode.iterate_levels_hybrid(1e-2, 1e-12)
    assert len(trace) == 2
    assert trace[0]["output_error"] == pytest.approx(3.6087683965323304e-05, rel=1e-9)
    assert len(tricode.iterate_levels_3k8(1e-2, 1e-9, 8)) == 4


def test_costs():
    assert tricode.cost_direct15(2, 0.0) == 720.0
    assert tricode.cost_magic15(2, 0.0) == 1575.0
    ratio = tricode.cost_magic15(2, 1e-2) / tricode.cost_direct15(2, 1e-2)
    assert ratio == pytest.approx(1575.0 / 720.0, rel=1e-12)

    plan = tricode.optimize_k(1e-2, 1e-12)
    assert list(plan["k_schedule"]) == [3, 10, 39, 50]
    assert plan["achieved_error"] <= 2e-12

    single = tricode.cost_family3k8([8], 1e-2, 1.3e-3)
    assert single["expected_qubits"] == pytest.approx(12.0 / 0.68**3, rel=1e-9)


def test_csv_and_circuits():
    f5 = tricode.fig5_csv(1e-2)
    assert f5.startswith("target_error,protocol,expected_qubits,levels,k_schedule\n")
    assert "3;10;39;50" in f5
    f6 = tricode.fig6_csv(1e-2)
    assert f6.startswith("target_error,k,expected_qubits\n")

    assert tricode.circuits_identities_ok()
    assert "CCX 0 1 2" in tricode.circuit_text("gadget")
    with pytest.raises(ValueError):
        tricode.circuit_text("nope")
