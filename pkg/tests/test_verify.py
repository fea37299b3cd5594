import json

import pytest

from agspectra import verify as V
from agspectra.graph import build_family


def test_golden_tables_shape():
    sizes = {1: 42, 2: 96, 3: 5, 4: 13, 5: 33}
    for tid, size in sizes.items():
        rows = V.load_table(tid)
        assert len(rows) == size
        assert all(r.provenance for r in rows)
    assert {r.graph for r in V.load_table(1)} == {"G1", "G2", "G3"}
    assert sorted({r.n for r in V.load_table(2)}) == list(range(8, 16))


def test_load_table_rejects_bad_id():
    with pytest.raises(ValueError):
        V.load_table(6)


def test_golden_round_trip(tmp_path, monkeypatch):
    for tid in range(1, 6):
        V.write_table(tmp_path / f"table{tid}.csv", V.load_table(tid))
    original = {tid: V.load_table(tid) for tid in range(1, 6)}
    monkeypatch.setenv("AGSPECTRA_DATA_DIR", str(tmp_path))
    assert V.data_dir() == tmp_path
    for tid in range(1, 6):
        assert V.load_table(tid) == original[tid]


def test_short_values_get_wider_tolerance():
    g = V.GoldenValue(5, "U", "2.75", "x")
    assert g.decimals == 2 and g.tolerance == V.TABLE_TOL_SHORT
    g = V.GoldenValue(5, "U", "2.3160", "x")
    assert g.tolerance == V.TABLE_TOL


def test_data_dir_override_catches_wrong_values(tmp_path, monkeypatch):
    rows = V.load_table(3)
    bad = [V.GoldenValue(r.n, r.graph, "%.4f" % (r.value + 0.01), r.provenance) for r in rows]
    V.write_table(tmp_path / "table3.csv", bad)
    monkeypatch.setenv("AGSPECTRA_DATA_DIR", str(tmp_path))
    assert [r.status for r in V.reproduce_table(3)] == ["fail"]


def test_size_mismatch_is_failure(tmp_path, monkeypatch):
    V.write_table(tmp_path / "table4.csv", V.load_table(4)[:-1])
    monkeypatch.setenv("AGSPECTRA_DATA_DIR", str(tmp_path))
    (rep,) = V.reproduce_table(4)
    assert rep.status == "fail" and "size mismatch" in rep.detail


@pytest.mark.parametrize("tid", [1, 3, 4, 5])
def test_reproduce_tables(tid):
    reports = V.reproduce_table(tid)
    assert reports and all(r.status == "pass" for r in reports), [r.detail for r in reports if not r.ok]


def test_report_dict_round_trip_and_timing():
    rep = V.verify_lemma5([9])[0]
    d = rep.to_dict(timing=False)
    assert d["runtime_ms"] is None
    assert V.VerificationReport.from_dict(d).computed == rep.computed
    assert V.VerificationReport.from_dict(rep.to_dict()) == rep
    json.dumps(d)


def test_reports_deterministic_without_timing():
    a = [r.to_dict(timing=False) for r in V.run_suite("lemma6", 25)]
    b = [r.to_dict(timing=False) for r in V.run_suite("lemma6", 25)]
    assert a == b


def test_name_of_families():
    for fam, name in [("cycle", "C_n"), ("star-plus-edge", "S_n+e"), ("g1", "G1"), ("g2", "G2"), ("g3", "G3")]:
        assert V.name_of(build_family(fam, 9)) == name


def test_theorem_order_branches():
    assert V.theorem_order(6) == ["S_n+e", "G2", "G3", "G1"]
    assert V.theorem_order(12) == ["S_n+e", "G2", "G1", "G3"]
    assert V.theorem_order(30) == ["S_n+e", "G1", "G2", "G3"]
    with pytest.raises(ValueError):
        V.theorem_order(4)


def test_theorem_n7_top_four():
    rep = V.verify_theorem(7)
    assert rep.status == "pass", rep.detail
    names = [c[0] for c in rep.computed]
    assert names == ["S_n+e", "G2", "G3", "G1", "C_n"]
    assert rep.computed[0][1] == pytest.approx(3.4526, abs=1e-3)
    assert rep.computed[-1][1] == pytest.approx(2.0, abs=1e-9)


def test_theorem_n8_values():
    rep = V.verify_theorem(8)
    assert rep.status == "pass", rep.detail
    table1 = {(r.n, r.graph): r.value for r in V.load_table(1)}
    got = dict((name, r) for name, r in rep.computed)
    for g in ("G1", "G2", "G3"):
        assert got[g] == pytest.approx(table1[(8, g)], abs=1e-3)


@pytest.mark.parametrize("n", [11, 15, 16, 21, 40])
def test_theorem_beyond_enumeration(n):
    rep = V.verify_theorem(n)
    assert rep.status == "pass", rep.detail


def test_theorem_n16_g1_above_g2():
    assert V.family_radius("g1", 16) > V.family_radius("g2", 16)
    assert V.family_radius("g1", 15) < V.family_radius("g2", 15)


def test_lemma5():
    reps = V.verify_lemma5([7, 8, 100])
    assert [r.status for r in reps] == ["skipped", "pass", "pass"]


def test_lemma6_n14_chain():
    rep = V.verify_lemma6(14)
    assert rep.status == "pass"
    assert rep.computed[:3] == pytest.approx([6.2174, 6.2856, 6.2917], abs=1e-3)
    assert "not asserted" in rep.detail


def test_lemma6_n21_chain():
    rep = V.verify_lemma6(21)
    assert rep.status == "pass"
    assert rep.computed[1:] == pytest.approx([9.6757, 9.7528, 9.7673, 10.0], abs=1e-3)


def test_lemma6_n30_long_chain():
    rep = V.verify_lemma6(30)
    assert rep.status == "pass"
    assert len(rep.expected) == 7
    assert rep.computed == sorted(rep.computed)


def test_lemma6_rejects_small_n():
    with pytest.raises(ValueError):
        V.verify_lemma6(7)


def test_bound_checks_small():
    assert V.verify_lemma4(8).status == "pass"
    assert all(r.ok for r in V.verify_lemma7([8]))
    assert all(r.ok for r in V.verify_delta_n_minus_3([8, 9]))
    assert all(r.ok for r in V.verify_zheng(uni_max=7, bi_max=6, star_max=8))


def test_sign_table_pairs():
    reps = V.verify_sign_table(60)
    direct = [r for r in reps if not r.claim.endswith("printed-form")]
    assert len(direct) == len(reps) // 2
    assert all(r.status == "pass" for r in direct)
    assert all(r.status == "report" for r in reps if r.claim.endswith("printed-form"))


@pytest.mark.parametrize("n", [5, 7, 8])
def test_explore_bicyclic(n):
    rk = V.explore_bicyclic(n, 3)
    assert len(rk.top) == 3
    assert rk.top[0].radius >= rk.top[1].radius >= rk.top[2].radius >= rk.minimum.radius
    from agspectra.graph import from_graph6
    for e in rk.top + [rk.minimum]:
        g = from_graph6(e.graph6)
        assert g.n == n and g.m == n + 1 and g.is_connected()
    if n >= 7:
        assert [e.max_degree for e in rk.top[:2]] == [n - 1, n - 1]
    assert V.explore_bicyclic(n, 3) == rk


def test_explore_bicyclic_range():
    with pytest.raises(ValueError):
        V.explore_bicyclic(4)
    with pytest.raises(ValueError):
        V.explore_bicyclic(11)


def test_bicyclic_report_is_not_pass_fail():
    rep = V.bicyclic_report(7)
    assert rep.status == "report" and rep.ok


def test_unknown_suite():
    with pytest.raises(ValueError):
        V.run_suite("nope")
