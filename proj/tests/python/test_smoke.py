import pytest

import cbsteiner as cb


def four_positions():
    return cb.ConvexBipartiteGraph(4, [(1, 2), (1, 3), (2, 4), (3, 4)])


def test_all_x():
    res = cb.solve(four_positions(), "all-x")
    assert res["size"] == 2
    assert res["steiner_set"] == ["y2", "y4"]
    assert res["terminal_case"] == "all_x"
    assert cb.oracle(four_positions(), "all-x")["optimum"] == 2


def test_terminal_sequence_and_mixed():
    g = four_positions()
    res = cb.solve(g, ["x1", "y4"])
    assert res["size"] == 2
    assert res["size"] == cb.oracle(g, ["x1", "y4"])["optimum"]
    assert res["method"].startswith("lift+")
    assert cb.solve(g, ["x1", "y2"])["size"] == 0


def test_table_dp_values():
    g = cb.ConvexBipartiteGraph(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)])
    out = cb.solve_table(g, "y1,y3,y5")
    cells = {(c["i"], c["j"]): c["F"] for c in out["table"]["cells"]}
    assert cells[(2, 7)] == 2
    assert cells[(5, 6)] == 3
    assert out["table"]["class"] == "E3"
    assert out["result"]["size"] == 4
    assert cb.solve(g, "y1,y3,y5")["size"] == 4


def test_domination_gap():
    g = cb.ConvexBipartiteGraph(3, [(1, 2), (2, 3)])
    d = cb.dominating_set(g)
    assert d["valid"]
    assert d["size"] == 3
    assert cb.min_dominating_set(g)["optimum"] == 2


def test_interval_and_vc():
    assert cb.interval_steiner([(1, 3), (2, 5), (4, 6)], [1, 3]) == [2]
    tri = cb.vertex_cover_reduction(3, [(1, 2), (2, 3), (1, 3)], 2)
    assert tri["caterpillar_valid"]
    assert tri["vertex_cover"]["optimum"] == tri["steiner"]["optimum"] == 2


def test_generate_parse_round_trip():
    g = cb.generate(8, 6, 0.4, 5)
    h = cb.generate(8, 6, 0.4, 5)
    assert g.intervals == h.intervals
    parsed, terminals = cb.parse_cbg(g.to_text() + "t y 1\n")
    assert parsed.intervals == g.intervals
    assert terminals == ["y1"]
    assert cb.canonical_form(g.to_text()) == g.to_text()


def test_reference_traces():
    traces = cb.reference_traces()
    assert len(traces) == 5
    assert all(t["ok"] for t in traces)


def test_small_audit():
    assert cb.audit("interval", 200)["pass"]


def test_errors():
    with pytest.raises(ValueError):
        cb.ConvexBipartiteGraph(3, [(1, 1), (3, 3)])
    with pytest.raises(cb.ParseError):
        cb.parse_cbg("cbg 3 1\ny 1 3 2\n")
    with pytest.raises(ValueError):
        cb.solve(four_positions(), "x9")
    with pytest.raises(ValueError):
        cb.solve_table(four_positions(), "x1")
