import pytest

import burnlab


def test_version_string():
    assert isinstance(burnlab.__version__, str) and burnlab.__version__


def test_family_roundtrip():
    g = burnlab.family("wheel:8")
    assert g.vertex_count() == 9
    assert g.vertex_name(8) == "hub"
    text = g.to_edge_list()
    back = burnlab.Graph.from_edge_list(text)
    assert back.to_edge_list() == text


def test_solver_with_replay():
    g = burnlab.family("path:7")
    res = burnlab.burning_number(g)
    assert res["value"] == 5
    sim = burnlab.simulate(g, res["witness"])
    assert sim["outcome"] == "completed"
    assert sim["final_round"] == 5
    srcs = burnlab.source_number(g, res["value"])
    assert srcs["value"] == 4


def test_closed_form_and_construction():
    ans = burnlab.closed_form("wheel:30")
    assert ans["b2"] == (6, 6)
    assert ans["t2"] == (6, 6)
    seq = burnlab.construct_sequence("wheel:30")
    sim = burnlab.simulate(burnlab.family("wheel:30"), seq)
    assert sim["outcome"] == "completed"
    assert sim["final_round"] == 6


def test_percolation_quantities():
    g = burnlab.family("complete:6")
    res = burnlab.min_percolating(g)
    assert res["m"] == 2
    assert res["tau"] == 1
    assert burnlab.percolate(g, res["witness"]) == res["tau"]


def test_sandwich_on_random_graph():
    g = burnlab.random_connected(7, 0.4, 12345)
    rep = burnlab.sandwich(g)
    assert rep["m"] <= rep["t2"] <= rep["b2"] <= rep["m"] + rep["tau"]
    assert rep["holds"]


def test_verify_suite_dict():
    rep = burnlab.run_suite("paths", max_n=6)
    assert rep["suite"] == "paths"
    assert all(row["agree"] for row in rep["rows"])


def test_size_limits_raise():
    with pytest.raises(burnlab.LimitError):
        burnlab.burning_number(burnlab.family("path:40"))
    with pytest.raises(burnlab.LimitError):
        burnlab.connected_graphs(9)
