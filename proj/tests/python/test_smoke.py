import json
import os
import subprocess

import pytest

import copwin


def test_orders_and_verdicts():
    h = copwin.h_block()
    g = h["graph"]
    assert len(g) == 11
    assert copwin.decide_cop_win(g)
    assert copwin.verify_order(g, h["order"], [])["ok"]
    found = copwin.find_dominating_order(g)
    assert found is not None and copwin.verify_order(g, found, [])["ok"]

    c4 = copwin.cycle_graph(4)["graph"]
    assert not copwin.decide_cop_win(c4)
    assert copwin.find_dominating_order(c4) is None
    assert copwin.find_dismantling_order(c4) is None


def test_retractions():
    ab = copwin.ab_graph(9)
    assert copwin.check_retraction(ab["graph"], ab["retraction"], ab["retract_target"])["ok"]
    p3 = copwin.path_graph(3)
    fam = copwin.RetractionFamily(p3["order"])
    assert fam.rho(1, 2) == 0
    assert fam.rho(2, 2) == 1
    assert copwin.check_shifted_edge_property(fam, p3["graph"])["ok"]


def test_simulate_and_evaluate():
    h = copwin.h_block()
    t = copwin.simulate(h["graph"], h["order"], cop="s_star", robber="greedy", horizon=500)
    assert t.captured
    assert t.outcome == copwin.Outcome.capture
    assert copwin.evaluate_classic(t)
    assert t.stages == sorted(t.stages)
    doc = json.loads(t.to_json())
    assert doc["outcome"] == "capture"

    c4 = copwin.cycle_graph(4)["graph"]
    t = copwin.simulate(c4, None, cop="optimal", robber="adversarial", horizon=100)
    assert not t.captured
    assert t.last_round == 100


def test_search_and_timing():
    c4 = copwin.cycle_graph(4)["graph"]
    assert copwin.adversarial_search(c4, 20) == "robber_wins"
    k2 = copwin.complete_graph(2)["graph"]
    assert copwin.adversarial_search(k2, 4) == "cop_wins"

    f = copwin.random_constructible(8, 3)
    natural, levels = copwin.naturalize_order(f["graph"], f["order"])
    assert levels[f["order"].sequence[0]] == 0
    profile = copwin.estimate_timing(f["graph"], natural, 32)
    assert profile["total"]
    assert profile["t_c"] == [2 * natural.rank(v) for v in range(8)]
    assert copwin.verify_order(f["graph"], profile["order"], [])["ok"]


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        copwin.path_graph(0)
    with pytest.raises(ValueError):
        copwin.simulate(copwin.path_graph(3)["graph"], None, cop="s_star")


def test_t5_ball():
    g, order, keys = copwin.t5_of_h_ball(2)
    assert len(g) == len(keys) == 19
    assert copwin.verify_order(g, order, [])["ok"]


@pytest.mark.skipif("COPWIN_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_solve(tmp_path):
    cli = os.environ["COPWIN_CLI"]
    graph = tmp_path / "c4.graph"
    graph.write_text(subprocess.run([cli, "generate", "--family", "cycle", "--n", "4"],
                                    check=True, capture_output=True, text=True).stdout)
    out = subprocess.run([cli, "solve", "--graph", str(graph)], check=True, capture_output=True, text=True)
    assert out.stdout.strip() == "robber-win"
