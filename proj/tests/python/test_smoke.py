import json
import os
import pathlib
import subprocess
from fractions import Fraction

import pytest

import expdom

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"


def test_weights_are_exact_fractions():
    w = expdom.weights(expdom.path_graph(3), [0, 1])
    assert w == {0: Fraction(2), 1: Fraction(2), 2: Fraction(1)}
    porous = expdom.weights(expdom.path_graph(3), [0, 1], porous=True)
    assert porous[2] == Fraction(3, 2)


def test_solvers_agree_on_paths():
    for n in range(1, 14):
        p = expdom.path_graph(n)
        assert expdom.gamma_e_exact(p)["gamma_e"] == expdom.gamma_e_tree(p)["gamma_e"]
    assert expdom.gamma_e_exact(expdom.path_graph(6))["gamma_e"] == 2
    assert expdom.gamma_e_tree(expdom.path_graph(10))["gamma_e"] == 3


def test_constructions():
    assert expdom.build_figure2(3).order == 24
    tree, s, d = expdom.build_degree5_instance(1)
    assert (tree.order, len(s), d) == (106, 20, 3)
    assert expdom.is_exponential_dominating(tree, s)
    k33, triple = expdom.build_theorem7_extremal(expdom.star_graph(3))
    assert k33.size == 9 and len(triple) == 3
    assert expdom.min_triple_weight_set(expdom.named_graph("k33"))["gamma_e"] == 3
    assert expdom.build_gadget(expdom.named_graph("k4")).order == 64
    s, cover = expdom.gadget_cover_roundtrip(expdom.named_graph("k4"), [0, 1, 2])
    assert len(s) == 15 and len(cover) <= 3


def test_graph_io_roundtrip():
    g = expdom.named_graph("petersen")
    assert expdom.parse_graph6(expdom.emit_graph6(g)) == g
    assert expdom.parse_edge(expdom.emit_edge(g)) == g
    assert g.neighbors(0) == sorted(g.neighbors(0))


def test_heuristic_and_bounds():
    r = expdom.randomized_expdom(expdom.named_graph("mcgee"), 1 / 3, seed=1, trials=50, threads=2)
    assert r["all_verified"] and r["girth"] == 7
    p, d, girth = expdom.theorem6_params("epsilon", 0.5)
    assert abs(p - 1 / 6) < 1e-15 and d == 11 and girth == 23
    rep = expdom.bounds_report(expdom.path_graph(6), 2)
    diam = next(b for b in rep["bounds"] if b["name"] == "diameter-lower")
    assert diam["value"] == "7/4" and diam["rounded_tight"]


def test_reduce():
    star = expdom.Graph(4, [(0, 1), (0, 2), (0, 3)])
    out = expdom.reduce_fully(star)
    assert [s["rule"] for s in out["trace"]] == ["i"]


def test_domain_errors():
    with pytest.raises(expdom.DomainError, match="not_a_tree"):
        expdom.gamma_e_tree(expdom.cycle_graph(4))
    with pytest.raises(expdom.DomainError, match="unknown_name"):
        expdom.named_graph("nope")
    with pytest.raises(expdom.DomainError):
        expdom.Graph(2, [(0, 0)])


cli = os.environ.get("EXPDOM_CLI")


def run_cli(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


@pytest.mark.skipif(not cli, reason="EXPDOM_CLI not set")
def test_cli_outputs_match_schemas(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")

    def check(doc, name):
        schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
        jsonschema.validate(doc, schema)

    graph = tmp_path / "p10.edge"
    graph.write_text(expdom.emit_edge(expdom.path_graph(10)))
    out = run_cli("solve", "--tree", "--trace", "--graph", str(graph))
    assert out.returncode == 0
    check(json.loads(out.stdout), "solve_result")
    out = run_cli("weight", "--graph", str(graph), "--set", "0,4,8")
    check(json.loads(out.stdout)["profile"], "weight_profile")
    out = run_cli("heuristic", "--graph", "named:petersen", "--trials", "5")
    check(json.loads(out.stdout)["report"], "trial_report")
    out = run_cli("report", "--graph", str(graph))
    check(json.loads(out.stdout), "bounds_report")
    out = run_cli("reduce", "--graph", "named:k4")
    check(json.loads(out.stdout), "reduce_result")
    out = run_cli("solve", "--exact", "--graph", str(tmp_path / "missing.edge"))
    assert out.returncode == 1
    check(json.loads(out.stderr), "error")
    assert run_cli("frobnicate").returncode == 2
