"""Command-line surface, via click's test runner."""

import json

import pytest
from click.testing import CliRunner

from fareygaps import __version__
from fareygaps.cli import main
from fareygaps.verify import CheckResult


@pytest.fixture()
def runner():
    return CliRunner()


def test_version(runner):
    res = runner.invoke(main, ["--version"])
    assert res.exit_code == 0 and __version__ in res.output


def test_nu_both_routes_json(runner):
    res = runner.invoke(main, ["nu", "--r", "6", "--D", "3", "--route", "both"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["exact"]["rational"] == "3089/85085"
    assert payload["agree"] is True
    assert payload["decimal"] == "0.0363048715989892"


def test_nu_text(runner):
    res = runner.invoke(main, ["nu", "--r", "4", "--D", "2", "--route", "closed",
                               "--format", "text"])
    assert res.exit_code == 0
    assert "2/45" in res.output and "closed_form" in res.output


def test_nu_symbolic_rendering(runner):
    res = runner.invoke(main, ["nu", "--r", "1", "--route", "closed"])
    payload = json.loads(res.output)
    assert payload["exact"] == {"rational": "6", "pi_sqrt3": "-2",
                                "ln3": "-2", "ln2": "0"}


def test_nu_rejects_bad_flags(runner):
    assert runner.invoke(main, ["nu", "--r", "0"]).exit_code == 2
    assert runner.invoke(main, ["nu", "--r", "2", "--D", "7"]).exit_code == 2
    assert runner.invoke(main, ["nu", "--r", "2", "--c0", "5"]).exit_code == 2
    assert runner.invoke(main, ["nu"]).exit_code == 2


def test_region_json_and_svg(runner, tmp_path):
    svg_path = tmp_path / "region.svg"
    res = runner.invoke(main, ["region", "--tuple", "2,4,1",
                               "--svg", str(svg_path)])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["area"] == "1/210"
    assert payload["vertices"] == [["4/5", "3/5"], ["1", "2/3"], ["1", "5/7"]]
    assert svg_path.read_text().startswith("<svg")


def test_region_empty(runner):
    res = runner.invoke(main, ["region", "--tuple", "3,2^4,1,6"])
    payload = json.loads(res.output)
    assert payload["empty"] is True and payload["area"] == "0"


def test_region_bad_tuple(runner):
    res = runner.invoke(main, ["region", "--tuple", "2,,4"])
    assert res.exit_code == 2


def test_enumerate_json(runner):
    res = runner.invoke(main, ["enumerate", "--r", "5"])
    payload = json.loads(res.output)
    assert payload["finite"][0] == "1,2^2,3,2"
    assert payload["families"][0]["template"] == "2,1,k,1,2"
    assert payload["families"][0]["progression"] == "1 mod 3"


def test_enumerate_bounded_text(runner):
    res = runner.invoke(main, ["enumerate", "--r", "2", "--D", "5", "--c0", "1",
                               "--c1", "2", "--k-max", "20", "--format", "text"])
    assert res.exit_code == 0


def test_tree_formats(runner, tmp_path):
    res = runner.invoke(main, ["tree", "--seed", "2,4", "--depth", "6"])
    assert res.exit_code == 0 and "2,4,1,3,2,1" in res.output
    dot = runner.invoke(main, ["tree", "--seed", "2,4", "--depth", "4",
                               "--format", "dot"])
    assert dot.output.startswith("digraph")
    out = tmp_path / "tree.svg"
    svg = runner.invoke(main, ["tree", "--seed", "2,4", "--depth", "5",
                               "--format", "svg", "--out", str(out)])
    assert svg.exit_code == 0 and out.read_text().startswith("<svg")
    js = runner.invoke(main, ["tree", "--seed", "2,4", "--depth", "5",
                              "--format", "json"])
    payload = json.loads(js.output)
    assert payload["seed"] == "2,4"


def test_tree_needs_max_index_for_open_families(runner):
    res = runner.invoke(main, ["tree", "--seed", "1", "--depth", "2"])
    assert res.exit_code == 2 and "max-index" in res.output.replace("max_index", "max-index")
    ok = runner.invoke(main, ["tree", "--seed", "1", "--depth", "2",
                              "--max-index", "12"])
    assert ok.exit_code == 0


def test_scan_csv_and_json(runner, tmp_path):
    res = runner.invoke(main, ["scan", "--Q", "30", "--no-progress"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "r,count,ratio_decimal"
    assert lines[1].startswith("1,11,")
    out = tmp_path / "scan.json"
    res2 = runner.invoke(main, ["scan", "--Q", "30", "--no-progress",
                                "--format", "json", "--out", str(out),
                                "--backend", "python"])
    assert res2.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["coloured_total"] == 74
    assert payload["counts"]["2"] == 30


def test_verify_single_suite(runner):
    res = runner.invoke(main, ["verify", "--suite", "lemma7"])
    assert res.exit_code == 0
    assert "3/3 checks passed" in res.output
    assert res.output.count("ok ") == 3


def test_verify_json(runner):
    res = runner.invoke(main, ["verify", "--suite", "identities",
                               "--format", "json"])
    checks = json.loads(res.output)
    assert len(checks) == 4 and all(c["ok"] for c in checks)


def test_verify_unknown_suite(runner):
    assert runner.invoke(main, ["verify", "--suite", "nope"]).exit_code == 2


def test_verify_failure_exit_code(runner, monkeypatch):
    import fareygaps.cli as cli_mod

    def fake_run_suites(names, seed, threads):
        return [CheckResult("lemma7", "forced", False, "injected failure")]

    monkeypatch.setattr(cli_mod, "run_suites", fake_run_suites)
    res = runner.invoke(main, ["verify", "--suite", "lemma7"])
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_table(runner):
    res = runner.invoke(main, ["table", "--r-min", "8", "--r-max", "10"])
    lines = res.output.strip().splitlines()
    assert lines[0] == "r,exact,decimal"
    assert lines[1] == "8,12797/2238390,0.00571705556225680"
    assert lines[-1].startswith("10,284/82225,")
