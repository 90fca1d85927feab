from __future__ import annotations

import json

import pytest
import yaml
from click.testing import CliRunner

from src.cli import cli


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def run_json(runner, *args):
    result = runner.invoke(cli, list(args))
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)


def test_roots(runner):
    document = run_json(runner, "--type", "B2", "roots")
    entry = document["types"]["B2"]
    assert entry["coxeter_number"] == 4
    assert len(entry["positive_roots"]) == 4


def test_plain_moment_graph_as_json(runner):
    document = run_json(runner, "--type", "A2", "moment-graph")
    assert document["flavor"] == "plain"
    assert len(document["nodes"]) == 6
    assert len(document["edges"]) == 9
    assert {"tail": "e", "head": "s1", "label": "a1", "root": [1, 0]} in document["edges"]


def test_modified_moment_graph_as_yaml(runner):
    result = runner.invoke(cli, ["--type", "A2", "--format", "yaml", "moment-graph", "--modified", "e"])
    assert result.exit_code == 0
    document = yaml.safe_load(result.stdout)
    assert document["minimal_direction"] == "e"
    assert {"tail": "s1", "head": "e", "label": "a1", "root": [1, 0]} in document["edges"]


def test_moment_graph_as_dot(runner):
    result = runner.invoke(cli, ["--type", "B2", "--format", "dot", "moment-graph"])
    assert result.exit_code == 0
    assert result.stdout.startswith("digraph B2_plain {")
    assert '"e" -> "s1" [label="a1"];' in result.stdout
    assert result.stdout.count(" -> ") == 16


def test_undirected_moment_graph_of_a1(runner):
    result = runner.invoke(cli, ["--type", "A1", "--format", "dot", "moment-graph", "--undirected"])
    assert result.exit_code == 0
    assert result.stdout.startswith("graph A1_undirected {")
    assert '"e" -- "s1" [label="a1"];' in result.stdout


def test_moment_graph_written_to_a_directory(runner, tmp_path):
    result = runner.invoke(cli, ["--type", "A2", "--format", "dot", "--out", str(tmp_path), "moment-graph"])
    assert result.exit_code == 0
    assert (tmp_path / "A2_plain.gv").read_text().startswith("digraph")
    assert "Generated" in result.stdout


def test_save_uses_the_configured_output_directory(runner, tmp_path, monkeypatch):
    monkeypatch.setattr("src.cli.OUTPUT_DIR", str(tmp_path / "saved"))
    result = runner.invoke(cli, ["--type", "A2", "--save", "roots"])
    assert result.exit_code == 0
    assert "Generated" in result.stdout
    assert list((tmp_path / "saved").iterdir())


def test_fold_reports_positivity(runner):
    document = run_json(runner, "--type", "A2", "--orientation", "w0", "fold", "--word", "s0 s1 s2", "--folds", "1")
    assert document["folds"] == [1]
    assert document["pattern"] == ["a1+a2"]
    assert document["positively_folded"] is True
    assert document["fold_positivity"] == {"1": True}
    assert document["minimal_base"] is True
    assert document["spherical_direction"] == document["predicted_direction"]


def test_fold_warns_about_non_reduced_words(runner):
    result = runner.invoke(cli, ["--type", "A2", "fold", "--word", "s1 s1"])
    assert result.exit_code == 0
    assert "WARNING" in result.stderr
    assert json.loads(result.stdout)["minimal_base"] is False


def test_bad_word_is_a_usage_error(runner):
    result = runner.invoke(cli, ["--type", "A2", "fold", "--word", "s7"])
    assert result.exit_code == 2
    assert "Error" in result.stderr


def test_unknown_type_is_a_usage_error(runner):
    result = runner.invoke(cli, ["--type", "E9", "roots"])
    assert result.exit_code == 2


def test_patterns_from_s2(runner):
    document = run_json(runner, "--type", "A2", "--orientation", "w0", "patterns", "--chamber", "s2")
    assert document["patterns"]["0"] == [[]]
    assert ["a1+a2", "a1"] in document["patterns"]["2"]
    assert ["a1+a2", "a1"] in document["maximal"]


def test_verify_succeeds_with_exit_code_zero(runner):
    document = run_json(runner, "--type", "A2", "verify", "--theorem", "crossings", "--radius", "3")
    assert document["success"] is True
    assert document["results"][0]["scope"]["radius"] == 3


def test_verify_patterns_reports_completeness_depths(runner):
    document = run_json(runner, "--type", "A2", "verify", "--theorem", "patterns", "--radius", "4")
    result = document["results"][0]
    assert result["details"]["completeness_depths"]["e"]["l_p"] == 3
    assert len(result["notes"]) == 6


def test_verify_bruhat_interval(runner):
    document = run_json(runner, "--type", "B2", "verify", "--theorem", "bruhat")
    assert document["success"] is True
    assert len(document["results"]) == 1


@pytest.mark.slow
def test_verify_reports_counterexamples_with_exit_code_one(runner):
    result = runner.invoke(
        cli, ["--type", "A2", "--orientation", "s2s1", "verify", "--theorem", "independence", "--radius", "8"]
    )
    assert result.exit_code == 1
    assert json.loads(result.stdout)["success"] is False


def test_xset(runner):
    document = run_json(runner, "--type", "A2", "--orientation", "w0", "xset", "--chamber", "e", "--radius", "8")
    assert document["l_p"] == 3
    assert document["count"] == 1
    assert document["alcoves"][0]["translation"] == [2, 2]
    assert document["inside_shrunken_chamber"] == 0


def test_xset_for_one_pattern(runner):
    document = run_json(
        runner, "--type", "A2", "--orientation", "w0", "xset", "--chamber", "e", "--radius", "3", "--pattern", "a1"
    )
    assert document["count"] >= 1


def test_xset_rejects_negative_pattern_roots(runner):
    result = runner.invoke(
        cli, ["--type", "A2", "--orientation", "w0", "xset", "--chamber", "e", "--radius", "3", "--pattern", "-a1"]
    )
    assert result.exit_code == 2
    assert "positive" in result.stderr


def test_shadow(runner):
    document = run_json(runner, "--type", "A2", "--orientation", "e", "shadow", "--word", "s1")
    assert document["count"] == 2
    assert document["chambers"] == ["e", "s1"]


def test_render_svg(runner):
    result = runner.invoke(cli, ["--type", "B2", "render", "--radius", "3", "--shrink", "1"])
    assert result.exit_code == 0
    assert result.stdout.startswith("<svg")


def test_render_draws_galleries_from_a_file(runner, tmp_path):
    fold = runner.invoke(cli, ["--type", "A2", "fold", "--word", "s0 s1 s2", "--folds", "2"])
    path = tmp_path / "gallery.json"
    path.write_text(fold.stdout)
    result = runner.invoke(cli, ["--type", "A2", "render", "--radius", "4", "--galleries", str(path)])
    assert result.exit_code == 0
    assert 'id="gallery-1"' in result.stdout
    assert "<circle" in result.stdout


def test_render_rejects_rank_three(runner):
    result = runner.invoke(cli, ["--type", "A3", "render"])
    assert result.exit_code == 2
    assert "rank" in result.stderr
