import json
from unittest.mock import MagicMock, patch

import pytest

from eqos_package.main import build_parser, main
from eqos_package.reports import Report
from eqos_package.scripts import fixture_path


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# --- Parser ---

def test_subcommand_is_required():
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args([])
    assert excinfo.value.code == 2


def test_source_arguments_are_exclusive():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["presentation", "a.arr", "--covectors", "b.cov"])


# --- presentation ---

def test_presentation_os(capsys):
    code, out, _ = run_cli(capsys, "presentation", fixture_path("two_points.arr"), "--ring", "os")
    assert code == 0
    assert "command: presentation --ring os" in out
    assert "degree: 3" in out
    assert "== hilbert ==\nhf: 1 2 0 0\n" in out
    assert "e1*e2    [family 2 S=[1, 2]]" in out


def test_presentation_vg_counts_chambers(capsys):
    code, out, _ = run_cli(capsys, "presentation", fixture_path("two_points.arr"), "--ring", "vg")
    assert code == 0
    assert "total_dimension: 3" in out
    assert "vg_dimension_equals_chambers: PASS" in out


def test_presentation_from_covectors_as_json(capsys):
    code, out, _ = run_cli(capsys, "--json", "presentation", "--covectors", fixture_path("three_lines.covectors"))
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == 4
    assert data["sections"]["arrangement"] == {"hyperplanes": 3, "rank": 2}
    assert data["sections"]["hilbert"]["hf"] == [1, 4, 6, 6, 6]
    assert len(data["inputs"]) == 1


def test_presentation_no_prune_keeps_the_basis(capsys):
    _, pruned, _ = run_cli(capsys, "--json", "presentation", fixture_path("three_lines.arr"))
    _, raw, _ = run_cli(capsys, "--json", "presentation", fixture_path("three_lines.arr"), "--no-prune")
    assert json.loads(pruned)["sections"]["groebner"] == json.loads(raw)["sections"]["groebner"]


# --- compare ---

def test_compare_identical_files(capsys):
    path = fixture_path("two_points.arr")
    code, out, _ = run_cli(capsys, "compare", path, path)
    assert code == 0
    assert "verdict: NOT-DISTINGUISHED" in out
    assert "note: no implemented invariant separates these rings" in out


def test_compare_hilbert_functions(capsys):
    code, out, _ = run_cli(capsys, "--json", "compare", fixture_path("three_lines.arr"), fixture_path("boolean3.arr"))
    assert code == 0
    distinction = json.loads(out)["sections"]["distinction"]
    assert distinction["verdict"] == "DISTINGUISHED"
    assert distinction["certificate"] == "hilbert_function"


@pytest.mark.parametrize("argv", [
    ["compare", fixture_path("point.arr"), fixture_path("two_points.arr")],
    ["compare", fixture_path("point.arr")],
    ["compare", fixture_path("point.arr"), "--ideals", fixture_path("falk_J.ideal"), fixture_path("falk_J.ideal")],
])
def test_compare_input_errors(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert err.startswith("error:") or "\nerror:" in err


# --- Determinism ---

@pytest.mark.parametrize("argv", [
    ["presentation", fixture_path("three_lines.arr"), "--ring", "eq"],
    ["compare", fixture_path("point.arr"), fixture_path("point.arr")],
    ["salvetti", fixture_path("three_lines.arr"), "--equivariant"],
])
def test_repeated_runs_give_identical_reports(capsys, argv):
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert "== timing ==" in first
    assert first.split("== timing ==")[0] == second.split("== timing ==")[0]

    _, first_json, _ = run_cli(capsys, "--json", *argv)
    _, second_json, _ = run_cli(capsys, "--json", *argv)
    first_data, second_data = json.loads(first_json), json.loads(second_json)
    first_data.pop("timing")
    second_data.pop("timing")
    assert first_data == second_data


# --- salvetti ---

def test_salvetti_point(capsys):
    code, out, _ = run_cli(capsys, "salvetti", fixture_path("point.arr"), "--equivariant")
    assert code == 0
    assert "betti: 1 1" in out
    assert "borel: 1 2 2" in out
    assert "borel_equal_eq_hilbert: PASS" in out


def test_salvetti_cones_affine_input(capsys):
    code, out, _ = run_cli(capsys, "salvetti", fixture_path("two_points.arr"))
    assert code == 0
    assert "note: affine input was coned" in out
    assert "chambers: 6" in out


def test_salvetti_with_topes(capsys):
    code, out, _ = run_cli(capsys, "salvetti", "--covectors", fixture_path("three_lines.covectors"),
                           "--topes", fixture_path("three_lines.topes"))
    assert code == 0
    assert "betti: 1 3 2" in out


def test_salvetti_rejects_mismatched_topes(capsys, tmp_path):
    topes = tmp_path / "bad.topes"
    topes.write_text("n 3\n+++\n---\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "salvetti", "--covectors", fixture_path("three_lines.covectors"), "--topes", topes)
    assert code == 2
    assert "tope file does not match" in err
    code, _, _ = run_cli(capsys, "salvetti", fixture_path("point.arr"), "--topes", topes)
    assert code == 2


# --- errors and logging ---

def test_missing_file(capsys, tmp_path):
    code, out, err = run_cli(capsys, "presentation", tmp_path / "nope.arr")
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / "bad.arr"
    path.write_text("1 1\n0 1\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "presentation", path)
    assert code == 2
    assert "line 2" in err


def test_log_file(capsys, tmp_path):
    log_file = tmp_path / "eqos.log"
    code, _, _ = run_cli(capsys, "--log-level", "INFO", "--log-file", log_file, "presentation", fixture_path("point.arr"))
    assert code == 0
    assert "Loaded arrangement" in log_file.read_text(encoding="utf-8")


def test_failed_verdict_sets_exit_code(capsys):
    report = Report(command="corpus")
    report.verdict("psi", False)
    with patch("eqos_package.commands.corpus.run_corpus", MagicMock(return_value=report)) as mock_run:
        code, out, _ = run_cli(capsys, "--quiet", "corpus", "--size", "2", "--seed", "9", "--skip-salvetti")
    assert code == 3
    assert "psi: FAIL" in out
    kwargs = mock_run.call_args.kwargs
    assert kwargs["size"] == 2
    assert kwargs["seed"] == 9
    assert kwargs["skip_salvetti"] is True
    assert kwargs["show_progress"] is False


def test_reproduce_dispatch(capsys):
    report = Report(command="reproduce --example cone")
    with patch("eqos_package.commands.reproduce.reproduce", MagicMock(return_value=report)) as mock_reproduce:
        code, out, _ = run_cli(capsys, "reproduce", "--example", "cone", "--workers", "2")
    assert code == 0
    assert "command: reproduce --example cone" in out
    assert mock_reproduce.call_args.args == ("cone",)
    assert mock_reproduce.call_args.kwargs["workers"] == 2
