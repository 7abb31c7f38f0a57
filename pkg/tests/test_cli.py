"""Command-line interface: schemas, determinism, exit codes."""

import json

import pytest

from districtgame import sample_data_path
from districtgame.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestElect:
    def test_decided_election_has_no_randomness(self, capsys):
        payload = run_json(capsys, "elect", "--districts", "4,0", "--n", "4", "--m", "1/2")
        assert payload["expected_chooser_seats"] == "1"
        assert payload["expected_cutter_seats"] == "1"
        assert payload["realized_chooser_seats"] == 1
        assert payload["statuses"] == ["chooser", "cutter"]

    def test_paired_mode_with_seed(self, capsys):
        payload = run_json(
            capsys, "elect", "--districts", "0,4,4,4", "--n", "8",
            "--m", "1/2", "--mode", "paired", "--seed", "7",
        )
        assert payload["expected_chooser_seats"] == "3/2"
        assert payload["seed"] == 7
        assert payload["effective_threshold"] == 4
        assert payload["realized_chooser_seats"] in (1, 2)

    def test_decimal_threshold_and_shares(self, capsys):
        payload = run_json(
            capsys, "elect", "--shares", "0.7,0.4", "--m", "0.63",
        )
        assert payload["m"] == "63/100"
        assert payload["statuses"] == ["chooser", "randomized"]

    def test_byte_identical_across_runs(self, capsys):
        args = ("elect", "--districts", "1,1,2", "--n", "2", "--mode", "coins", "--seed", "11")
        first = run(capsys, *args)
        second = run(capsys, *args)
        assert first == second


class TestCut:
    def test_safe_division(self, capsys):
        payload = run_json(capsys, "cut", "--D", "4", "--n", "8", "--b-total", "12")
        assert payload["districts"] == [8, 4, 0, 0]
        assert payload["value"] == "3/2"
        assert payload["contains_half"] is True

    def test_infeasible_construction_exits_one(self, capsys):
        code, out, err = run(capsys, "cut", "--D", "2", "--n", "3", "--b-total", "1")
        assert code == 1
        assert "error" in err


class TestSolve:
    def test_exhaustive_instance(self, capsys):
        payload = run_json(capsys, "solve", "--D", "2", "--n", "4", "--b-total", "3")
        assert payload["value"] == "1"
        assert payload["prediction"] == "1"
        assert payload["matches_prediction"] is True
        assert payload["optimal_districtings"] == [[3, 0], [2, 1]]


class TestVerify:
    def test_small_sweep(self, capsys):
        payload = run_json(capsys, "verify", "--D-max", "2", "--n-max", "2")
        assert payload["value_violations"] == []
        assert payload["half_violations"] == []
        assert len(payload["records"]) == 5  # D=2, n=2, b_total 0..4

    def test_strict_sweep_hits_the_known_gap(self, capsys):
        code, out, err = run(capsys, "verify", "--D-max", "2", "--n-max", "4", "--strict")
        assert code == 1
        assert "(2, 4, 1)" in err


class TestBestResponseCommand:
    def test_districts_mode(self, capsys):
        payload = run_json(capsys, "best-response", "--districts", "4,1,1", "--n", "4")
        assert payload["value"] == "2"
        assert payload["representative"] == "3/4"
        assert payload["contains_half"] is False
        assert payload["delta"] == "1"


class TestAnalyzeAndDiagram:
    def test_analyze_writes_files(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("DISTRICTGAME_OUTDIR", str(tmp_path))
        payload = run_json(
            capsys, "analyze", "--csv", str(sample_data_path()),
            "--out", "report.json", "--svg", "curve.svg",
        )
        assert payload["seats_at_half"] == "3"
        assert payload["best_value"] == "5"
        assert payload["delta"] == "2"
        written = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
        assert written == payload
        assert (tmp_path / "curve.svg").read_bytes().startswith(b"<svg")

    def test_diagram_to_stdout(self, capsys):
        code, out, err = run(
            capsys, "diagram", "--csv", str(sample_data_path()), "--m", "0.63",
        )
        assert code == 0
        assert out.startswith("<svg") and out.rstrip().endswith("</svg>")

    def test_missing_csv_is_a_domain_error(self, capsys, tmp_path):
        code, out, err = run(capsys, "analyze", "--csv", str(tmp_path / "nope.csv"))
        assert code == 1
        assert "error" in err


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_required_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["cut", "--D", "4"])
        assert exc.value.code == 2

    def test_domain_error_exit_code(self, capsys):
        code, out, err = run(capsys, "elect", "--districts", "2,2", "--n", "4", "--m", "0.4")
        assert code == 1
        assert "error" in err
