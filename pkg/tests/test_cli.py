"""Command-line surface."""

import json

import pytest

from btusearch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParams:
    def test_example(self, capsys):
        code, out, _ = run(capsys, "params", "-m", "12", "-r", "3")
        assert code == 0
        assert out == "b=3 k=2\nbetas: 6+6 | 12\n"

    def test_degenerate_exits_one(self, capsys):
        code, out, err = run(capsys, "params", "-m", "7", "-r", "3")
        assert code == 1
        assert out == "b=7 k=1\n"
        assert "degenerate" in err


class TestSearch:
    def test_json_report(self, capsys):
        code, out, _ = run(
            capsys, "search", "-m", "9", "-r", "3", "--format", "json", "--no-timing"
        )
        assert code == 0
        data = json.loads(out)
        assert data["girth"] == 6
        assert data["b"] == 1 and data["k"] == 3

    def test_repeat_invocations_byte_identical(self, capsys):
        _, first, _ = run(capsys, "search", "-m", "9", "-r", "3", "--no-timing")
        _, second, _ = run(capsys, "search", "-m", "9", "-r", "3", "--no-timing")
        assert first == second

    def test_timing_present_by_default(self, capsys):
        _, out, _ = run(capsys, "search", "-m", "4", "-r", "2")
        assert "elapsed_seconds" in json.loads(out)

    def test_degenerate_exits_one(self, capsys):
        code, _, err = run(capsys, "search", "-m", "6", "-r", "3")
        assert code == 1
        assert "error" in err

    def test_matrix_output(self, capsys, tmp_path):
        out_file = tmp_path / "btu.txt"
        code, _, _ = run(
            capsys, "search", "-m", "4", "-r", "2",
            "--format", "matrix", "-o", str(out_file),
        )
        assert code == 0
        rows = out_file.read_text().strip().splitlines()
        assert len(rows) == 4


class TestOracleVerify:
    def test_oracle_json(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "-m", "3", "-r", "3", "--fix-first", "--no-timing"
        )
        assert code == 0
        data = json.loads(out)
        assert data["max_girth"] == 4
        assert data["first_slot_fixed"] is True

    def test_oracle_budget_refusal(self, capsys):
        code, _, err = run(capsys, "oracle", "-m", "9", "-r", "3")
        assert code == 1
        assert "budget" in err

    def test_verify_equal(self, capsys):
        code, out, _ = run(capsys, "verify", "-m", "4", "-r", "3", "--no-timing")
        assert code == 0
        data = json.loads(out)
        assert data["equal"] is True
        assert data["engine_girth"] == data["oracle_girth"] == 4

    def test_verify_engine_inapplicable(self, capsys):
        code, out, _ = run(capsys, "verify", "-m", "6", "-r", "3", "--no-timing")
        assert code == 0
        data = json.loads(out)
        assert data["engine_girth"] is None
        assert data["equal"] is None
        assert "inapplicable" in data["engine_note"]
        assert data["oracle_girth"] == 4


class TestGirthCommand:
    def test_matrix_and_alist_inputs(self, capsys, tmp_path):
        _, matrix_text, _ = run(
            capsys, "search", "-m", "5", "-r", "2", "--format", "matrix"
        )
        matrix_file = tmp_path / "m.txt"
        matrix_file.write_text(matrix_text)
        code, out, _ = run(capsys, "girth", "-i", str(matrix_file))
        assert code == 0 and out == "10\n"

        _, alist_text, _ = run(
            capsys, "search", "-m", "5", "-r", "2", "--format", "alist"
        )
        alist_file = tmp_path / "m.alist"
        alist_file.write_text(alist_text)
        code, out, _ = run(capsys, "girth", "-i", str(alist_file))
        assert code == 0 and out == "10\n"

    def test_witness(self, capsys, tmp_path):
        _, matrix_text, _ = run(
            capsys, "search", "-m", "4", "-r", "2", "--format", "matrix"
        )
        f = tmp_path / "m.txt"
        f.write_text(matrix_text)
        code, out, _ = run(capsys, "girth", "-i", str(f), "--witness")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "8"
        assert len(lines[1].split()) == 8


class TestSmallCommands:
    def test_candidates(self, capsys):
        code, out, _ = run(capsys, "candidates", "-n", "3")
        assert code == 0
        assert out.splitlines() == ["2 3 1", "3 1 2"]

    def test_candidates_with_base_and_limit(self, capsys):
        code, out, _ = run(
            capsys, "candidates", "-n", "4", "--base", "4 1 2 3", "--limit", "2"
        )
        assert code == 0
        assert len(out.splitlines()) == 2

    def test_scale(self, capsys):
        code, out, _ = run(capsys, "scale", "-p", "3 4 1 2", "-k", "2")
        assert code == 0
        assert out == "3 4 1 2 7 8 5 6\n"

    def test_enum_z(self, capsys):
        code, out, _ = run(capsys, "enum-z", "-m", "4", "-r", "3")
        assert code == 0
        assert out.splitlines() == [
            "2 1 4 3 | 1 2 3 4 | 3 4 2 1",
            "2 1 4 3 | 1 2 3 4 | 4 3 1 2",
        ]

    def test_cayley(self, capsys):
        code, out, _ = run(capsys, "cayley", "-m", "9", "-r", "3", "-i", "1")
        assert code == 0
        assert out == "degree_sym=2 order=2 node_degree=1 transition_bound=3\n"

    def test_export(self, capsys, tmp_path):
        _, matrix_text, _ = run(
            capsys, "search", "-m", "4", "-r", "2", "--format", "matrix"
        )
        f = tmp_path / "m.txt"
        f.write_text(matrix_text)
        code, out, _ = run(capsys, "export", "-i", str(f), "--format", "dot")
        assert code == 0
        assert out.startswith("graph btu {")
        code, out, _ = run(capsys, "export", "-i", str(f), "--format", "alist")
        assert code == 0
        assert out.splitlines()[0] == "4 4"


class TestUsageErrors:
    def test_unknown_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["params", "-m", "4", "-r", "2", "--bogus"])
        assert err.value.code == 2

    def test_missing_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2
