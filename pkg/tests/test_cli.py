import csv
import io
import json
import subprocess
import sys

import pytest

from verlinde_bricks import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestDims:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "dims", "--genus", "2", "--level", "2")
        assert code == cli.EXIT_OK
        header, row = out.splitlines()
        assert header.split() == ["g", "k", "d", "d_twisted"]
        assert row.split() == ["2", "2", "10", "6"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "dims", "--genus", "1", "--level", "1..5", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["d"] for r in rows] == ["2", "3", "4", "5", "6"]
        assert [r["d_twisted"] for r in rows] == ["0", "1", "0", "1", "0"]

    def test_json_roundtrip_and_determinism(self, capsys):
        argv = ("dims", "--genus", "1..3", "--level", "1..4", "--format", "json", "--check-oracle")
        code, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert code == 0 and first == second
        doc = json.loads(first)
        assert doc["meta"]["command"] == "dims" and doc["meta"]["epsilon"] == 1
        assert doc["meta"]["backend"] in ("cython", "python")
        row = next(r for r in doc["rows"] if r["g"] == "3" and r["k"] == "4")
        assert int(row["d"]) == 329 and int(row["d_twisted"]) == 265

    def test_epsilon_does_not_change_dims(self, capsys):
        _, plus, _ = run(capsys, "dims", "--format", "csv", "--epsilon", "+1")
        _, minus, _ = run(capsys, "dims", "--format", "csv", "--epsilon", "-1")
        assert plus == minus


class TestBricks:
    def test_default(self, capsys):
        code, out, err = run(capsys, "bricks", "--genus", "2", "--level", "2..4", "--format", "csv")
        assert code == 0, err
        rows = list(csv.DictReader(io.StringIO(out)))
        got = {(r["k"], r["space"], r["index"]): (r["count"], r["dim"]) for r in rows}
        assert got[("4", "Z", "h=0")] == ("1", "5")
        assert got[("4", "Z", "h!=0")] == ("15", "2")
        assert got[("4", "Z'", "h!=0")] == ("15", "1")
        assert got[("2", "Z", "Arf=0")] == ("10", "1")
        assert got[("2", "Z'", "Arf=1")] == ("6", "1")
        assert got[("3", "Z", "conj(Z1)")] == ("5", "4")
        assert all(r["reassembly"] == "ok" and r["decomposition"] == "checked" for r in rows)

    def test_forced_wrong_mode_is_inconsistent(self, capsys):
        code, _, err = run(capsys, "bricks", "--genus", "2", "--level", "2", "--mode", "mod4-zero")
        assert code == cli.EXIT_INCONSISTENT
        assert "inconsistency:" in err

    def test_large_genus_skips_decomposition(self, capsys):
        code, out, _ = run(capsys, "bricks", "--genus", "6", "--level", "4", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert {r["decomposition"] for r in rows} == {"skipped"}
        assert int(rows[1]["dim"]) == (3**5 + 1) // 2


class TestVerify:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "pairing,verlinde", "--genus", "1..2", "--level", "1..6")
        assert code == 0
        assert out and all(line.startswith("PASS") for line in out.splitlines())

    def test_characters_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "characters", "--genus", "2", "--level", "1..4", "--format", "json")
        assert code == 0
        assert {r["status"] for r in json.loads(out)["rows"]} == {"PASS"}


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            ("dims", "--genus", "0"),
            ("dims", "--genus", "3..1"),
            ("dims", "--level", "x"),
            ("dims", "--epsilon", "2"),
            ("verify", "--suite", "nope"),
            ("dims", "--precision-bits", "16"),
            ("frobnicate",),
            (),
        ],
    )
    def test_exit_two(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == cli.EXIT_USAGE

    def test_bad_precision_env(self, capsys, monkeypatch):
        monkeypatch.setenv("VERLINDE_BRICKS_PRECISION_BITS", "8")
        code, _, err = run(capsys, "dims", "--genus", "1", "--level", "1")
        assert code == cli.EXIT_USAGE and "precision" in err

    def test_help_is_ok(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == cli.EXIT_OK and "dims" in out

    def test_parse_range(self):
        assert cli.parse_range("2..4", "genus") == [2, 3, 4]
        assert cli.parse_range("7", "level") == [7]


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "verlinde_bricks", "dims", "--genus", "2", "--level", "4", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout.splitlines()[1] == "2,4,35,19"
