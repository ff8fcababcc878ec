"""Command-line interface: outputs, exit codes, JSON round-trips."""

import json

import pytest

from numsem import frobenius, generator_set, genus
from numsem.cli import main

NUMERATOR_151_LINES = [
    "0 1", "308 -1", "625 -1", "628 -1", "779 1", "782 1",
    "3473 -1", "3476 -1", "3627 1", "3630 1", "3947 1", "4255 -1",
]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFrobenius:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "frobenius", "5", "6", "7", "8")
        assert code == 0
        assert out == "9\n"

    def test_two_generators(self, capsys):
        code, out, _ = run(capsys, "frobenius", "2", "3")
        assert code == 0
        assert out == "1\n"

    def test_gcd_failure(self, capsys):
        code, _, err = run(capsys, "frobenius", "6", "8", "10")
        assert code == 2
        assert "gcd is 2, must be 1" in err

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "frobenius", "--json", "5", "6", "7", "8")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "generators": [5, 6, 7, 8],
            "frobenius": 9,
            "genus": 5,
            "symmetric": True,
        }
        g = generator_set(payload["generators"])
        assert frobenius(g) == payload["frobenius"]
        assert genus(g) == payload["genus"]

    def test_rejects_zero_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobenius", "5", "0"])
        assert exc.value.code == 2
        assert "'0'" in capsys.readouterr().err

    def test_rejects_non_integer(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobenius", "5", "abc"])
        assert exc.value.code == 2
        assert "'abc'" in capsys.readouterr().err


class TestClassify:
    def test_published_example(self, capsys):
        code, out, _ = run(capsys, "classify", "151", "154", "157", "158")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "symmetric_not_ci"
        assert lines[1] == "c = 4255"
        assert lines[2] == "a = 308 625 628 3473 3476"

    def test_ci(self, capsys):
        code, out, _ = run(capsys, "classify", "8", "10", "12", "15")
        assert code == 0
        assert out.splitlines() == ["symmetric_ci", "relation degrees = 20 24 30"]

    def test_arity(self, capsys):
        code, _, err = run(capsys, "classify", "5", "6", "7")
        assert code == 2
        assert "4 generators" in err

    def test_json_invariants(self, capsys):
        code, out, _ = run(capsys, "classify", "--json", "5", "6", "7", "8")
        assert code == 0
        payload = json.loads(out)
        assert payload["class"] == "symmetric_not_ci"
        assert sum(payload["a_list"]) == 2 * payload["c"]
        g = generator_set(payload["generators"])
        assert payload["c"] == frobenius(g) + g.sigma


class TestNumerator:
    def test_two_generators(self, capsys):
        code, out, _ = run(capsys, "numerator", "2", "3")
        assert code == 0
        assert out.splitlines() == ["0 1", "6 -1"]

    def test_published_example(self, capsys):
        code, out, _ = run(capsys, "numerator", "151", "154", "157", "158")
        assert code == 0
        assert out.splitlines() == NUMERATOR_151_LINES

    def test_5678_shape(self, capsys):
        code, out, _ = run(capsys, "numerator", "5", "6", "7", "8")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 12
        assert lines[-1] == "35 -1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "numerator", "--json", "2", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"terms": [[0, 1], [6, -1]]}
        assert sum(c for _, c in payload["terms"]) == 0


class TestBounds:
    def test_exact_four(self, capsys):
        code, out, _ = run(capsys, "bounds", "--exact", "8", "13", "15", "17")
        assert code == 0
        lines = out.splitlines()
        assert "F = 35" in lines
        assert "bound_not_ci = 34.198" in lines

    def test_exact_7_8_9_13(self, capsys):
        code, out, _ = run(capsys, "bounds", "--exact", "7", "8", "9", "13")
        assert code == 0
        lines = out.splitlines()
        assert "F = 19" in lines
        assert "bound_not_ci = 17.715" in lines

    def test_three_generators(self, capsys):
        code, out, _ = run(capsys, "bounds", "151", "154", "157")
        assert code == 0
        value = float(out.split("=")[1])
        assert value == pytest.approx(2847.5, abs=0.05)

    def test_json_full_precision(self, capsys):
        code, out, _ = run(capsys, "bounds", "--json", "--exact", "5", "6", "7", "8")
        assert code == 0
        payload = json.loads(out)
        assert payload["frobenius"] == 9
        assert payload["bound_not_ci"] == pytest.approx(8.760266448864492, rel=1e-15)
        assert payload["tightness"] == pytest.approx(9 / 8.760266448864492, rel=1e-15)

    def test_validation(self, capsys):
        code, _, err = run(capsys, "bounds", "6", "8", "10")
        assert code == 2
        assert "gcd" in err


class TestSurvey:
    def test_writes_csv(self, capsys, tmp_path):
        out_file = tmp_path / "survey.csv"
        code, out, _ = run(
            capsys, "survey", "--min", "5", "--max", "10", "--out", str(out_file)
        )
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert lines[0].startswith("d1,d2,d3,d4,F,genus,class,c,")
        assert lines[1].startswith("5,6,7,8,9,5,symmetric_not_ci,35,8.760,")
        assert "symmetric_not_ci=2" in out

    def test_empty_range_header_only(self, capsys, tmp_path):
        out_file = tmp_path / "empty.csv"
        code, _, _ = run(
            capsys, "survey", "--min", "5", "--max", "6", "--out", str(out_file)
        )
        assert code == 0
        assert out_file.read_text() == (
            "d1,d2,d3,d4,F,genus,class,c,bound_notci,bound_ci,bound_ns,"
            "tightness,identity_ok\n"
        )

    def test_jobs_do_not_change_output(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "survey", "--min", "5", "--max", "14", "--out", str(a), "--jobs", "1")
        run(capsys, "survey", "--min", "5", "--max", "14", "--out", str(b), "--jobs", "4")
        assert a.read_bytes() == b.read_bytes()

    def test_jsonl(self, capsys, tmp_path):
        out_file = tmp_path / "survey.jsonl"
        code, _, _ = run(
            capsys, "survey", "--min", "5", "--max", "10", "--out", str(out_file),
            "--format", "jsonl",
        )
        assert code == 0
        rows = [json.loads(line) for line in out_file.read_text().splitlines()]
        assert [r["generators"] for r in rows] == [[5, 6, 7, 8], [5, 7, 8, 9]]
        assert all(r["identity_ok"] for r in rows)

    def test_stdout_when_no_out_file(self, capsys):
        code, out, err = run(capsys, "survey", "--min", "5", "--max", "10")
        assert code == 0
        assert out.splitlines()[0].startswith("d1,d2,d3,d4,")
        assert "classes:" in err

    def test_config_error(self, capsys):
        code, _, err = run(capsys, "survey", "--min", "5", "--max", "400")
        assert code == 2
        assert "cap" in err
