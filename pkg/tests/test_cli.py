import json
from fractions import Fraction

import pytest

from walk_app.emit import parse_exact, render_decimal
from walk_app.main import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, main, profile_lines
from walk_app.schemas_output import DistributionOutput, PeakReport, VerifyReport


def test_simulate_csv(capsys):
    assert main(["simulate", "--steps", "1"]) == EXIT_OK
    assert capsys.readouterr().out == "position,probability\n-1,0.5\n1,0.5\n"


def test_simulate_two_steps_csv(capsys):
    assert main(["simulate", "--memory", "2", "--steps", "2", "--init", "single"]) == EXIT_OK
    assert capsys.readouterr().out == "position,probability\n-2,0.25\n0,0.5\n2,0.25\n"


def test_simulate_json_round_trips(tmp_path):
    out = tmp_path / "nested" / "dist.json"
    assert main(["simulate", "--memory", "0", "--steps", "40", "--init", "symmetric", "--format", "json", "--out", str(out)]) == EXIT_OK
    data = DistributionOutput.model_validate_json(out.read_text(encoding="utf-8"))
    probs = {e.k: parse_exact(e.p) for e in data.entries}
    assert sum(probs.values()) == 1
    assert all(probs[k] == probs.get(-k) for k in probs)
    assert [e.k for e in data.entries] == sorted(probs)


def test_csv_precision_and_line_endings(tmp_path):
    out = tmp_path / "dist.csv"
    assert main(["simulate", "--memory", "0", "--steps", "3", "--precision", "3", "--out", str(out)]) == EXIT_OK
    raw = out.read_bytes()
    assert b"\r\n" not in raw
    assert raw.decode("utf-8").splitlines() == ["position,probability", "-3,0.125", "-1,0.125", "1,0.625", "3,0.125"]


def test_render_decimal():
    assert render_decimal(Fraction(1, 3), 5) == "0.33333"
    assert render_decimal(Fraction(1, 2), 12) == "0.5"


def test_closed_form_and_oracle_commands(capsys):
    assert main(["closed-form", "--steps", "3"]) == EXIT_OK
    closed = capsys.readouterr().out
    assert main(["oracle", "--steps", "3"]) == EXIT_OK
    assert capsys.readouterr().out == closed


def test_oracle_cap(capsys):
    assert main(["oracle", "--steps", "12", "--max-oracle", "10"]) == EXIT_INVALID
    assert "limit" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["simulate", "--memory", "3"],
        ["simulate", "--steps", "-1"],
        ["simulate", "--format", "xml"],
        ["simulate", "--precision", "0"],
        ["simulate", "--init", "uniform"],
        ["simulate", "--init", "file:does-not-exist.json"],
        ["closed-form", "--steps", "3", "--memory", "1"],
        ["oracle", "--steps", "3", "--init", "symmetric"],
        ["profile"],
        ["profile", "RLXR"],
    ],
)
def test_invalid_input_exit_code(argv):
    assert main(argv) == EXIT_INVALID


def test_unknown_command_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["animate"])
    assert exc.value.code == 2


def test_custom_init_file(tmp_path, capsys):
    init = tmp_path / "init.json"
    init.write_text(json.dumps({"memory": 2, "records": [{"n3": 0, "n2": 1, "n1": 0, "p": 0, "re": 1}]}), encoding="utf-8")
    assert main(["simulate", "--steps", "1", "--init", f"file:{init}"]) == EXIT_OK
    assert capsys.readouterr().out == "position,probability\n-1,0.5\n1,0.5\n"


def test_bad_custom_init_file(tmp_path, capsys):
    init = tmp_path / "init.json"
    init.write_text(json.dumps({"memory": 2, "records": [{"n3": 0, "n2": 1, "n1": 0, "p": 0, "re": 2}]}), encoding="utf-8")
    assert main(["simulate", "--steps", "1", "--init", f"file:{init}"]) == EXIT_INVALID
    assert "norm" in capsys.readouterr().err


def test_profile_lines():
    lines = profile_lines("RLRL")
    assert lines[0] == "mask:    I\u0304 S S\u0304 I"
    assert "phase:   -1" in lines
    assert "sign:    -1 (match)" in lines
    assert "part:    j3/110/single-single" in lines


def test_profile_of_non_walk_sequence(capsys):
    assert main(["profile", "LRRLLLRRLRLRRRLLLLR"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "I M\u0304 M M\u0304 S S\u0304 S M\u0304 M I\u0304" in out
    assert "sign:" not in out


@pytest.mark.parametrize(
    "seq, reason",
    [("RRRR", "no L cluster"), ("L", "only the marginal L cluster"), ("RL", "only the marginal L cluster")],
)
def test_profile_without_classifiable_end(seq, reason, capsys):
    assert main(["profile", seq]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("mask:    ")
    assert lines[1:] == [f"profile: none ({reason})"]


def test_peaks_json(capsys):
    assert main(["peaks", "--steps", "3", "--format", "json"]) == EXIT_OK
    report = PeakReport.model_validate_json(capsys.readouterr().out)
    assert report.symmetric
    assert [(p.k, p.p) for p in report.peaks] == [(-1, "3/8")]
    assert report.variance == "3/1"


def test_peaks_csv(capsys):
    assert main(["peaks", "--memory", "1", "--steps", "40", "--init", "symmetric"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "position,probability"
    assert lines[1].startswith("0,")
    assert lines[-1].startswith("# symmetric=")


def test_verify_passes_and_writes_report(tmp_path):
    out = tmp_path / "verify.json"
    assert main(["verify", "--steps", "6", "--out", str(out)]) == EXIT_OK
    report = VerifyReport.model_validate_json(out.read_text(encoding="utf-8"))
    assert report.passed
    assert report.steps_checked == [1, 2, 3, 4, 5, 6]
    assert report.deviations is not None
    assert report.deviations.parts_checked == 58


def test_verify_mismatch_exit_code(monkeypatch, capsys):
    from dataclasses import replace

    from closed_form import crosscheck
    from closed_form.catalog import PARTS, find_part, replace_part

    part = find_part("j5/010/single-single")
    broken = replace_part(PARTS, part.with_reference(replace(part.reference, sign="1")))
    original = crosscheck.verify

    def verify_broken(limit, **kwargs):
        return original(limit, parts=broken, **kwargs)

    monkeypatch.setattr("walk_app.main.verify", verify_broken)
    assert main(["verify", "--steps", "2"]) == EXIT_MISMATCH
    assert "j5/010/single-single" in capsys.readouterr().err


def test_verify_beyond_cap():
    assert main(["verify", "--steps", "12", "--max-oracle", "10"]) == EXIT_INVALID


def test_stdout_output_follows_redirection():
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["simulate", "--steps", "1"]) == EXIT_OK
    assert buf.getvalue() == "position,probability\n-1,0.5\n1,0.5\n"
