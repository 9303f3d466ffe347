import pytest

from tools.run_walk_testcases import CASES_DIR, check_case, discover_testcases, parse_indices, run_cases

CASES = discover_testcases(CASES_DIR)


def test_cases_present():
    assert len(CASES) >= 8
    for path in CASES:
        assert path.with_name(path.stem + "_output.json").exists(), path.name


@pytest.mark.parametrize("path", CASES, ids=[p.stem for p in CASES])
def test_golden_case(path):
    passed, lines = check_case(path)
    assert passed, "\n".join(lines)


def test_runner_summary(capsys):
    total, successes, failures = run_cases(CASES[:2])
    assert (total, successes, failures) == (2, 2, 0)
    assert "Summary: total=2, successes=2, failures=0" in capsys.readouterr().out


def test_parse_indices():
    assert parse_indices([], 5) is None
    assert parse_indices(["all"], 5) is None
    assert parse_indices(["1", "3-4", "9"], 5) == {1, 3, 4}
