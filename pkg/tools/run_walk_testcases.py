import sys
import json
import argparse
from pathlib import Path
import traceback
import difflib

# Ensure project root is on sys.path so imports work the same as other tools/tests
sys.path.append(str(Path(__file__).resolve().parents[1]))

from walk_app.main import run_case
from walk_app.schemas_input import WalkCase

CASES_DIR = Path(__file__).resolve().parents[1] / "Walk TestCases"


def discover_testcases(test_dir: Path):
    # Expected outputs live next to the cases as X_output.json
    return sorted(p for p in test_dir.glob("*.json") if not p.stem.endswith("_output"))


def load_case_from_file(path: Path) -> WalkCase:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return WalkCase.model_validate(data)


def check_case(path: Path):
    """(passed, message lines) for one case file."""
    case = load_case_from_file(path)
    # Same code path as the CLI, in json mode
    output_text = run_case(case).model_dump_json(indent=2)
    output_path = path.with_name(path.stem + "_output.json")
    if not output_path.exists():
        return False, [f"Missing expected output file: {output_path}"]

    expected_text = output_path.read_text(encoding="utf-8")
    # Compare parsed JSON, not text
    if json.loads(expected_text) == json.loads(output_text):
        return True, [f"PASS: Output matches expected file: {output_path}"]

    lines = [f"FAIL: Output differs from expected file: {output_path}"]
    # Show at most 200 diff lines
    lines += list(difflib.unified_diff(
        expected_text.splitlines(),
        output_text.splitlines(),
        fromfile=str(output_path),
        tofile="current_run",
        lineterm="",
    ))[:200]
    return False, lines


def run_cases(paths, selected_indices=None):
    total = 0
    successes = 0
    failures = 0
    for idx, p in enumerate(paths, start=1):
        # None means run everything
        if selected_indices and idx not in selected_indices:
            continue
        total += 1
        print("\n== Test case {}: {} ==".format(idx, p.name))
        try:
            passed, lines = check_case(p)
        except Exception as e:
            failures += 1
            print("ERROR running test case {}: {}".format(idx, e))
            traceback.print_exc()
            continue
        for line in lines:
            print(line)
        if passed:
            successes += 1
        else:
            failures += 1

    print("\nSummary: total={}, successes={}, failures={}".format(total, successes, failures))
    return total, successes, failures


def parse_indices(arg_list, max_idx):
    # Accept strings like: 1 2 3 or ranges like 1-3
    if not arg_list:
        return None
    indices = set()
    for token in arg_list:
        token = token.strip()
        if token.lower() in ("all", "a"):
            return None
        try:
            if "-" in token:
                a, b = (int(x) for x in token.split("-", 1))
                indices.update(range(max(1, a), min(max_idx, b) + 1))
            elif 1 <= int(token) <= max_idx:
                indices.add(int(token))
        except ValueError:
            continue
    return indices


def main() -> int:
    parser = argparse.ArgumentParser(description="Replay the golden walk cases and diff against expected output.")
    parser.add_argument("cases", nargs="*", help="Case numbers (1-based), ranges (1-3), or 'all'. If omitted runs all.")
    args = parser.parse_args()

    if not CASES_DIR.exists():
        print("Test cases directory not found:", CASES_DIR)
        return 2

    files = discover_testcases(CASES_DIR)
    if not files:
        print("No JSON test files found in:", CASES_DIR)
        return 2

    selected = parse_indices(args.cases, len(files))
    # List all cases so the numbers can be reused on the next run
    print("Found {} test cases:".format(len(files)))
    for i, p in enumerate(files, start=1):
        print("  {}. {}".format(i, p.name))

    _, _, failures = run_cases(files, selected)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
