"""Simple runner: reads one golden case by name, prints its result and writes X_output.json.

Use it to (re)generate an expected output after checking it by hand.
"""

import sys
from pathlib import Path
import traceback

# Ensure project root is on sys.path so local imports work
sys.path.append(str(Path(__file__).resolve().parents[1]))

from tools.run_walk_testcases import CASES_DIR, load_case_from_file
from walk_app.main import run_case

# Keep filenames in a simple array; choose one with INDEX.
FILES = [
    "Memory2SingleStep1.json",
    "Memory2SingleStep3.json",
    "Memory1SingleStep2.json",
    "Memory0SingleStep3.json",
    "Memory0SymmetricStep1.json",
    "OracleStep3.json",
    "ClosedFormStep3.json",
    "PeaksMemory2Step3.json",
]
INDEX = 1  # <-- change this integer to select a different file from FILES


def main() -> int:
    try:
        name = FILES[INDEX]
    except IndexError:
        print(f"Index {INDEX} out of range (0..{len(FILES)-1})", file=sys.stderr)
        return 2

    # Cases live in "Walk TestCases" at the project root
    test_file = CASES_DIR / name
    if not test_file.exists():
        print(f"Error: test file not found: {test_file}", file=sys.stderr)
        return 2

    try:
        output_text = run_case(load_case_from_file(test_file)).model_dump_json(indent=2)
    except Exception:
        print("Error while running test:", file=sys.stderr)
        traceback.print_exc()
        return 1

    # Echo first, then write next to the case so run_walk_testcases picks it up
    print(output_text)
    output_path = test_file.with_name(test_file.stem + "_output.json")
    output_path.write_text(output_text + "\n", encoding="utf-8")
    print(f"Wrote output JSON to: {output_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
