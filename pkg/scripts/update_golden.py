"""Rewrite tests/golden/*.txt from the current CLI output.

Review the diff before committing: goldens are expectations, not snapshots
to refresh blindly.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from tests.cli_cases import CASES, GOLDEN_DIR, golden_path, run  # noqa: E402


def main() -> int:
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, (argv, expected) in CASES.items():
        result = run(argv)
        if result.returncode != expected:
            print(f"{name}: exit {result.returncode}, expected {expected}", file=sys.stderr)
            return 1
        golden_path(name).write_bytes(result.stdout + result.stderr)
        print(f"wrote {golden_path(name).name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
