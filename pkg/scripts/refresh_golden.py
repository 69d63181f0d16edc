"""Regenerate the CLI golden files under tests/golden.

Run this only after checking that a change in output is intended; the diff
of the golden files is the review artifact.
"""

import io
import json
from pathlib import Path

from regulus.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, argv in cases.items():
        out = io.StringIO()
        code = run(argv, stdout=out, stderr=io.StringIO())
        (GOLDEN / name).write_text(out.getvalue())
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    main()
