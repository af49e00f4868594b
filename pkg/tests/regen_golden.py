"""Rewrite tests/golden/*.json from the current CLI.  Review the diff before committing."""

import io
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from charp.cli import run_command  # noqa: E402
from cli_cases import CASES  # noqa: E402

GOLDEN = pathlib.Path(__file__).parent / "golden"

if __name__ == "__main__":
    for name, argv in CASES.items():
        out, err = io.StringIO(), io.StringIO()
        code = run_command(argv, out, err)
        record = {"argv": argv, "exit": code, "stdout": out.getvalue(), "stderr": err.getvalue()}
        (GOLDEN / f"{name}.json").write_text(json.dumps(record, indent=1, sort_keys=True) + "\n")
        print(name, code)
