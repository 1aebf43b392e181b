import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def frozen():
    return json.loads((DATA / "oracle_frozen.json").read_text())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, desc in mod.DESCRIPTIONS.items():
        parts = mod.RESULTS.get(n)
        if not parts:
            tr.write_line(f"criterion {n}: NOT RUN  {desc}")
            continue
        failed = [f"{name} [{detail}]" if detail else name for name, ok, detail in parts if not ok]
        verdict = "PASS" if not failed else "FAIL"
        line = f"criterion {n}: {verdict}  {desc} ({len(parts) - len(failed)}/{len(parts)} parts)"
        if failed:
            line += "; failing: " + "; ".join(failed)
        tr.write_line(line)
