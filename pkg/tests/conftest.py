import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from edgesimple.generators import builtin_zoo  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

# criterion number -> list of (part, passed); filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}


@pytest.fixture(scope="session")
def zoo():
    return builtin_zoo()


@pytest.fixture(scope="session")
def zoo_by_label(zoo):
    return {p.label: p for p in zoo}


@pytest.fixture(scope="session")
def zoo_oracles():
    return json.loads((FIXTURES / "zoo_oracles.json").read_text())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[n]
        status = "PASS" if all(ok for _, ok in parts) else "FAIL"
        failed = [name for name, ok in parts if not ok]
        extra = f"  (failed: {'; '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n}: {status}{extra}")
