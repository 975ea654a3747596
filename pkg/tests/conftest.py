import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion as PASS/FAIL for the terminal summary."""
    state = {}

    def record(label: str, ok: bool, detail: str = ""):
        state["line"] = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        return ok

    yield record
    if "line" in state:
        ACCEPTANCE_LINES.append(state["line"])
    else:
        ACCEPTANCE_LINES.append(f"FAIL  {request.node.name}  (raised before recording)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
