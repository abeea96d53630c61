import pytest

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def record_criterion():
    """Collect one pass/fail line per acceptance criterion."""

    def _record(name: str, ok: bool, elapsed: float, bound: float | None = None):
        status = "PASS" if ok else "FAIL"
        timing = f"{elapsed:.2f}s" + (f" (bound {bound:.0f}s)" if bound else "")
        line = f"ACCEPTANCE {name}: {status} [{timing}]"
        _acceptance_lines.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
