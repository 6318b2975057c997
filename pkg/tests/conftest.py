import pytest

_ACCEPTANCE = {}


@pytest.fixture
def record():
    """Store one pass/fail line per acceptance criterion, then assert it."""

    def _record(number: int, ok: bool, detail: str):
        _ACCEPTANCE[number] = (bool(ok), detail)
        print(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, f"criterion {number}: {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
