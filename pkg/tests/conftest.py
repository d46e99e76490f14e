import pytest

from whitehouse import ot_algebra, whitehouse_map

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """record(k, ok, note) stores one line for the acceptance summary."""
    def _record(k, ok, note=""):
        ACCEPTANCE[k] = (bool(ok), note)
        return ok
    return _record


@pytest.fixture
def fresh_tables():
    ot_algebra.clear_tables()
    whitehouse_map.clear_spaces()
    yield
    ot_algebra.clear_tables()
    whitehouse_map.clear_spaces()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {note}")
