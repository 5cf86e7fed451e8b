import pytest

from powergeom.parser import parse_differential_sum
from powergeom.presets import preset_sum

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def P():
    return parse_differential_sum


@pytest.fixture(scope="session")
def presets():
    return {name: preset_sum(name) for name in
            ("painleve1", "painleve2", "painleve3", "painleve4", "painleve5")}
