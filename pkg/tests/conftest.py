import pytest

from dyndict import DynamicDictionary

from support import REPORT


@pytest.fixture
def three_patterns():
    """The running example dictionary {abba, aca, cbb}."""
    dd = DynamicDictionary()
    for p in (b"abba", b"aca", b"cbb"):
        dd.insert(p)
    return dd


def pytest_terminal_summary(terminalreporter):
    if REPORT:
        terminalreporter.section("acceptance")
        for line in REPORT:
            terminalreporter.write_line(line)
