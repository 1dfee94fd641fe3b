from pathlib import Path

import pytest

from pairweight.cli import parse_code_file, parse_iso_file
from pairweight.gf import make_field

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def load_code():
    def load(name):
        path = FIXTURES / name
        return parse_code_file((path if path.suffix else path.with_suffix(".code")).read_text())

    return load


@pytest.fixture(scope="session")
def load_iso():
    def load(name):
        path = FIXTURES / name
        return parse_iso_file((path if path.suffix else path.with_suffix(".iso")).read_text())

    return load


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        outcome = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{outcome}  {name}")
