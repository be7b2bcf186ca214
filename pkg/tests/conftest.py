import pytest

from gosset.coxplane import build_coxeter_plane, dihedral_generators
from gosset.diagrams import build_diagram
from gosset.roots import root_system

#: criterion number -> (passed, description); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, desc = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'} - {desc}")


@pytest.fixture(scope="session")
def e8():
    return root_system(build_diagram("E8"))


@pytest.fixture(scope="session")
def e8_plane(e8):
    return build_coxeter_plane(e8)


@pytest.fixture(scope="session")
def e8_dihedral(e8, e8_plane):
    return dihedral_generators(e8_plane, e8)


@pytest.fixture(scope="session")
def h4():
    return root_system(build_diagram("H4"))


@pytest.fixture(scope="session")
def h4_plane(h4):
    return build_coxeter_plane(h4)
