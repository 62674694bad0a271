import pytest

from fockgraph.fock import Mode
from fockgraph.graph import Orientation, from_adjacency

from helpers import PAW


@pytest.fixture
def paw():
    return from_adjacency(PAW, Mode.FERMIONIC, Orientation.UNDIRECTED)


@pytest.fixture
def paw_boson():
    return from_adjacency(PAW, Mode.BOSONIC, Orientation.UNDIRECTED)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
