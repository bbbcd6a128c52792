import random

import pytest

from monocol.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240611)


_ACCEPTANCE: dict[int, str] = {}


class AcceptanceLog:
    def __init__(self, number: int):
        self.number = number

    def record(self, ok: bool, detail: str):
        line = f"criterion {self.number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE[self.number] = line
        print(line)
        assert ok, detail


@pytest.fixture
def acceptance(request):
    return AcceptanceLog(int(request.node.get_closest_marker("criterion").args[0]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[n])
