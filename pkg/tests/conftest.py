import pytest

from htcmaps.mapfile import load_map_file

from strategies import ghat_graph, ghat_map


@pytest.fixture
def ghat():
    return ghat_map()


@pytest.fixture
def g_hat():
    return ghat_graph()


@pytest.fixture
def ghat_file():
    return load_map_file("ghat.map")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"criterion {n:2}: {'PASS' if ok else 'FAIL'}  {detail}")
