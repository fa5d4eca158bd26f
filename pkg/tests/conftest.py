import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphbounds.families import (  # noqa: E402
    complete_graph,
    cycle_graph,
    hoffman_singleton_graph,
    matching_complement,
    path_graph,
    petersen_graph,
    star_graph,
)
from graphbounds.graph import disjoint_union, empty_graph  # noqa: E402


@pytest.fixture(scope="session")
def named():
    return {
        "K1": complete_graph(1),
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "K13": star_graph(4),
        "K14": star_graph(5),
        "E5": empty_graph(5),
        "2K2": disjoint_union(complete_graph(2), complete_graph(2)),
        "octahedron": matching_complement(6),
        "petersen": petersen_graph(),
        "C5+K2": disjoint_union(cycle_graph(5), complete_graph(2)),
        "C5+C5": disjoint_union(cycle_graph(5), cycle_graph(5)),
        "K3+K3": disjoint_union(complete_graph(3), complete_graph(3)),
        "K4+K2": disjoint_union(complete_graph(4), complete_graph(2)),
    }


@pytest.fixture(scope="session")
def hoffman_singleton():
    return hoffman_singleton_graph()


@pytest.fixture(scope="session")
def full_sweep():
    """`graphbounds verify --max-n 8 --keep-going` once per session, as parsed JSON."""
    import io
    import json
    import time

    from graphbounds.cli import main

    out, err = io.StringIO(), io.StringIO()
    started = time.perf_counter()
    code = main(["verify", "--max-n", "8", "--keep-going"], out, err)
    payload = json.loads(out.getvalue())
    payload["exit_code"] = code
    payload["wall_seconds"] = time.perf_counter() - started
    payload["stderr"] = err.getvalue()
    return payload


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        ok, detail = module.RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
