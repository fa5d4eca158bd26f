import pytest

from graphbounds import bounds as B
from graphbounds.families import cycle_graph, petersen_graph
from graphbounds.graph import empty_graph
from graphbounds.graph6 import encode_graph6
from graphbounds.verify import (
    evaluate_graph,
    is_edgeless_exception,
    mohar_subsets,
    rhs_dominance_scan,
    sweep,
    verify_up_to,
)

EDGELESS = {encode_graph6(empty_graph(n)).decode() for n in range(2, 9)}


def test_small_sweep_counts():
    summary = verify_up_to(4, known_exceptions=True)
    assert summary.graphs_checked == 18
    assert summary.graphs_per_order == {1: 1, 2: 2, 3: 4, 4: 11}
    assert summary.ok


def test_failures_up_to_six_are_exactly_edgeless():
    summary = verify_up_to(6)
    assert {x.graph6 for x in summary.violations} == {c for c in EDGELESS if ord(c[0]) - 63 <= 6}
    assert {x.bound_id for x in summary.violations} == {B.THEOREM2, B.THEOREM3}
    assert not summary.ok


def test_stop_on_violation():
    summary = verify_up_to(4, stop_on_violation=True)
    assert summary.aborted
    assert summary.violations[0].graph6 == "A?"
    assert summary.graphs_checked < 18


def test_known_exception_flag_moves_findings():
    summary = verify_up_to(5, known_exceptions=True)
    assert summary.ok and not summary.violations
    assert {x.graph6 for x in summary.known_exceptions} == {c for c in EDGELESS if ord(c[0]) - 63 <= 5}


def test_edgeless_predicate():
    assert is_edgeless_exception(empty_graph(3), B.THEOREM3)
    assert not is_edgeless_exception(empty_graph(3), B.HONG)
    assert not is_edgeless_exception(cycle_graph(3), B.THEOREM3)


def test_parallel_matches_serial():
    from graphbounds.families import enumerate_up_to
    serial = sweep(enumerate_up_to(6), 6, known_exceptions=True)
    parallel = sweep(enumerate_up_to(6), 6, known_exceptions=True, jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_evaluate_graph_petersen():
    outcome = evaluate_graph(petersen_graph())
    assert not outcome.findings
    assert (B.THEOREM1, outcome.graph6, "moore") in outcome.census


def test_mohar_subsets():
    assert len(list(mohar_subsets(cycle_graph(5)))) == 2 ** 5 - 2
    assert all(len(x) == 3 for x in mohar_subsets(petersen_graph()))


def test_rhs_dominance_scan_small():
    assert rhs_dominance_scan(200) == []


class TestFullSweep:
    def test_counts(self, full_sweep):
        assert full_sweep["graphs_checked"] == 13598
        assert full_sweep["graphs_per_order"] == {
            "1": 1, "2": 2, "3": 4, "4": 11, "5": 34, "6": 156, "7": 1044, "8": 12346,
        }

    def test_only_edgeless_failures(self, full_sweep):
        assert {v["graph6"] for v in full_sweep["violations"]} == EDGELESS
        assert full_sweep["exit_code"] == 1

    def test_theorem2_census(self, full_sweep):
        census = {e["graph6"]: e["class"] for e in full_sweep["tight_census"][B.THEOREM2]}
        assert sorted(g for g, c in census.items() if c == "complete") == [
            "A_", "Bw", "C~", "D~{", "E~~w", "F~~~w", "G~~~~{",
        ]
        # on two vertices the matching complement is the edgeless graph
        assert sorted(g for g, c in census.items() if c == "matching_complement") == [
            "A?", "C]", "E]~o", "G]~v~w",
        ]
        assert sorted(g for g, c in census.items() if c is None) == sorted(EDGELESS - {"A?"})

    def test_theorem2_at_order_six(self, full_sweep):
        at_six = sorted(
            (e["graph6"], e["class"]) for e in full_sweep["tight_census"][B.THEOREM2]
            if e["graph6"][0] == "E" and e["class"] is not None
        )
        assert at_six == [("E]~o", "matching_complement"), ("E~~w", "complete")]

    def test_observations(self, full_sweep):
        obs = full_sweep["observations"]
        assert len(obs["hsf_rhs_exceeds_cao_rhs"]) == 145
        assert "fms_tight_unstructured" not in obs
