"""Exhaustive verification sweep over all small graphs."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import bounds as B
from .families import enumerate_up_to
from .graph import Graph, VertexSet
from .graph6 import encode_graph6, parse_graph6
from .invariants import minimum_dominating_sets

MOHAR_ALL_SUBSETS_MAX_N = 6


@dataclass(frozen=True)
class Finding:
    """A failed check.  ``kind`` is ``violation`` (inequality or auxiliary
    assertion false), ``mismatch`` (tightness and classifier disagree, or a
    witness fails re-validation) or ``known_exception`` (a failure on an
    edgeless graph of theorem2/theorem3, recorded separately on request)."""

    kind: str
    bound_id: str
    graph6: str
    message: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "bound_id": self.bound_id, "graph6": self.graph6, "message": self.message}


@dataclass
class Tally:
    checked: int = 0
    tight: int = 0
    strict: int = 0
    inapplicable: int = 0

    def add(self, check: B.BoundCheck) -> None:
        if not check.applicable:
            self.inapplicable += 1
            return
        self.checked += 1
        if check.tight:
            self.tight += 1
        else:
            self.strict += 1

    def merge(self, other: Tally) -> None:
        self.checked += other.checked
        self.tight += other.tight
        self.strict += other.strict
        self.inapplicable += other.inapplicable


@dataclass
class GraphOutcome:
    graph6: str
    n: int
    tallies: dict[str, Tally] = field(default_factory=dict)
    findings: list[Finding] = field(default_factory=list)
    census: list[tuple[str, str, Optional[str]]] = field(default_factory=list)
    observations: list[tuple[str, str]] = field(default_factory=list)


def is_edgeless_exception(g: Graph, bound_id: str) -> bool:
    """Edgeless graphs fail ``theorem3`` (lambda = 0 < 1) and make ``theorem2`` tight with gamma = n."""
    return g.m == 0 and bound_id in (B.THEOREM2, B.THEOREM3)


def _is_bipartite_semiregular(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    degrees = g.degrees()
    return all(len({degrees[v] for v in range(g.n) if side[v] == s}) <= 1 for s in (0, 1))


def mohar_subsets(g: Graph, all_subsets_max_n: int = MOHAR_ALL_SUBSETS_MAX_N) -> Iterable[VertexSet]:
    if g.n <= all_subsets_max_n:
        for mask in range(1, (1 << g.n) - 1):
            yield VertexSet(mask, g.n)
    else:
        for x in minimum_dominating_sets(g):
            if len(x) < g.n:
                yield x


def evaluate_graph(
    g: Graph,
    bounds: Sequence[str] = B.ALL_BOUNDS,
    *,
    known_exceptions: bool = False,
    mohar_all_subsets_max_n: int = MOHAR_ALL_SUBSETS_MAX_N,
) -> GraphOutcome:
    code = encode_graph6(g).decode()
    out = GraphOutcome(code, g.n)

    def fail(kind: str, bound_id: str, message: str) -> None:
        if known_exceptions and is_edgeless_exception(g, bound_id):
            kind = "known_exception"
        out.findings.append(Finding(kind, bound_id, code, message))

    f = B.facts(g)
    for bound_id in bounds:
        tally = out.tallies.setdefault(bound_id, Tally())
        if bound_id == B.MOHAR:
            _mohar(g, f, tally, fail, mohar_all_subsets_max_n)
            continue
        check = B.SINGLE_GRAPH_CHECKS[bound_id](g)
        tally.add(check)
        if not check.applicable:
            continue
        if not check.holds:
            fail("violation", bound_id, f"lhs={check.lhs!r} rhs={check.rhs!r} detail={check.detail}")
        if bound_id in B.CLASSIFIED_BOUNDS:
            _classification(g, bound_id, check, out, fail)
        elif bound_id == B.HSF:
            _hsf(g, f, check, out, fail)
        elif bound_id == B.FMS:
            _fms(g, f, check, out, fail)

    if f.delta_min >= 1 and B.HSF in bounds and B.CAO in bounds:
        hsf = B.hsf_rhs(g.n, f.m, f.delta_min)
        cao = B.cao_rhs(g.n, f.m, f.delta_min, f.delta_max)
        if hsf > cao + B.TOL:
            out.observations.append(("hsf_rhs_exceeds_cao_rhs", code))
    return out


def _classification(g, bound_id, check, out, fail) -> None:
    cls = B.CLASSIFIERS[bound_id](g)
    if check.tight:
        out.census.append((bound_id, out.graph6, None if cls is None else cls.variant))
    if check.tight and cls is None:
        gamma = check.detail.get("gamma")
        fail("mismatch", bound_id, f"tight but unclassified (gamma={gamma})")
    elif cls is not None and not check.tight:
        fail("mismatch", bound_id, f"classified as {cls.variant} but not tight "
                                   f"(lhs={check.lhs!r}, rhs={check.rhs!r})")
    if cls is not None and not B.REVALIDATORS[bound_id](g, cls):
        fail("mismatch", bound_id, f"{cls.variant} witness failed re-validation: {cls.witness}")


def _hsf(g, f, check, out, fail) -> None:
    if f.connected:
        predicted = all(d in (f.delta_min, g.n - 1) for d in g.degrees())
        if check.tight != predicted:
            fail("mismatch", B.HSF, f"tight={check.tight} but degree condition={predicted}")
    elif check.tight:
        out.observations.append(("hsf_disconnected_tight", out.graph6))


def _fms(g, f, check, out, fail) -> None:
    if not f.connected:
        return
    structured = len(set(g.degrees())) == 1 or _is_bipartite_semiregular(g)
    if structured and not check.tight:
        fail("mismatch", B.FMS, "regular or bipartite semiregular but mu^2 < max w")
    if check.tight and not structured:
        out.observations.append(("fms_tight_unstructured", out.graph6))


def _mohar(g, f, tally, fail, all_subsets_max_n) -> None:
    # beyond the all-subsets cap every X offered is a minimum dominating set
    dominating = None
    if g.n <= all_subsets_max_n:
        dominating = {x.members for x in minimum_dominating_sets(g)}
    for x in mohar_subsets(g, all_subsets_max_n):
        check = B.check_mohar(g, x)
        tally.add(check)
        if not check.holds:
            fail("violation", B.MOHAR, f"X={list(x)} lhs={check.lhs!r} rhs={check.rhs!r}")
        is_min_dominating = dominating is None or x.members in dominating
        if is_min_dominating and check.holds and f.lambda_max < g.n / f.gamma - B.TOL:
            fail("violation", B.MOHAR, f"X={list(x)} dominating but lambda_max < n/gamma")


# ---------------------------------------------------------------------------


@dataclass
class SweepSummary:
    max_n: int
    bounds: tuple[str, ...]
    graphs_per_order: dict[int, int] = field(default_factory=dict)
    tallies: dict[str, Tally] = field(default_factory=dict)
    findings: list[Finding] = field(default_factory=list)
    census: dict[str, list[tuple[str, Optional[str]]]] = field(default_factory=dict)
    observations: dict[str, list[str]] = field(default_factory=dict)
    aborted: bool = False

    @property
    def graphs_checked(self) -> int:
        return sum(self.graphs_per_order.values())

    @property
    def violations(self) -> list[Finding]:
        return [x for x in self.findings if x.kind != "known_exception"]

    @property
    def known_exceptions(self) -> list[Finding]:
        return [x for x in self.findings if x.kind == "known_exception"]

    @property
    def ok(self) -> bool:
        return not self.violations

    def absorb(self, outcome: GraphOutcome) -> None:
        self.graphs_per_order[outcome.n] = self.graphs_per_order.get(outcome.n, 0) + 1
        for bound_id, tally in outcome.tallies.items():
            self.tallies.setdefault(bound_id, Tally()).merge(tally)
        self.findings.extend(outcome.findings)
        for bound_id, code, variant in outcome.census:
            self.census.setdefault(bound_id, []).append((code, variant))
        for key, code in outcome.observations:
            self.observations.setdefault(key, []).append(code)

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "graphs_checked": self.graphs_checked,
            "graphs_per_order": {str(k): v for k, v in sorted(self.graphs_per_order.items())},
            "bounds": {
                b: vars(self.tallies[b]) for b in self.bounds if b in self.tallies
            },
            "violations": [x.to_dict() for x in self.violations],
            "known_exceptions": [x.to_dict() for x in self.known_exceptions],
            "tight_census": {
                b: [{"graph6": c, "class": v} for c, v in entries]
                for b, entries in self.census.items()
            },
            "observations": self.observations,
            "aborted": self.aborted,
            "ok": self.ok,
        }


def _evaluate_code(args) -> GraphOutcome:
    code, bounds, known_exceptions, mohar_max = args
    return evaluate_graph(parse_graph6(code), bounds, known_exceptions=known_exceptions,
                          mohar_all_subsets_max_n=mohar_max)


def sweep(
    graphs: Iterable[Graph],
    max_n: int,
    bounds: Sequence[str] = B.ALL_BOUNDS,
    *,
    known_exceptions: bool = False,
    stop_on_violation: bool = False,
    mohar_all_subsets_max_n: int = MOHAR_ALL_SUBSETS_MAX_N,
    jobs: int = 1,
) -> SweepSummary:
    """Evaluate every graph; with ``stop_on_violation`` the first failing
    graph in input order ends the sweep (later results are discarded)."""
    bounds = tuple(bounds)
    summary = SweepSummary(max_n=max_n, bounds=bounds)
    if jobs <= 1:
        outcomes = (
            evaluate_graph(g, bounds, known_exceptions=known_exceptions,
                           mohar_all_subsets_max_n=mohar_all_subsets_max_n)
            for g in graphs
        )
        _collect(summary, outcomes, stop_on_violation)
        return summary
    tasks = ((encode_graph6(g).decode(), bounds, known_exceptions, mohar_all_subsets_max_n) for g in graphs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        outcomes = pool.map(_evaluate_code, tasks, chunksize=64)
        _collect(summary, outcomes, stop_on_violation)
        if summary.aborted:
            pool.shutdown(cancel_futures=True)
    return summary


def _collect(summary: SweepSummary, outcomes: Iterable[GraphOutcome], stop_on_violation: bool) -> None:
    for outcome in outcomes:
        summary.absorb(outcome)
        if stop_on_violation and any(x.kind != "known_exception" for x in outcome.findings):
            summary.aborted = True
            return


def verify_up_to(max_n: int, bounds: Sequence[str] = B.ALL_BOUNDS, **kwargs) -> SweepSummary:
    return sweep(enumerate_up_to(max_n), max_n, bounds, **kwargs)


def rhs_dominance_scan(max_n: int = 1000) -> list[tuple[int, int]]:
    """Every (n, Delta) with 2 <= n <= max_n where the dominance check fails."""
    return [
        (n, d)
        for n, d in itertools.chain.from_iterable(((n, d) for d in range(n)) for n in range(2, max_n + 1))
        if not B.rhs_dominance_th1_vs_main1(n, d)
    ]
