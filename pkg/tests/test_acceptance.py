"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py`` (or ``python
tests/test_acceptance.py``); the summary lines appear at the end of the
session.  Criteria are checked at their stated tolerances and never relaxed.
"""

import io
import json
import math
import sys
import time

import numpy as np
import pytest

from graphbounds import bounds as B
from graphbounds.cli import main
from graphbounds.families import (
    FamilySpec,
    complete_graph,
    cycle_graph,
    enumerate_nonisomorphic,
    enumerate_up_to,
    make_family,
    matching_complement,
    path_graph,
    star_graph,
)
from graphbounds.graph import complement, graph_from_edges
from graphbounds.graph6 import encode_graph6, parse_graph6
from graphbounds.invariants import domination_number, girth, is_regular, minimum_dominating_sets
from graphbounds.spectra import laplacian_spectrum, symmetric_eigenvalues
from graphbounds.verify import mohar_subsets, rhs_dominance_scan
from oracles import polya_graph_count

TOL = 1e-8
CLASS_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346]

RESULTS: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = (ok, detail)
    assert ok, detail


def close(x, y, tol=TOL):
    return abs(x - y) <= tol


def test_criterion_1_exhaustive_sweep(full_sweep):
    counts = [full_sweep["graphs_per_order"][str(n)] for n in range(1, 9)]
    oracle = [polya_graph_count(n) for n in range(1, 9)]
    violations = full_sweep["violations"]
    problems = []
    if counts != CLASS_COUNTS or oracle != CLASS_COUNTS:
        problems.append(f"class counts {counts} (oracle {oracle})")
    if full_sweep["graphs_checked"] != 13598:
        problems.append(f"{full_sweep['graphs_checked']} graphs checked")
    if violations:
        kinds = sorted({f"{v['kind']}:{v['bound_id']}" for v in violations})
        graphs = sorted({v["graph6"] for v in violations})
        problems.append(f"{len(violations)} failures ({', '.join(kinds)}) on {graphs}")
    if full_sweep["wall_seconds"] >= 300:
        problems.append(f"runtime {full_sweep['wall_seconds']:.0f}s")
    record(1, not problems, "; ".join(problems) or
           f"13598 graphs, 0 violations, {full_sweep['wall_seconds']:.1f}s")


def test_criterion_2_golden_table():
    petersen = make_family(FamilySpec("petersen"))
    c5, k4, k13 = cycle_graph(5), complete_graph(4), star_graph(4)
    octa = matching_complement(6)
    llt = B.check_llt_girth(c5)
    th1 = B.check_theorem1(petersen)
    th2_k4 = B.check_theorem2(k4)
    th2_oct = B.check_theorem2(octa)
    th3 = B.check_theorem3(k13)
    rows = {
        "mu(C5)=2, girth bound tight": close(llt.lhs, 2) and llt.tight,
        "mu(Petersen)=3=min(3,sqrt 9), class moore": close(th1.lhs, 3) and close(th1.rhs, min(3, math.sqrt(9)))
        and th1.tight and th1.classification.variant == "moore",
        "lambda2(K4)=4=n": close(th2_k4.lhs, 4) and close(th2_k4.rhs, 4) and th2_k4.tight,
        "lambda2(octahedron)=4=n-2, matching complement": close(th2_oct.lhs, 4) and close(th2_oct.rhs, 4)
        and th2_oct.classification is not None and th2_oct.classification.variant == "matching_complement",
        "lambda(K1,3)=4=ceil(4/1), tight": close(th3.lhs, 4) and close(th3.rhs, 4) and th3.tight,
        "gamma(Petersen)=3, girth 5": domination_number(petersen) == 3 and girth(petersen) == 5,
    }
    failed = [k for k, ok in rows.items() if not ok]
    record(2, not failed, f"failed rows: {failed}" if failed else f"{len(rows)} rows within {TOL}")


def test_criterion_3_hoffman_singleton():
    g = make_family(FamilySpec.parse("moore 7"))
    symmetric_eigenvalues(np.eye(2))  # load compiled kernels before timing
    a = g.adjacency_matrix(np.float64)
    started = time.perf_counter()
    mu = symmetric_eigenvalues(a, "descending")[0]
    elapsed = time.perf_counter() - started
    th1 = B.check_theorem1(g)
    ok = (g.n == 50 and is_regular(g, 7) and girth(g) == 5 and close(mu, 7) and th1.tight
          and th1.classification.variant == "moore" and elapsed < 1.0)
    record(3, ok, f"n={g.n} mu={mu!r} class={th1.classification and th1.classification.variant} "
                  f"eigensolve {elapsed * 1000:.1f}ms")


def test_criterion_4_mohar():
    subsets = 0
    worst = math.inf
    for g in enumerate_up_to(6):
        lam = laplacian_spectrum(g)[-1]
        for x in mohar_subsets(g, all_subsets_max_n=6):
            k = len(x)
            margin = lam * k * (g.n - k) - g.n * B.cut_size(g, x)
            worst = min(worst, margin)
            subsets += 1
    implied = 0
    failures = []
    for g in enumerate_up_to(8):
        lam = laplacian_spectrum(g)[-1]
        gamma = domination_number(g)
        for x in minimum_dominating_sets(g):
            if len(x) == g.n:
                continue  # X must be a proper subset
            implied += 1
            check = B.check_mohar(g, x)
            # every vertex outside X has a neighbour in X, so rhs >= n (n - gamma)
            if not check.holds or check.rhs < g.n * (g.n - gamma) or lam < g.n / gamma - TOL:
                failures.append(encode_graph6(g).decode())
    ok = worst >= -TOL and not failures
    record(4, ok, f"{subsets} subsets (n<=6) min margin {worst:.3g}; "
                  f"{implied} dominating-set instances (n<=8), failures {failures[:5]}")


def _random_graph(rng, n):
    p = rng.uniform(0.05, 0.95)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return graph_from_edges(n, [(int(u), int(v)) for u, v in zip(*np.nonzero(upper))])


def test_criterion_5_complement_identity():
    rng = np.random.default_rng(20240517)
    graphs = list(enumerate_up_to(7))
    graphs += [_random_graph(rng, 16) for _ in range(200)]
    graphs += [_random_graph(rng, 32) for _ in range(200)]
    worst = 0.0
    for g in graphs:
        lam = laplacian_spectrum(g).values
        lam_bar = laplacian_spectrum(complement(g)).values
        for k in range(2, g.n + 1):
            worst = max(worst, abs(lam[k - 1] + lam_bar[g.n + 1 - k] - g.n))
    record(5, worst <= TOL, f"{len(graphs)} graphs, max deviation {worst:.2e}")


def test_criterion_6_theorem2_strictness(full_sweep):
    census = full_sweep["tight_census"][B.THEOREM2]
    tight_codes = {e["graph6"] for e in census}
    high_gamma = sorted(
        e["graph6"] for e in census if domination_number(parse_graph6(e["graph6"])) > 2
    )
    expected = {encode_graph6(complete_graph(n)).decode() for n in range(2, 9)}
    expected |= {encode_graph6(matching_complement(n)).decode() for n in range(2, 9, 2)}
    extra = sorted(tight_codes - expected)
    missing = sorted(expected - tight_codes)
    ok = not high_gamma and not extra and not missing
    record(6, ok, f"{len(tight_codes)} tight; gamma>2 tight: {high_gamma}; "
                  f"outside family: {extra}; missing: {missing}")


def test_criterion_7_rhs_dominance():
    started = time.perf_counter()
    failing_pairs = rhs_dominance_scan(1000)
    elapsed = time.perf_counter() - started
    checked = 0
    exceed = []
    for g in enumerate_up_to(8):
        degrees = g.degrees()
        d, big = min(degrees), max(degrees)
        if d < 1:
            continue
        checked += 1
        if B.hsf_rhs(g.n, g.m, d) > B.cao_rhs(g.n, g.m, d, big) + TOL:
            exceed.append(encode_graph6(g).decode())
    ok = not failing_pairs and elapsed < 1.0 and not exceed
    record(7, ok, f"scan: {len(failing_pairs)} failing (n, Delta) pairs in {elapsed * 1000:.0f}ms; "
                  f"HSF rhs > Cao rhs on {len(exceed)} of {checked} graphs with delta>=1 "
                  f"(first: {exceed[:3]})")


def _family_graphs():
    for n in range(1, 63):
        yield complete_graph(n)
        yield path_graph(n)
        if n >= 2:
            yield star_graph(n)
        if n >= 3:
            yield cycle_graph(n)
        if n % 2 == 0:
            yield matching_complement(n)
    for text in ("petersen", "hoffman-singleton", "moore 2", "moore 3", "moore 7"):
        yield make_family(FamilySpec.parse(text))


def test_criterion_8_codec():
    bad = []
    count = 0
    for g in list(enumerate_up_to(8)) + list(_family_graphs()):
        code = encode_graph6(g)
        back = parse_graph6(code)
        count += 1
        if back != g or encode_graph6(back) != code:
            bad.append(code)
    record(8, not bad, f"{count} graphs round-tripped, {len(bad)} mismatches")


def test_criterion_9_search():
    argv = ["search", "--n", "10", "--objective", "max-mu", "--constraint", "girth5", "--seed", "2024"]
    runs = []
    for _ in range(2):
        out, err = io.StringIO(), io.StringIO()
        code = main(argv, out, err)
        runs.append((code, out.getvalue().encode()))
    rec = json.loads(runs[0][1])
    g = parse_graph6(rec["graph6"])
    ok = (runs[0] == runs[1] and runs[0][0] == 0 and girth(g) >= 5 and rec["mu"] <= 3 + TOL)
    record(9, ok, f"mu={rec['mu']:.6f} girth={girth(g)} identical={runs[0] == runs[1]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
