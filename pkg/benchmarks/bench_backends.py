"""Time the hot kernels under numba and under the pure-numpy fallback.

Each backend runs in its own interpreter because the choice is fixed at
import time.  Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
import numpy as np
from graphbounds import _accel
from graphbounds.families import _classes, hoffman_singleton_graph, cycle_graph
from graphbounds.graph import graph_from_edges
from graphbounds.invariants import domination_number, girth_and_diameter
from graphbounds.spectra import symmetric_eigenvalues
from graphbounds.verify import sweep
from graphbounds.families import enumerate_up_to
from graphbounds.bounds import facts

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)

def random_graph(n, p):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return graph_from_edges(n, [(int(u), int(v)) for u, v in zip(*np.nonzero(upper))])

hs = hoffman_singleton_graph().adjacency_matrix(np.float64)
dense = [random_graph(32, 0.3).adjacency_matrix(np.float64) for _ in range(10)]
sparse = [random_graph(32, 0.12) for _ in range(5)]

# compile (or load from cache) before timing
symmetric_eigenvalues(np.eye(3)); domination_number(cycle_graph(5)); girth_and_diameter(cycle_graph(5))
_classes(4)

def best(fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter(); fn(); times.append(time.perf_counter() - t)
    return min(times)

def sweep6():
    facts.cache_clear()
    sweep(enumerate_up_to(6), 6, known_exceptions=True)

def enumerate7():
    _classes.cache_clear()
    _classes(7)

results = {
    "jacobi hoffman-singleton (n=50)": best(lambda: symmetric_eigenvalues(hs)),
    "jacobi 10 random (n=32)": best(lambda: [symmetric_eigenvalues(a) for a in dense]),
    "domination 5 random (n=32)": best(lambda: [domination_number(g) for g in sparse]),
    "girth+diameter 5 random (n=32)": best(lambda: [girth_and_diameter(g) for g in sparse]),
    "enumerate n=7 (1044 classes)": best(enumerate7),
    "sweep n<=6 (208 graphs)": best(sweep6),
}
json.dump({"backend": _accel.BACKEND, "seconds": results}, sys.stdout)
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("GRAPHBOUNDS_DISABLE_NUMBA", None)
    if disable:
        env["GRAPHBOUNDS_DISABLE_NUMBA"] = "1"
    proc = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best of N timings per workload")
    args = parser.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    print(f"{'workload':<34}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for name, t_fast in fast["seconds"].items():
        t_slow = slow["seconds"][name]
        print(f"{name:<34}{t_fast * 1000:>10.1f}ms{t_slow * 1000:>10.1f}ms{t_slow / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
