"""Seeded local search for extremal graphs under a structural constraint.

Moves toggle a single vertex pair; moves that break the constraint are
rejected, and equal-score moves are accepted so the walk can cross plateaus.
Each restart starts from a fixed feasible graph and ends early after
``patience`` steps without improving its own best score.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .graph import Graph, graph_from_matrix
from .spectra import laplacian_matrix, symmetric_eigenvalues

MIN_ORDER = 5
MAX_ORDER = 32
OBJECTIVES = ("max-mu", "min-lambda-max")
CONSTRAINTS = ("girth5", "gamma")


class InfeasibleSearch(ValueError):
    """The requested order/constraint combination admits no graph or is out of range."""


@dataclass(frozen=True)
class Constraint:
    kind: str
    gamma: Optional[int] = None

    def __str__(self) -> str:
        return "girth>=5" if self.kind == "girth5" else f"gamma={self.gamma}"


@dataclass(frozen=True)
class SearchResult:
    graph: Graph
    score: float
    objective: str
    constraint: Constraint
    evaluations: int


def _closed_masks(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    out = np.zeros(n, dtype=np.uint64)
    for v in range(n):
        mask = 1 << v
        for w in np.flatnonzero(a[v]):
            mask |= 1 << int(w)
        out[v] = mask
    return out


def _gamma(a: np.ndarray) -> int:
    degrees = a.sum(axis=1, dtype=np.int64)
    order = np.array(sorted(range(a.shape[0]), key=lambda v: (-degrees[v], v)), dtype=np.int64)
    return int(kernels.popcount64(kernels.minimum_dominating_set(_closed_masks(a), order)))


def _score(a: np.ndarray, objective: str) -> float:
    if objective == "max-mu":
        return max(symmetric_eigenvalues(a.astype(np.float64)).values)
    lap = laplacian_matrix(graph_from_matrix(a))
    return -max(symmetric_eigenvalues(lap).values)


def _start(n: int, constraint: Constraint) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.uint8)
    if constraint.kind == "gamma":
        # star on the first n - gamma + 1 vertices plus gamma - 1 isolated vertices
        for v in range(1, n - constraint.gamma + 1):
            a[0, v] = a[v, 0] = 1
    return a


def _feasible_after_toggle(a: np.ndarray, u: int, v: int, constraint: Constraint) -> bool:
    if constraint.kind == "girth5":
        if a[u, v]:
            return True
        d = kernels.bfs_distances(a, u)[v]
        return d < 0 or d >= 4
    a[u, v] = a[v, u] = 1 - a[u, v]
    ok = _gamma(a) == constraint.gamma
    a[u, v] = a[v, u] = 1 - a[u, v]
    return ok


def validate(n: int, objective: str, constraint: Constraint) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise InfeasibleSearch(f"search order must be in {MIN_ORDER}..{MAX_ORDER}, got {n}")
    if objective not in OBJECTIVES:
        raise InfeasibleSearch(f"unknown objective {objective!r}")
    if constraint.kind not in CONSTRAINTS:
        raise InfeasibleSearch(f"unknown constraint {constraint.kind!r}")
    if constraint.kind == "gamma" and not (constraint.gamma is not None and 1 <= constraint.gamma <= n):
        raise InfeasibleSearch(f"no graph of order {n} has domination number {constraint.gamma}")


def search(
    n: int,
    objective: str,
    constraint: Constraint,
    *,
    restarts: int = 4,
    steps: int = 2000,
    seed: int = 0,
    patience: Optional[int] = None,
) -> SearchResult:
    validate(n, objective, constraint)
    rng = np.random.default_rng(seed)
    patience = patience or max(200, 20 * n)
    best_a = _start(n, constraint)
    best = _score(best_a, objective)
    evaluations = 1
    for _ in range(restarts):
        a = _start(n, constraint)
        current = _score(a, objective)
        run_best = current
        since_improvement = 0
        for _ in range(steps):
            u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
            if not _feasible_after_toggle(a, u, v, constraint):
                continue
            a[u, v] = a[v, u] = 1 - a[u, v]
            score = _score(a, objective)
            evaluations += 1
            if score >= current - 1e-12:
                current = score
            else:
                a[u, v] = a[v, u] = 1 - a[u, v]
            if current > run_best + 1e-12:
                run_best = current
                since_improvement = 0
                if current > best + 1e-12:
                    best = current
                    best_a = a.copy()
            else:
                since_improvement += 1
                if since_improvement >= patience:
                    break
    score = best if objective == "max-mu" else -best
    return SearchResult(graph_from_matrix(best_a), score, objective, constraint, evaluations)
