"""Exact combinatorial invariants."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Union

import numpy as np

from . import kernels
from .graph import Graph, VertexSet, components


@functools.total_ordering
class _Infinite:
    """Girth of a forest / diameter of a disconnected graph.

    Compares greater than every integer, so ``girth(g) >= 5`` reads naturally.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("Infinite")

    def __repr__(self):
        return "Infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()
Extended = Union[int, _Infinite]


def degree_extremes(g: Graph) -> tuple[int, int]:
    degrees = g.degrees()
    return min(degrees), max(degrees)


def girth_and_diameter(g: Graph) -> tuple[Extended, Extended]:
    raw_girth, raw_diameter = kernels.girth_and_diameter(g.adjacency_matrix())
    return (
        INFINITE if raw_girth == 0 else int(raw_girth),
        INFINITE if raw_diameter < 0 else int(raw_diameter),
    )


def girth(g: Graph) -> Extended:
    return girth_and_diameter(g)[0]


def diameter(g: Graph) -> Extended:
    return girth_and_diameter(g)[1]


def neighbor_degree_sum(g: Graph, u: int) -> int:
    """w(u): total degree of the neighbours of ``u``."""
    return sum(g.degree(v) for v in g.neighbors(u))


def is_dominating_set(g: Graph, x: VertexSet) -> bool:
    covered = x.members
    for u in x:
        covered |= g.adj[u]
    return covered == (1 << g.n) - 1


def _candidate_order(g: Graph) -> np.ndarray:
    degrees = g.degrees()
    return np.array(sorted(range(g.n), key=lambda v: (-degrees[v], v)), dtype=np.int64)


def minimum_dominating_set(g: Graph) -> VertexSet:
    mask = kernels.minimum_dominating_set(g.closed_neighborhoods(), _candidate_order(g))
    return VertexSet(int(mask), g.n)


def domination_number(g: Graph) -> int:
    return len(minimum_dominating_set(g))


def minimum_dominating_sets(g: Graph) -> Iterator[VertexSet]:
    """Every dominating set of minimum size (exhaustive over gamma-subsets)."""
    gamma = domination_number(g)
    for combo in combinations(range(g.n), gamma):
        x = VertexSet.of(combo, g.n)
        if is_dominating_set(g, x):
            yield x


def is_regular(g: Graph, degree: int | None = None) -> bool:
    degrees = set(g.degrees())
    return len(degrees) == 1 and (degree is None or degree in degrees)


def is_moore_d2(g: Graph) -> bool:
    """Connected Δ-regular graph with Δ ≥ 2, girth 5 and n = Δ² + 1.

    The diameter-2 property is re-checked and a mismatch raises, since it
    would mean the BFS kernel is wrong.
    """
    delta_min, delta_max = degree_extremes(g)
    if delta_min != delta_max or delta_max < 2 or g.n != delta_max ** 2 + 1:
        return False
    g_girth, g_diameter = girth_and_diameter(g)
    if g_girth != 5 or g_diameter is INFINITE:
        return False
    if g_diameter != 2:
        raise AssertionError(f"Moore graph candidate with diameter {g_diameter}")
    return True


@dataclass(frozen=True)
class InvariantProfile:
    n: int
    m: int
    delta_min: int
    delta_max: int
    girth: Extended
    diameter: Extended
    gamma: int
    component_orders: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "delta_min": self.delta_min,
            "delta_max": self.delta_max,
            "girth": _extended_json(self.girth),
            "diameter": _extended_json(self.diameter),
            "gamma": self.gamma,
            "component_orders": list(self.component_orders),
        }


def _extended_json(value: Extended):
    return "infinite" if value is INFINITE else value


def profile(g: Graph) -> InvariantProfile:
    delta_min, delta_max = degree_extremes(g)
    g_girth, g_diameter = girth_and_diameter(g)
    return InvariantProfile(
        n=g.n,
        m=g.m,
        delta_min=delta_min,
        delta_max=delta_max,
        girth=g_girth,
        diameter=g_diameter,
        gamma=domination_number(g),
        component_orders=tuple(sorted((len(vs) for vs, _ in components(g)), reverse=True)),
    )
