"""Immutable simple graphs on at most 64 vertices, stored as bitset rows."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph construction or operation."""


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., universe-1}`` held as a bitmask."""

    members: int
    universe: int

    def __post_init__(self):
        if self.members < 0 or self.members >> self.universe:
            raise GraphError(f"vertex set {self.members:#x} exceeds universe {self.universe}")

    @classmethod
    def of(cls, vertices: Iterable[int], universe: int) -> VertexSet:
        mask = 0
        for v in vertices:
            if not 0 <= v < universe:
                raise GraphError(f"vertex {v} outside universe of size {universe}")
            mask |= 1 << v
        return cls(mask, universe)

    @classmethod
    def full(cls, universe: int) -> VertexSet:
        return cls((1 << universe) - 1, universe)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.universe) - 1) & ~self.members, self.universe)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and bool(self.members >> v & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.members
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.members.bit_count()

    def __repr__(self) -> str:
        return f"VertexSet({list(self)}, universe={self.universe})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[u]`` has bit v set iff uv is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be between 1 and {MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for u, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise GraphError(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            mask = row
            while mask:
                low = mask & -mask
                v = low.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                mask ^= low

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> VertexSet:
        return VertexSet(self.adj[u], self.n)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1), self.n):
                yield u, v

    def adjacency_matrix(self, dtype=np.uint8) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = 1
            a[v, u] = 1
        return a

    def closed_neighborhoods(self) -> np.ndarray:
        return np.array([row | (1 << u) for u, row in enumerate(self.adj)], dtype=np.uint64)

    def induced(self, vertices: VertexSet | Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = list(vertices)
        if not keep:
            raise GraphError("induced subgraph on an empty vertex set")
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for w in VertexSet(self.adj[v], self.n):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(keep), tuple(rows))

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex i is this graph's vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabel order must be a permutation of the vertices")
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        rows = []
        for v in order:
            row = 0
            for w in VertexSet(self.adj[v], self.n):
                row |= 1 << position[w]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated edges collapse to one."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be between 1 and {MAX_ORDER}, got {n}")
    rows = [0] * n
    for u, v in edges:
        u, v = operator.index(u), operator.index(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def graph_from_matrix(a: np.ndarray) -> Graph:
    n = a.shape[0]
    rows = []
    for u in range(n):
        row = 0
        for v in np.flatnonzero(a[u]):
            row |= 1 << int(v)
        rows.append(row)
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` followed by ``g2`` with g2's vertices shifted up by ``g1.n``."""
    if g1.n + g2.n > MAX_ORDER:
        raise GraphError(f"union order {g1.n + g2.n} exceeds {MAX_ORDER}")
    return Graph(g1.n + g2.n, g1.adj + tuple(row << g1.n for row in g2.adj))


def components(g: Graph) -> list[tuple[VertexSet, Graph]]:
    """Connected components ordered by their smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.adj[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        members = VertexSet(comp, g.n)
        out.append((members, g.induced(members)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def cut_size(g: Graph, x: VertexSet) -> int:
    """Number of edges with exactly one endpoint in ``x``."""
    if x.universe != g.n:
        raise GraphError(f"vertex set universe {x.universe} does not match order {g.n}")
    outside = ((1 << g.n) - 1) & ~x.members
    return sum((g.adj[u] & outside).bit_count() for u in x)
