"""Named extremal graphs, canonical codes and small-graph enumeration."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import kernels
from .graph import Graph, GraphError, complement, graph_from_edges
from .graph6 import encode_graph6, parse_graph6
from .invariants import girth, is_regular

MAX_CANONICAL_ORDER = 10
MAX_ENUMERATION_ORDER = 8


class FamilyError(ValueError):
    """Invalid or unsupported family parameter."""


FAMILY_TAGS = (
    "complete", "star", "cycle", "path", "petersen",
    "hoffman-singleton", "matching-complement", "moore",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family and its size parameter.

    ``size`` is the order for complete/star/cycle/path/matching-complement
    (``star 5`` is K_{1,4}) and the degree r for ``moore``; petersen and
    hoffman-singleton take none.
    """

    family: str
    size: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        parts = text.replace("_", "-").lower().split()
        if not parts:
            raise FamilyError("empty family spec")
        tag = parts[0]
        if tag not in FAMILY_TAGS:
            raise FamilyError(f"unknown family {tag!r}; choose from {', '.join(FAMILY_TAGS)}")
        if len(parts) > 2:
            raise FamilyError(f"too many arguments in {text!r}")
        size = None
        if len(parts) == 2:
            try:
                size = int(parts[1])
            except ValueError:
                raise FamilyError(f"size {parts[1]!r} is not an integer") from None
        return cls(tag, size)

    def __str__(self) -> str:
        return self.family if self.size is None else f"{self.family} {self.size}"


def _need_size(spec: FamilySpec, minimum: int) -> int:
    if spec.size is None:
        raise FamilyError(f"{spec.family} needs a size parameter")
    if spec.size < minimum:
        raise FamilyError(f"{spec.family} needs size >= {minimum}, got {spec.size}")
    if spec.family != "moore" and spec.size > 64:
        raise FamilyError(f"{spec.family} {spec.size} exceeds the 64-vertex cap")
    return spec.size


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, itertools.combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    """K_{1,n-1} centred at vertex 0."""
    return graph_from_edges(n, [(0, v) for v in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def matching_complement(n: int) -> Graph:
    return complement(graph_from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)]))


def petersen_graph() -> Graph:
    """2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return graph_from_edges(len(pairs), edges)


def hoffman_singleton_graph() -> Graph:
    """Pentagons P_h and pentagrams Q_i; vertex j of P_h meets vertex h*i + j of Q_i."""

    def p(h, j):
        return 5 * h + j

    def q(i, j):
        return 25 + 5 * i + j

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((p(h, j), p(h, (j + 1) % 5)))
            edges.append((q(h, j), q(h, (j + 2) % 5)))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((p(h, j), q(i, (h * i + j) % 5)))
    g = graph_from_edges(50, edges)
    if g.n != 50 or not is_regular(g, 7) or girth(g) != 5:
        raise GraphError("Hoffman-Singleton construction failed self-validation")
    return g


def make_family(spec: FamilySpec) -> Graph:
    tag = spec.family
    if tag == "complete":
        return complete_graph(_need_size(spec, 1))
    if tag == "star":
        return star_graph(_need_size(spec, 2))
    if tag == "cycle":
        return cycle_graph(_need_size(spec, 3))
    if tag == "path":
        return path_graph(_need_size(spec, 1))
    if tag == "matching-complement":
        n = _need_size(spec, 2)
        if n % 2:
            raise FamilyError(f"matching-complement needs an even order, got {n}")
        return matching_complement(n)
    if tag == "petersen":
        return petersen_graph()
    if tag == "hoffman-singleton":
        return hoffman_singleton_graph()
    if tag == "moore":
        r = _need_size(spec, 0)
        if r == 57:
            raise FamilyError(
                "moore 57: existence of a 57-regular Moore graph of diameter 2 is an open problem"
            )
        builders = {2: lambda: cycle_graph(5), 3: petersen_graph, 7: hoffman_singleton_graph}
        if r not in builders:
            raise FamilyError(f"no diameter-2 Moore graph of degree {r}; known degrees are 2, 3, 7")
        return builders[r]()
    raise FamilyError(f"unknown family {tag!r}")


# ---------------------------------------------------------------------------
# canonical codes


def _pack_bits(n: int, a: np.ndarray, order: np.ndarray) -> bytes:
    # graph6 column order over the permuted matrix
    sub = a[np.ix_(order, order)]
    iu = np.triu_indices(n, 1)
    by_column = np.lexsort((iu[0], iu[1]))
    bits = sub[iu[0][by_column], iu[1][by_column]]
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=bits.dtype)])
    groups = bits.reshape(-1, 6) @ np.array([32, 16, 8, 4, 2, 1]) + 63
    return bytes([n + 63]) + bytes(groups.astype(np.uint8).tolist())


def canonical_permutation(g: Graph) -> list[int]:
    if g.n > MAX_CANONICAL_ORDER:
        raise GraphError(f"canonical labeling supports n <= {MAX_CANONICAL_ORDER}")
    return [int(v) for v in kernels.canonical_permutation(g.adjacency_matrix())]


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_permutation(g))


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal codes iff isomorphic."""
    return encode_graph6(canonical_form(g))


# ---------------------------------------------------------------------------
# enumeration


@functools.lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of order n, sorted by canonical code.

    Every graph on n vertices minus its last vertex is isomorphic to some
    class of order n - 1, so extending each smaller representative by a new
    vertex in all 2^(n-1) ways and deduplicating reaches every class.
    """
    if n == 1:
        return (Graph(1, (0,)),)
    seen: set[bytes] = set()
    for h in _classes(n - 1):
        base = np.zeros((n, n), dtype=np.uint8)
        base[: n - 1, : n - 1] = h.adjacency_matrix()
        for mask in range(1 << (n - 1)):
            a = base.copy()
            for v in range(n - 1):
                if mask >> v & 1:
                    a[v, n - 1] = a[n - 1, v] = 1
            order = kernels.canonical_permutation(a)
            code = _pack_bits(n, a, order)
            seen.add(code)
    return tuple(parse_graph6(code) for code in sorted(seen))


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in canonical-code order."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    yield from _classes(n)


def enumerate_up_to(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_nonisomorphic(n)
