"""Hypothesis strategies for random simple graphs."""

import itertools

from hypothesis import strategies as st

from graphbounds.graph import graph_from_edges


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(n))))
