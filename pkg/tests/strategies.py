"""Shared hypothesis strategies and oracle helpers for the test suite."""

from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import strategies as st

from homlab.graph import Graph


def to_nx(G):
    N = nx.Graph()
    N.add_nodes_from(range(G.n))
    N.add_edges_from(G.edges)
    return N


@st.composite
def graphs(draw, max_n=7, min_n=1, connected=False):
    while True:
        n = draw(st.integers(min_n, max_n))
        pairs = list(itertools.combinations(range(n), 2))
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        G = Graph(n, [p for p, b in zip(pairs, mask) if b])
        if not connected or G.is_connected():
            return G
