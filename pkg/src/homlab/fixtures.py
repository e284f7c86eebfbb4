"""Bundled example graphs and their structural validators.

Every fixture is checked against its defining properties when loaded, so a
mistyped data file fails loudly instead of silently changing results.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graph import (
    Graph,
    all_squares,
    cycle_graph,
    parse_edge_list,
    square_counts,
    squares_through_edge,
    validate_dismantling_sequence,
)
from .homsearch import is_core

__all__ = [
    "FixtureError",
    "load",
    "names",
    "moser",
    "bowtie",
    "k_a",
    "k_b",
    "circular_clique",
    "odd_cycle",
    "dismantling",
    "dismantling_of",
    "load_file",
    "validate",
    "RED_EDGES_K_B",
]


class FixtureError(ValueError):
    pass


_FILES = {"moser": "moser.el", "bowtie": "bowtie.el", "k_a": "k_a.el", "k_b": "k_b.el"}

# removal orders whose kernels are the intended square-free skeletons
_DISMANTLING = {
    "moser": [("a", "2"), ("b", "3")],
    "k_a": [("2", "3"), ("4", "5"), ("6", "1")],
    "k_b": [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1"),
            ("d", "2"), ("b", "3"), ("e", "4"), ("c", "5"), ("a", "1")],
}

RED_EDGES_K_B = [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")]


def names():
    return ["moser", "bowtie", "k_a", "k_b", "k72"] + [f"c{n}" for n in range(3, 16, 2)]


def _read(name):
    return resources.files("homlab.data").joinpath(_FILES[name]).read_text()


def circular_clique(p=7, q=2):
    """``K_{p/q}``: ``i ~ j`` iff ``q <= |i - j| <= p - q`` (cyclically)."""
    es = [(i, j) for i in range(p) for j in range(i + 1, p) if q <= j - i <= p - q]
    return Graph(p, es)


def odd_cycle(n):
    if n % 2 == 0:
        raise ValueError("odd cycles only")
    return cycle_graph(n)


def _edges_by_label(G, pairs):
    return [(G.vertex(a), G.vertex(b)) for a, b in pairs]


def validate(name, G):
    """Raise FixtureError unless ``G`` has the defining properties of ``name``."""
    def need(cond, msg):
        if not cond:
            raise FixtureError(f"{name}: {msg}")

    if name == "moser":
        need(G.n == 7 and G.num_edges == 11, "expected 7 vertices and 11 edges")
        need(max(square_counts(G).values()) <= 1, "some edge lies in two squares")
        need(len(all_squares(G)) == 2, "expected exactly two squares")
    elif name == "bowtie":
        need(G.n == 5 and G.num_edges == 6, "expected 5 vertices and 6 edges")
        need(not all_squares(G), "bowtie must be square-free")
    elif name == "k_a":
        need(G.n == 16 and G.num_edges == 21, "expected 16 vertices and 21 edges")
        need(G.max_degree() <= 3, "not subcubic")
        need(G.is_connected(), "not connected")
        need(is_core(G), "not a core")
    elif name == "k_b":
        need(G.n == 10 and G.num_edges == 20, "expected 10 vertices and 20 edges")
        need(all(G.degree(v) == 4 for v in range(G.n)), "not 4-regular")
        for e in _edges_by_label(G, RED_EDGES_K_B):
            need(G.has_edge(*e), f"missing red edge {e}")
            k = len(squares_through_edge(G, e))
            need(k == 1, f"red edge {e} lies in {k} squares")
    elif name == "k72":
        need(G.n == 7 and all(G.degree(v) == 4 for v in range(7)), "K_{7/2} is 4-regular on 7 vertices")
    if name in _DISMANTLING:
        validate_dismantling_sequence(G, _edges_by_label(G, _DISMANTLING[name]))
    return G


@lru_cache(maxsize=None)
def load(name):
    """Load and validate a fixture by name (``moser``, ``k_a``, ``c7``, ...)."""
    if name in _FILES:
        G = parse_edge_list(_read(name))
    elif name == "k72":
        G = circular_clique(7, 2)
    elif name.startswith("c") and name[1:].isdigit():
        G = odd_cycle(int(name[1:]))
    else:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(names())}")
    return validate(name, G)


@lru_cache(maxsize=None)
def dismantling(name):
    """The fixture's preferred square-dismantling sequence.

    For ``moser``, ``k_a`` and ``k_b`` this removes the dashed edges of the
    usual drawings, so the kernel is the intended skeleton.  Other fixtures
    fall back to the generic search.
    """
    return dismantling_of(name, load(name))


def dismantling_of(name, G):
    """Preferred dismantling of ``G`` read as the fixture ``name``."""
    from .graph import find_dismantling_sequence
    if name in _DISMANTLING:
        return validate_dismantling_sequence(G, _edges_by_label(G, _DISMANTLING[name]))
    D = find_dismantling_sequence(G)
    if D is None:
        raise FixtureError(f"{name} is not square-dismantlable")
    return D


def load_file(name, path):
    """Read an edge-list file and validate it as the fixture ``name``."""
    with open(path) as fh:
        G = parse_edge_list(fh.read())
    return validate(name, G)


def moser():
    return load("moser")


def bowtie():
    return load("bowtie")


def k_a():
    return load("k_a")


def k_b():
    return load("k_b")
