"""Finite graphs, products, squares, folds and square-dismantling.

Vertices are the integers ``0..n-1``.  Edges are unordered pairs stored as
``(min, max)`` tuples; a loop at ``v`` is the pair ``(v, v)``.  Optional
labels are display names only and never take part in equality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import EvenCycle, InvalidDismantling, NoSuchEdge, NotACycle

__all__ = [
    "Graph",
    "DismantlingStep",
    "DismantlingSequence",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "tensor_product",
    "union_subproduct",
    "check_cycle",
    "squares_through_edge",
    "all_squares",
    "square_counts",
    "find_dismantling_sequence",
    "validate_dismantling_sequence",
    "find_fold",
    "parse_edge_list",
    "format_edge_list",
    "to_dot",
]


def _norm(u, v):
    return (u, v) if u <= v else (v, u)


class Graph:
    """An immutable undirected graph on ``range(n)``, loops allowed.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Each pair ``(u, v)`` is an edge; ``(v, v)`` is a loop.  Duplicates
        and orientation are ignored.
    labels : sequence of str, optional
        Display names, one per vertex.

    Examples
    --------
    >>> G = Graph(3, [(0, 1), (1, 2), (2, 2)])
    >>> sorted(G.neighbours(2))
    [1, 2]
    >>> G.has_loop(2), G.num_edges
    (True, 3)
    """

    __slots__ = ("n", "edges", "labels", "_adj", "_hash")

    def __init__(self, n, edges=(), labels=None):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} has an endpoint outside [0, {n})")
            es.add(_norm(u, v))
        adj = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("need exactly one label per vertex")
        self.n = n
        self.edges = frozenset(es)
        self.labels = labels
        self._adj = tuple(frozenset(a) for a in adj)
        self._hash = None

    # -- basic queries -------------------------------------------------
    def neighbours(self, v):
        return self._adj[v]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def has_loop(self, v):
        return v in self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    @property
    def num_edges(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n)

    def edge_list(self):
        return sorted(self.edges)

    def arcs(self):
        """All arcs ``(u, v)`` in lexicographic order (a loop gives one arc)."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u])]

    def label(self, v):
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, name):
        """Vertex id for a label (or a decimal id string)."""
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        v = int(name)
        if not 0 <= v < self.n:
            raise KeyError(name)
        return v

    def is_loopless(self):
        return all(u != v for u, v in self.edges)

    def max_degree(self):
        return max((len(a) for a in self._adj), default=0)

    # -- structure -----------------------------------------------------
    def distances_from(self, s):
        dist = [-1] * self.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in sorted(self._adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist

    def shortest_path(self, s, t):
        """Vertex sequence of a shortest path from s to t, or None."""
        prev = {s: None}
        q = deque([s])
        while q:
            u = q.popleft()
            if u == t:
                break
            for w in sorted(self._adj[u]):
                if w not in prev:
                    prev[w] = u
                    q.append(w)
        if t not in prev:
            return None
        out = [t]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return tuple(reversed(out))

    def components(self):
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, q = [s], deque([s])
            while q:
                u = q.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        q.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def two_colouring(self):
        """A proper 2-colouring as a list of 0/1, or None if not bipartite."""
        col = [-1] * self.n
        for s in range(self.n):
            if col[s] >= 0:
                continue
            col[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for w in self._adj[u]:
                    if col[w] < 0:
                        col[w] = 1 - col[u]
                        q.append(w)
                    elif col[w] == col[u]:
                        return None
        return col

    def is_bipartite(self):
        return self.two_colouring() is not None

    def shortest_cycle(self):
        """Vertex sequence of a shortest cycle (a loop counts as length 1).

        Returns None for forests.
        """
        for u, v in sorted(self.edges):
            if u == v:
                return (u,)
        best = None
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: None}
            q = deque([s])
            while q:
                u = q.popleft()
                if best is not None and 2 * dist[u] + 1 >= len(best):
                    break
                for w in sorted(self._adj[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        q.append(w)
                    elif parent[u] != w:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < len(best):
                            a, b = [u], [w]
                            while parent[a[-1]] is not None:
                                a.append(parent[a[-1]])
                            while parent[b[-1]] is not None:
                                b.append(parent[b[-1]])
                            # both chains end at s; join them into a cycle
                            cyc = list(reversed(a)) + b[:-1]
                            if len(set(cyc)) == len(cyc) and len(cyc) == length:
                                best = tuple(cyc)
        return best

    def girth(self):
        c = self.shortest_cycle()
        return float("inf") if c is None else len(c)

    def shortest_odd_cycle(self):
        """Vertex sequence of a shortest odd cycle, or None if bipartite."""
        best = None
        for u, v in self.edges:
            if u == v:
                return (u,)
        for s in range(self.n):
            # BFS on the bipartite double cover from (s,0) to (s,1)
            prev = {(s, 0): None}
            q = deque([(s, 0)])
            while q:
                x = q.popleft()
                if x == (s, 1):
                    break
                u, p = x
                for w in sorted(self._adj[u]):
                    y = (w, 1 - p)
                    if y not in prev:
                        prev[y] = x
                        q.append(y)
            if (s, 1) not in prev:
                continue
            walk = [(s, 1)]
            while prev[walk[-1]] is not None:
                walk.append(prev[walk[-1]])
            verts = [w for w, _ in reversed(walk)][:-1]
            if len(set(verts)) == len(verts) and (best is None or len(verts) < len(best)):
                best = tuple(verts)
        return best

    def induced_subgraph(self, vertices):
        """Induced subgraph on ``vertices`` (re-indexed in sorted order).

        Returns ``(subgraph, old_ids)`` where ``old_ids[i]`` is the original
        id of new vertex ``i``.
        """
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        labels = [self.label(v) for v in old]
        return Graph(len(old), es, labels), tuple(old)

    def spanning_restriction(self, vertices):
        """Same vertex ids, keeping only edges with both ends in ``vertices``."""
        keep = set(vertices)
        es = [e for e in self.edges if e[0] in keep and e[1] in keep]
        return Graph(self.n, es, self.labels)

    def remove_edges(self, edges):
        drop = {_norm(*e) for e in edges}
        return Graph(self.n, self.edges - drop, self.labels)

    def add_edges(self, edges):
        return Graph(self.n, set(self.edges) | {_norm(*e) for e in edges}, self.labels)

    def with_labels(self, labels):
        return Graph(self.n, self.edges, labels)

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        labels = None
        if self.labels is not None:
            labels = [None] * self.n
            for v in range(self.n):
                labels[perm[v]] = self.labels[v]
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges], labels)

    def adjacency_matrix(self):
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            A[u, v] = 1
            A[v, u] = 1
        return A

    # -- dunder ----------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


# ---------------------------------------------------------------------------
# builders

def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, combinations(range(n), 2))


# ---------------------------------------------------------------------------
# products

def tensor_product(G, H):
    """Categorical (tensor) product; vertex ``(g, h)`` has index ``g*|H|+h``.

    >>> K2 = complete_graph(2)
    >>> tensor_product(K2, K2).num_edges
    2
    """
    m = H.n
    es = []
    for g1, g2 in G.edges:
        for h1, h2 in H.edges:
            es.append((g1 * m + h1, g2 * m + h2))
            es.append((g1 * m + h2, g2 * m + h1))
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.n) for h in range(m)]
    return Graph(G.n * m, es, labels)


def check_cycle(G, C):
    """Validate a cycle given as a vertex sequence; return it as a tuple.

    Raises NotACycle unless the vertices are distinct, consecutive ones
    (cyclically) are adjacent and there are at least three of them.
    Raises EvenCycle for even length.
    """
    C = tuple(int(c) for c in C)
    if len(C) < 3 or len(set(C)) != len(C) or any(not 0 <= c < G.n for c in C):
        raise NotACycle(f"{C!r} is not a cycle")
    for i, c in enumerate(C):
        if not G.has_edge(c, C[(i + 1) % len(C)]):
            raise NotACycle(f"{C!r} is not a cycle: missing edge at position {i}")
    if len(C) % 2 == 0:
        raise EvenCycle(f"cycle of even length {len(C)}")
    return C


def _cycle_edges(C):
    return [(C[i], C[(i + 1) % len(C)]) for i in range(len(C))]


def union_subproduct(G, C, H, D):
    """The subgraph ``(G x D) u (C x H)`` of ``G x H``.

    ``C`` and ``D`` are odd cycles (vertex sequences) of ``G`` and ``H``.
    All of ``V(G) x V(H)`` is kept, including isolated vertices.
    """
    C = check_cycle(G, C)
    D = check_cycle(H, D)
    m = H.n
    es = set()

    def add(g1, g2, h1, h2):
        es.add(_norm(g1 * m + h1, g2 * m + h2))
        es.add(_norm(g1 * m + h2, g2 * m + h1))

    for g1, g2 in G.edges:
        for h1, h2 in _cycle_edges(D):
            add(g1, g2, h1, h2)
    for g1, g2 in _cycle_edges(C):
        for h1, h2 in H.edges:
            add(g1, g2, h1, h2)
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.n) for h in range(m)]
    return Graph(G.n * m, es, labels)


# ---------------------------------------------------------------------------
# squares

def squares_through_edge(G, e):
    """All vertex-distinct 4-cycles through the edge ``e``.

    Each square is returned once, as ``(u, v, w, x)`` with ``e = {u, v}``
    oriented as given; chords are allowed.
    """
    u, v = e
    if not G.has_edge(u, v):
        raise NoSuchEdge(f"{e!r} is not an edge")
    out = []
    if u == v:
        return out
    for w in sorted(G.neighbours(v)):
        if w in (u, v):
            continue
        for x in sorted(G.neighbours(w) & G.neighbours(u)):
            if x not in (u, v, w):
                out.append((u, v, w, x))
    return out


def all_squares(G):
    """Every square once, as a canonical vertex tuple.

    The canonical tuple starts at its least vertex and continues towards
    the smaller of that vertex's two square-neighbours.
    """
    seen = set()
    for e in sorted(G.edges):
        for sq in squares_through_edge(G, e):
            i = sq.index(min(sq))
            rot = sq[i:] + sq[:i]
            if rot[1] > rot[3]:
                rot = (rot[0], rot[3], rot[2], rot[1])
            seen.add(rot)
    return sorted(seen)


def square_counts(G):
    """Map each edge to the number of squares containing it."""
    counts = {e: 0 for e in G.edges}
    for sq in all_squares(G):
        for i in range(4):
            counts[_norm(sq[i], sq[(i + 1) % 4])] += 1
    return counts


@dataclass(frozen=True)
class DismantlingStep:
    """One removal: ``edge = (a, d)`` and its detour ``(a, b, c, d)``."""

    edge: tuple
    detour: tuple


@dataclass(frozen=True, eq=False)
class DismantlingSequence:
    """A square-dismantling sequence of ``source`` ending in ``kernel``."""

    source: Graph
    steps: tuple
    kernel: Graph

    @property
    def removed(self):
        return [s.edge for s in self.steps]

    def intermediate(self, i):
        """The graph after the first ``i`` removals."""
        return self.source.remove_edges(self.removed[:i])

    def __len__(self):
        return len(self.steps)


def _remove_step(G, e):
    sqs = squares_through_edge(G, e)
    if len(sqs) != 1:
        return None
    a, d, c, b = sqs[0]  # square a-d-c-b-a, so the detour from a to d is a,b,c,d
    return DismantlingStep((a, d), (a, b, c, d))


def validate_dismantling_sequence(G, edges):
    """Check a proposed removal order and build its DismantlingSequence.

    Raises InvalidDismantling with the offending step if an edge is absent,
    is not in exactly one square when removed, or the end result still has
    a square.
    """
    cur = G
    steps = []
    for i, e in enumerate(edges):
        a, d = (int(x) for x in e)
        if not cur.has_edge(a, d):
            raise InvalidDismantling(f"step {i}: {e!r} is not an edge of the current graph")
        step = _remove_step(cur, (a, d))
        if step is None:
            k = len(squares_through_edge(cur, (a, d)))
            raise InvalidDismantling(f"step {i}: {e!r} lies in {k} squares, not exactly one")
        steps.append(step)
        cur = cur.remove_edges([(a, d)])
    if all_squares(cur):
        raise InvalidDismantling(f"kernel still contains squares: {all_squares(cur)[:3]}")
    return DismantlingSequence(G, tuple(steps), cur)


def find_dismantling_sequence(G, budget=24):
    """Search for a square-dismantling sequence of ``G``.

    At every step the lexicographically least edge lying in exactly one
    square is removed, with backtracking on dead ends.  ``budget`` caps
    the number of removals along one branch.  Returns None if none is found.

    >>> find_dismantling_sequence(complete_graph(4)) is None
    True
    """

    def search(cur, steps):
        counts = square_counts(cur)
        if not any(counts.values()):
            return steps
        if len(steps) >= budget:
            return None
        for e in sorted(x for x, k in counts.items() if k == 1):
            step = _remove_step(cur, e)
            found = search(cur.remove_edges([e]), steps + [step])
            if found is not None:
                return found
        return None

    steps = search(G, [])
    if steps is None:
        return None
    return validate_dismantling_sequence(G, [s.edge for s in steps])


def find_fold(G):
    """Return ``(v, u)`` with ``v != u`` and ``N(v)`` inside ``N(u)``, or None."""
    for v in range(G.n):
        Nv = G.neighbours(v)
        for u in range(G.n):
            if u != v and Nv <= G.neighbours(u):
                return (v, u)
    return None


# ---------------------------------------------------------------------------
# text formats

def parse_edge_list(text):
    """Parse the edge-list format.

    One edge ``u v`` per line, ``#`` starts a comment and ``label v name``
    names a vertex (which also declares it, so isolated vertices survive).
    """
    edges, labels = [], {}
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "label":
                if len(parts) != 3:
                    raise ValueError
                v = int(parts[1])
                labels[v] = parts[2]
                top = max(top, v)
            else:
                if len(parts) != 2:
                    raise ValueError
                u, v = int(parts[0]), int(parts[1])
                edges.append((u, v))
                top = max(top, u, v)
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}") from None
    n = top + 1
    lab = None
    if labels:
        lab = [labels.get(v, str(v)) for v in range(n)]
    return Graph(n, edges, lab)


def format_edge_list(G, comment=None):
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    isolated_tail = G.n > 0 and not any(max(e) == G.n - 1 for e in G.edges)
    if G.labels is not None:
        lines += [f"label {v} {G.labels[v]}" for v in range(G.n)]
    elif isolated_tail:
        lines.append(f"label {G.n - 1} {G.n - 1}")
    lines += [f"{u} {v}" for u, v in G.edge_list()]
    return "\n".join(lines) + "\n"


_PALETTE = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
]


def to_dot(G, name="G", colour_of=None, dashed=()):
    """DOT text; ``colour_of[v]`` picks a palette slot, ``dashed`` edges are dashed."""
    dashed = {_norm(*e) for e in dashed}
    out = [f"graph {name} {{", "  node [style=filled];"]
    for v in range(G.n):
        attrs = [f'label="{G.label(v)}"']
        if colour_of is not None:
            attrs.append(f'fillcolor="{_PALETTE[colour_of[v] % len(_PALETTE)]}"')
        out.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in G.edge_list():
        style = " [style=dashed]" if (u, v) in dashed else ""
        out.append(f"  {u} -- {v}{style};")
    out.append("}")
    return "\n".join(out) + "\n"
