"""The third-power functor ``P3`` and its right adjoint.

``P3(G)`` joins two vertices when a walk of length exactly three runs
between them.  ``P3^-1(H)`` has a vertex ``(u, A)`` for every vertex ``u``
of ``H`` and nonempty ``A`` inside its neighbourhood; ``(u, A)`` and
``(v, B)`` are adjacent when ``u`` is in ``B``, ``v`` is in ``A`` and every
vertex of ``A`` is adjacent to every vertex of ``B``.  Then
``P3(G) -> H`` exists exactly when ``G -> P3^-1(H)`` does.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import BudgetExceeded, ConsistencyError, GirthTooSmall, InvalidHom
from .graph import Graph
from .homsearch import Hom

__all__ = [
    "p3",
    "p3_inverse",
    "adjoint_vertices",
    "format_adjoint_label",
    "unit",
    "transpose",
    "girth13_psi",
    "MAX_DEGREE",
]

MAX_DEGREE = 12


def p3(G):
    """Graph on ``V(G)`` joining the ends of every walk of length three.

    Vertices on a triangle (or with a loop) get a loop.

    >>> from homlab.graph import complete_graph
    >>> p3(complete_graph(2)).edge_list()
    [(0, 1)]
    """
    A = G.adjacency_matrix().astype(np.int64)
    A3 = A @ A @ A
    es = [(i, j) for i in range(G.n) for j in range(i, G.n) if A3[i, j]]
    return Graph(G.n, es, [G.label(v) for v in range(G.n)])


def adjoint_vertices(G):
    """The pairs ``(u, A)`` in vertex order: by ``u``, then by ``|A|``, then lexicographically."""
    out = []
    for u in range(G.n):
        nb = sorted(G.neighbours(u))
        for k in range(1, len(nb) + 1):
            out.extend((u, A) for A in itertools.combinations(nb, k))
    return out


def format_adjoint_label(G, u, A):
    return f"{G.label(u)}:{{{','.join(G.label(a) for a in A)}}}"


def _joined(G, A, B):
    return all(G.has_edge(a, b) for a in A for b in B)


def p3_inverse(G, override=False):
    """The right adjoint of :func:`p3`.

    Refuses graphs of maximum degree above ``MAX_DEGREE`` unless
    ``override`` is set.

    >>> from homlab.graph import cycle_graph
    >>> p3_inverse(cycle_graph(3)).n
    9
    """
    if G.max_degree() > MAX_DEGREE and not override:
        raise BudgetExceeded(f"maximum degree {G.max_degree()} exceeds {MAX_DEGREE}")
    verts = adjoint_vertices(G)
    by_u = {}
    for i, (u, A) in enumerate(verts):
        by_u.setdefault(u, []).append(i)
    es = []
    for i, (u, A) in enumerate(verts):
        for v in A:
            for j in by_u[v]:
                if j < i:
                    continue
                _, B = verts[j]
                if u in B and _joined(G, A, B):
                    es.append((i, j))
    labels = [format_adjoint_label(G, u, A) for u, A in verts]
    return Graph(len(verts), es, labels)


def _index(G):
    return {x: i for i, x in enumerate(adjoint_vertices(G))}


def unit(G):
    """The homomorphism ``G -> P3^-1(P3(G))``, ``g -> (g, N(g))``.

    Raises InvalidHom on isolated vertices, which have no neighbourhood to use.
    """
    P = p3(G)
    target = p3_inverse(P, override=True)
    idx = _index(P)
    m = []
    for g in range(G.n):
        A = tuple(sorted(G.neighbours(g)))
        if not A:
            raise InvalidHom(f"vertex {G.label(g)} is isolated")
        m.append(idx[(g, A)])
    return Hom(G, target, tuple(m)).check()


def transpose(G, H, f, direction):
    """Transpose a homomorphism across the adjunction.

    ``direction="left-to-right"``: ``f: P3(G) -> H`` becomes
    ``G -> P3^-1(H)``, ``g -> (f(g), f(N(g)))``; an isolated ``g`` goes to
    some vertex over ``f(g)`` if there is one, else to the first vertex.
    ``direction="right-to-left"``: ``f: G -> P3^-1(H)`` becomes
    ``P3(G) -> H`` by keeping the first coordinate.
    The result is validated.
    """
    verts = adjoint_vertices(H)
    if direction == "left-to-right":
        P = p3(G)
        Hom(P, H, tuple(f.mapping)).check()
        target = p3_inverse(H, override=True)
        idx = {x: i for i, x in enumerate(verts)}
        m = []
        for g in range(G.n):
            u = f.mapping[g]
            A = tuple(sorted({f.mapping[x] for x in G.neighbours(g)}))
            if not A:
                # g is isolated, so any vertex of the adjoint will do
                nb = sorted(H.neighbours(u))
                if nb:
                    m.append(idx[(u, (nb[0],))])
                elif verts:
                    m.append(0)
                else:
                    raise InvalidHom("the adjoint of an edgeless graph is empty")
                continue
            m.append(idx[(u, A)])
        return Hom(G, target, tuple(m)).check()
    if direction == "right-to-left":
        target = p3_inverse(H, override=True)
        Hom(G, target, tuple(f.mapping)).check()
        return Hom(p3(G), H, tuple(verts[i][0] for i in f.mapping)).check()
    raise ValueError("direction is 'left-to-right' or 'right-to-left'")


def girth13_psi(K):
    """Homomorphism ``P3^-1(P3(K)) -> K`` for ``K`` of girth at least 13.

    ``(u, A)`` goes to ``u`` when the vertices of ``A`` have no common
    neighbour in ``K``, and otherwise to the common neighbour closest to
    ``u`` (unique under the girth bound).
    """
    g = K.girth()
    if g < 13:
        raise GirthTooSmall(f"girth {g} is below 13", K.shortest_cycle())
    P = p3(K)
    S = p3_inverse(P, override=True)
    verts = adjoint_vertices(P)
    dist = [K.distances_from(v) for v in range(K.n)]
    m = []
    for u, A in verts:
        cn = set.intersection(*(set(K.neighbours(a)) for a in A))
        if not cn:
            m.append(u)
            continue
        d = {c: dist[u][c] for c in cn}
        best = min(d.values())
        closest = [c for c in cn if d[c] == best]
        if len(closest) != 1:
            raise ConsistencyError(f"common neighbours of {A} tie at distance {best} from {u}")
        m.append(closest[0])
    return Hom(S, K, tuple(m)).check()
