"""Exact homomorphism search on small graphs.

The solver assigns source vertices in breadth-first order from a vertex of
maximum degree, tries target values in ascending order and keeps every
domain arc-consistent after each assignment.  Domains are Python ints used
as bitsets over the target's vertices.
"""

from __future__ import annotations

import os
import time
from collections import deque
from dataclasses import dataclass

from .errors import InvalidHom, SearchTimeout
from .graph import Graph

__all__ = [
    "Hom",
    "find_hom",
    "iter_homs",
    "is_hom_equivalent",
    "find_retraction",
    "find_isomorphism",
    "is_core",
    "parse_hom",
    "default_deadline",
]


@dataclass(frozen=True, eq=False)
class Hom:
    """A vertex map ``source -> target``; ``mapping[v]`` is the image of ``v``."""

    source: Graph
    target: Graph
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != self.source.n:
            raise InvalidHom("mapping must be total on the source")

    def __call__(self, v):
        return self.mapping[v]

    def violations(self):
        """Source edges whose images are not target edges."""
        m, K = self.mapping, self.target
        bad = []
        for u, v in sorted(self.source.edges):
            if not (0 <= m[u] < K.n and 0 <= m[v] < K.n) or not K.has_edge(m[u], m[v]):
                bad.append((u, v))
        return bad

    def is_valid(self):
        return not self.violations()

    def check(self):
        bad = self.violations()
        if bad:
            raise InvalidHom(f"{len(bad)} edges not preserved, first {bad[0]!r}")
        return self

    def compose(self, other):
        """``other`` after ``self`` (self: G->M, other: M->K)."""
        return Hom(self.source, other.target, tuple(other.mapping[x] for x in self.mapping))

    def image(self):
        return sorted(set(self.mapping))

    def to_text(self):
        S, K = self.source, self.target
        return "\n".join(f"{S.label(u)} -> {K.label(k)}" for u, k in enumerate(self.mapping)) + "\n"

    def __eq__(self, other):
        return isinstance(other, Hom) and self.mapping == other.mapping and \
            self.source == other.source and self.target == other.target

    def __hash__(self):
        return hash(self.mapping)


def parse_hom(text, source, target):
    """Inverse of :meth:`Hom.to_text` (labels or integer ids accepted)."""
    mapping = [None] * source.n
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, rhs = (x.strip() for x in line.split("->"))
        mapping[source.vertex(lhs)] = target.vertex(rhs)
    if any(x is None for x in mapping):
        raise InvalidHom("hom text does not cover every source vertex")
    return Hom(source, target, tuple(mapping))


def default_deadline(seconds=None):
    """Deadline (monotonic clock) from an explicit value or HOMLAB_BUDGET."""
    if seconds is None:
        env = os.environ.get("HOMLAB_BUDGET")
        if not env:
            return None
        seconds = float(env)
    return time.monotonic() + seconds


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _order(G):
    """Breadth-first order, each component started at a max-degree vertex."""
    seen = [False] * G.n
    order = []
    remaining = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    for s in remaining:
        if seen[s]:
            continue
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            order.append(u)
            for w in sorted(G.neighbours(u)):
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
    return order


class _Solver:
    def __init__(self, G, K, domains=None, injective=False, deadline=None):
        self.G, self.K = G, K
        self.kadj = [sum(1 << w for w in K.neighbours(k)) for k in range(K.n)]
        full = (1 << K.n) - 1
        loops = sum(1 << k for k in range(K.n) if K.has_loop(k))
        dom = []
        for v in range(G.n):
            d = full if domains is None or domains[v] is None else domains[v]
            if G.has_loop(v):
                d &= loops
            dom.append(d)
        self.dom0 = dom
        self.nbrs = [sorted(w for w in G.neighbours(v) if w != v) for v in range(G.n)]
        self.order = _order(G)
        self.injective = injective
        self.deadline = deadline
        self.ticks = 0

    def _support(self, mask):
        s = 0
        for k in _bits(mask):
            s |= self.kadj[k]
        return s

    def propagate(self, dom, queue):
        nbrs = self.nbrs
        while queue:
            x = queue.pop()
            sup = self._support(dom[x])
            for y in nbrs[x]:
                new = dom[y] & sup
                if new != dom[y]:
                    if not new:
                        return False
                    dom[y] = new
                    queue.append(y)
        return True

    def _tick(self):
        self.ticks += 1
        if self.deadline is not None and self.ticks % 256 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout("homomorphism search exceeded its deadline")

    def solutions(self):
        dom = list(self.dom0)
        if any(d == 0 for d in dom):
            return
        if not self.propagate(dom, list(range(self.G.n))):
            return
        yield from self._extend(dom, 0)

    def _extend(self, dom, i):
        if i == len(self.order):
            yield tuple(d.bit_length() - 1 for d in dom)
            return
        v = self.order[i]
        for k in _bits(dom[v]):
            self._tick()
            nd = list(dom)
            nd[v] = 1 << k
            queue = [v]
            if self.injective:
                ok = True
                for w in self.order[i + 1:]:
                    if nd[w] & (1 << k):
                        nd[w] &= ~(1 << k)
                        if not nd[w]:
                            ok = False
                            break
                        queue.append(w)
                if not ok:
                    continue
            if self.propagate(nd, queue):
                yield from self._extend(nd, i + 1)


def iter_homs(G, K, fixed=None, deadline=None):
    """Yield every homomorphism ``G -> K`` as a tuple, in search order."""
    domains = None
    if fixed:
        domains = [None] * G.n
        for v, k in fixed.items():
            domains[v] = 1 << k
    yield from _Solver(G, K, domains, deadline=deadline).solutions()


def find_hom(G, K, fixed=None, allowed=None, deadline=None):
    """Find a homomorphism ``G -> K`` or return None (the search is complete).

    Parameters
    ----------
    fixed : dict, optional
        Pre-assigned images ``{v: k}``.
    allowed : sequence of iterables, optional
        Per-vertex candidate images (None entries mean unrestricted).
    deadline : float, optional
        ``time.monotonic()`` value after which SearchTimeout is raised.
        Defaults to the HOMLAB_BUDGET environment variable (seconds).

    >>> from homlab.graph import cycle_graph
    >>> find_hom(cycle_graph(5), cycle_graph(3)) is not None
    True
    """
    if deadline is None:
        deadline = default_deadline()
    domains = [None] * G.n
    if allowed is not None:
        for v, a in enumerate(allowed):
            if a is not None:
                domains[v] = sum(1 << k for k in set(a))
    if fixed:
        for v, k in fixed.items():
            domains[v] = (domains[v] if domains[v] is not None else (1 << K.n) - 1) & (1 << k)
    for sol in _Solver(G, K, domains, deadline=deadline).solutions():
        return Hom(G, K, sol)
    return None


def is_hom_equivalent(G, H, deadline=None):
    return find_hom(G, H, deadline=deadline) is not None and \
        find_hom(H, G, deadline=deadline) is not None


def find_retraction(G, S, deadline=None):
    """A retraction of ``G`` onto the vertex set ``S``, or None.

    The target is ``G`` restricted to the edges inside ``S`` with the
    original vertex ids, so "fixing ``S`` pointwise" is literal: the
    returned map is the identity on ``S`` and sends everything into ``S``.
    """
    S = sorted(set(S))
    target = G.spanning_restriction(S)
    fixed = {s: s for s in S}
    return find_hom(G, target, fixed=fixed, allowed=[S] * G.n, deadline=deadline)


def _invariant(G, v):
    return (G.degree(v), G.has_loop(v), tuple(sorted(G.degree(w) for w in G.neighbours(v))))


def find_isomorphism(G, H, deadline=None):
    """An isomorphism ``G -> H`` as a Hom, or None."""
    if G.n != H.n or G.num_edges != H.num_edges:
        return None
    ig = [_invariant(G, v) for v in range(G.n)]
    ih = [_invariant(H, v) for v in range(H.n)]
    if sorted(ig) != sorted(ih):
        return None
    allowed = [[w for w in range(H.n) if ih[w] == ig[v]] for v in range(G.n)]
    domains = [sum(1 << w for w in a) for a in allowed]
    solver = _Solver(G, H, domains, injective=True, deadline=deadline or default_deadline())
    for sol in solver.solutions():
        # injective + edge-preserving with equal edge counts is an isomorphism
        return Hom(G, H, sol)
    return None


def is_core(G, deadline=None):
    """True iff no homomorphism maps ``G`` into ``G`` minus one vertex."""
    for v in range(G.n):
        allowed = [[w for w in range(G.n) if w != v]] * G.n
        if find_hom(G, G, allowed=allowed, deadline=deadline) is not None:
            return False
    return True
