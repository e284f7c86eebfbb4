"""Exponential graphs over odd cycles, recolouring and the trichotomy classifier.

A vertex of ``K^{C_n}`` is a function table ``f`` of length ``n``; ``f`` and
``g`` are adjacent when ``f(i)`` is adjacent to ``g(i-1)`` and ``g(i+1)`` for
every ``i``.  The graph has ``|V(K)|^n`` vertices, so it is only ever
explored lazily from a start vertex.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    BudgetExceeded,
    Bipartite,
    ConsistencyError,
    InvalidHom,
    NotClosed,
    NotConstantSlice,
    NotDismantlable,
    ParityMismatch,
    TooShort,
    WrongHost,
)
from .graph import Graph, check_cycle, find_dismantling_sequence, union_subproduct, all_squares
from .homsearch import Hom
from .walks import (
    Walk,
    arc_closed_walk,
    cyclic_reduction,
    image_walk,
    normal_form,
    primitive_root,
    reduce_vertices,
    tensor_walk,
    tensor_walk_dual,
)

__all__ = [
    "exp_adjacent",
    "exp_neighbours",
    "ExpComponent",
    "exp_component",
    "constant_table",
    "format_table",
    "parse_table",
    "eps_membership",
    "RecolourStep",
    "recolour_path",
    "apply_steps",
    "lengthen",
    "lengthening_map",
    "precompose",
    "Confirmed",
    "Unresolved",
    "conjugacy_oracle",
    "replay_certificate",
    "TrichotomyResult",
    "classify_trichotomy",
    "constant_slice_hom",
]


# ---------------------------------------------------------------------------
# lazy exponential graph

def exp_adjacent(K, f, g):
    """Adjacency in ``K^{C_n}``.

    >>> from homlab.graph import complete_graph
    >>> exp_adjacent(complete_graph(3), (0, 0, 0), (1, 1, 1))
    True
    """
    n = len(f)
    return len(g) == n and all(K.has_edge(f[i], g[(i - 1) % n]) and K.has_edge(f[i], g[(i + 1) % n])
                               for i in range(n))


def exp_neighbours(K, f):
    """All neighbours of ``f`` in ``K^{C_n}``, in lexicographic order."""
    n = len(f)
    choices = [sorted(K.neighbours(f[(i - 1) % n]) & K.neighbours(f[(i + 1) % n])) for i in range(n)]
    return [tuple(c) for c in itertools.product(*choices)]


def constant_table(v, n):
    return (v,) * n


def format_table(f, K=None):
    """Comma-separated values, e.g. ``6,2,6,4,6,4,2,4,2``."""
    return ",".join(K.label(v) if K is not None else str(v) for v in f)


def parse_table(text, K=None):
    parts = [p.strip() for p in text.split(",")]
    return tuple(K.vertex(p) if K is not None else int(p) for p in parts)


@dataclass(frozen=True, eq=False)
class ExpComponent:
    """A (possibly truncated) connected piece of ``K^{C_n}``.

    Vertex ``i`` of ``graph`` is the table ``tables[i]``; tables are in
    lexicographic order.
    """

    K: Graph
    n: int
    tables: tuple
    graph: Graph
    truncated: bool
    index: dict = field(repr=False)

    def __len__(self):
        return len(self.tables)

    def __contains__(self, f):
        return tuple(f) in self.index


def exp_component(K, n, start, vertex_budget=200000, strict=False):
    """Breadth-first closure of ``start`` in ``K^{C_n}``.

    Stops once ``vertex_budget`` vertices are known and sets ``truncated``.
    With ``strict=True`` a truncation raises BudgetExceeded carrying the
    partial component instead.

    >>> from homlab.graph import complete_graph
    >>> len(exp_component(complete_graph(2), 3, (0, 0, 0)))
    2
    """
    start = tuple(start)
    if n % 2 == 0 or len(start) != n:
        raise ValueError("need a table on an odd cycle")
    seen = {start}
    q = deque([start])
    truncated = False
    while q:
        f = q.popleft()
        for g in exp_neighbours(K, f):
            if g not in seen:
                if len(seen) >= vertex_budget:
                    truncated = True
                    break
                seen.add(g)
                q.append(g)
        if truncated:
            break
    tables = tuple(sorted(seen))
    index = {t: i for i, t in enumerate(tables)}
    es = []
    for i, f in enumerate(tables):
        for g in exp_neighbours(K, f):
            j = index.get(g)
            if j is not None and i <= j:
                es.append((i, j))
    labels = [format_table(t, K) for t in tables]
    comp = ExpComponent(K, n, tables, Graph(len(tables), es, labels), truncated, index)
    if truncated and strict:
        raise BudgetExceeded(f"component exceeds {vertex_budget} vertices", comp)
    return comp


def eps_membership(D, n, h, h2):
    """True iff the closed walk of the arc ``(h, h2)`` has trivial normal form."""
    K = D.source
    a = normal_form(D, arc_closed_walk(K, n, h, h2)).is_trivial()
    b = normal_form(D, arc_closed_walk(K, n, h2, h)).is_trivial()
    if a != b:
        raise ConsistencyError("membership depends on the orientation of the arc")
    return a


# ---------------------------------------------------------------------------
# recolouring

@dataclass(frozen=True)
class RecolourStep:
    position: int
    old: int
    new: int


def _step_ok(G, K, f, v, c):
    for w in G.neighbours(v):
        if w == v:
            if not (K.has_edge(c, c) and K.has_edge(f[v], c)):
                return False
        elif not K.has_edge(c, f[w]):
            return False
    return True


def apply_steps(G, K, f, steps):
    """Apply recolouring steps to the map ``f``, checking each one."""
    f = list(f)
    for st in steps:
        if f[st.position] != st.old or not _step_ok(G, K, f, st.position, st.new):
            raise InvalidHom(f"invalid recolouring step {st}")
        f[st.position] = st.new
    return tuple(f)


def recolour_path(G, K, a, b, rel=(), guard=2 * 10 ** 7):
    """Shortest recolouring sequence from ``a`` to ``b``, or None.

    Breadth-first search over all homomorphisms ``G -> K`` that agree with
    ``a`` on ``rel``; consecutive maps differ at one vertex.  Refuses (with
    BudgetExceeded) when ``|V(K)|^|V(G)|`` exceeds ``guard``.
    """
    a = tuple(a.mapping if isinstance(a, Hom) else a)
    b = tuple(b.mapping if isinstance(b, Hom) else b)
    for f in (a, b):
        if not Hom(G, K, f).is_valid():
            raise InvalidHom(f"{f!r} is not a homomorphism")
    rel = set(rel)
    if any(a[v] != b[v] for v in rel):
        return None
    if K.n ** G.n > guard:
        raise BudgetExceeded(f"state space {K.n}^{G.n} exceeds the guard {guard}")
    free = [v for v in range(G.n) if v not in rel]
    prev = {a: None}
    q = deque([a])
    while q:
        f = q.popleft()
        if f == b:
            break
        for v in free:
            for c in range(K.n):
                if c != f[v] and _step_ok(G, K, f, v, c):
                    g = f[:v] + (c,) + f[v + 1:]
                    if g not in prev:
                        prev[g] = (f, RecolourStep(v, f[v], c))
                        q.append(g)
    if b not in prev:
        return None
    steps = []
    cur = b
    while prev[cur] is not None:
        cur, st = prev[cur]
        steps.append(st)
    return steps[::-1]


def lengthen(W, m):
    """Pad ``W`` to length ``m`` with back-and-forth steps at its end.

    >>> from homlab.graph import cycle_graph
    >>> lengthen(Walk(cycle_graph(5), (2,)), 2).vertices
    (2, 1, 2)
    """
    L = len(W)
    if m < L:
        raise TooShort(f"cannot shorten a walk of length {L} to {m}")
    if (m - L) % 2:
        raise ParityMismatch("lengthening preserves the parity of the length")
    t = W.end
    nb = sorted(W.host.neighbours(t))
    if m > L and not nb:
        raise TooShort("the end vertex has no neighbour")
    pad = (nb[0], t) * ((m - L) // 2) if m > L else ()
    return Walk(W.host, W.vertices + pad, check=False)


def lengthening_map(n, m):
    """The map ``C_m -> C_n``: identity on ``0..n-1``, then ``n-1, n-2, n-1, ...``.

    >>> lengthening_map(3, 7)
    (0, 1, 2, 1, 2, 1, 2)
    """
    if m < n or (m - n) % 2:
        raise ValueError("need m >= n with m - n even")
    return tuple(i if i < n else (n - 1 if (i - n) % 2 else n - 2) for i in range(m))


def precompose(f, ell):
    return tuple(f[ell[i]] for i in range(len(ell)))


# ---------------------------------------------------------------------------
# conjugacy oracle

@dataclass
class Confirmed:
    """Recolouring certificate that two closed walks are conjugate.

    ``steps1`` recolours the ``m``-lengthening of the first walk and
    ``steps2`` that of the second; both end at closed walks with the same
    cyclically reduced word (up to rotation).
    """

    m: int
    steps1: list
    steps2: list
    meeting_word: tuple

    def __bool__(self):
        return True


@dataclass
class Unresolved:
    reason: str
    detail: object = None

    def __bool__(self):
        return False


def _cyclic_core(vs):
    """Cyclically reduced core of a closed vertex sequence."""
    _, Z = cyclic_reduction(reduce_vertices(tuple(vs)))
    return Z


def _key(Z):
    if len(Z) == 1:
        return ()
    body = Z[:-1]
    return min(body[i:] + body[:i] for i in range(len(body)))


def _rot(Z, r):
    body = Z[:-1]
    if not body:
        return Z
    r %= len(body)
    b = body[r:] + body[:r]
    return b + (b[0],)


class _Moves:
    def __init__(self, K):
        self.K = K
        sq = all_squares(K)
        # paths of three arcs around a square, keyed by their first and last vertex
        self.three = {}
        self.by_vertex = {}
        for a, b, c, d in sq:
            cyc = (a, b, c, d)
            for i in range(4):
                for s in (1, -1):
                    p = tuple(cyc[(i + s * j) % 4] for j in range(4))
                    self.three.setdefault((p[0], p[3]), []).append(p)
                    self.by_vertex.setdefault(p[0], []).append(p)
        for v in self.by_vertex:
            self.by_vertex[v] = sorted(set(self.by_vertex[v]))
        for e in self.three:
            self.three[e] = sorted(set(self.three[e]))

    def expand(self, Z, bound):
        """Yield ``(rotation, kind, params, peak, new core)`` for all moves."""
        K = self.K
        L = len(Z) - 1
        if L == 0:
            return
        for r in range(L):
            W = _rot(Z, r)
            z0, z1 = W[0], W[1]
            z2 = W[2] if L >= 2 else None
            # three arcs of a square -> the fourth
            if L >= 4:
                z3 = W[3]
                if K.has_edge(z0, z3) and len({z0, z1, z2, z3}) == 4:
                    yield r, "31", (z3,), L, _cyclic_core((z0, z3) + W[4:])
            # two arcs of a square -> the other two
            if L >= 3:
                for y in sorted(K.neighbours(z0) & K.neighbours(z2)):
                    if y != z1:
                        yield r, "22", (y,), L, _cyclic_core((z0, y) + W[2:])
            # one arc -> the other three arcs of a square
            if L + 2 <= bound:
                for p in self.three.get((z0, z1), []):
                    yield r, "13", (p[1], p[2]), L + 2, _cyclic_core((z0, p[1], p[2]) + W[1:])
            # insert a square at the start
            if L + 4 <= bound:
                for p in self.by_vertex.get(z0, []):
                    yield r, "04", (p[1], p[2], p[3]), L + 4, _cyclic_core((z0, p[1], p[2], p[3]) + W)


def _search(K, Z1, Z2, bound, budget):
    """Bidirectional search in the space of cyclic words for a common word."""
    mv = _Moves(K)
    sides = []
    for Z in (Z1, Z2):
        k = _key(Z)
        sides.append({"seen": {k: (None, None, Z)}, "heap": [(len(Z), 0, Z)], "tick": 1})
    k1, k2 = _key(Z1), _key(Z2)
    if k1 == k2:
        return k1, sides
    expanded = 0
    while any(s["heap"] for s in sides) and expanded < budget:
        side = min((s for s in sides if s["heap"]), key=lambda s: (s["heap"][0][0], len(s["seen"])))
        other = sides[1] if side is sides[0] else sides[0]
        _, _, Z = heapq.heappop(side["heap"])
        expanded += 1
        if len(Z) == 1:
            continue
        for r, kind, params, peak, new in mv.expand(Z, bound):
            k = _key(new)
            if k in side["seen"]:
                continue
            side["seen"][k] = (_key(Z), (r, kind, params, peak), new)
            if k in other["seen"]:
                return k, sides
            heapq.heappush(side["heap"], (len(new), side["tick"], new))
            side["tick"] += 1
    return None, sides


def _path(side, k):
    out = []
    while True:
        parent, move, word = side["seen"][k]
        if parent is None:
            return out[::-1]
        out.append((side["seen"][parent][2], move, word))
        k = parent


class _Realizer:
    """Replays word moves as recolourings of a closed walk of length ``m``.

    Invariant: positions ``s .. s+L`` hold the cyclically reduced core and
    the remaining positions form a tower ``z, t, z, t, ..., z`` on the core's
    first vertex ``z``.
    """

    def __init__(self, K, vertices, core_len):
        self.K = K
        self.A = list(vertices)
        self.m = len(self.A)
        self.s = 0
        self.L = core_len
        self.steps = []

    def at(self, p):
        return self.A[p % self.m]

    def recolour(self, p, c):
        p %= self.m
        if self.A[p] == c:
            return
        K = self.K
        if not (K.has_edge(c, self.at(p - 1)) and K.has_edge(c, self.at(p + 1))):
            raise ConsistencyError(f"illegal recolouring at {p}")
        self.steps.append(RecolourStep(p, self.A[p], c))
        self.A[p] = c

    def core(self):
        return tuple(self.at(self.s + j) for j in range(self.L + 1))

    def _retower(self, c):
        for j in range(1, self.m - self.L, 2):
            self.recolour(self.s + self.L + j, c)

    def rotate(self):
        if self.L < self.m:
            self._retower(self.at(self.s + 1))
        self.s += 1

    def slide(self, p):
        while p + 1 < self.s + self.L:
            self.recolour(p, self.at(p + 2))
            p += 1
        self.L -= 2

    def uncycle(self):
        if self.L < self.m:
            self._retower(self.at(self.s + 1))
        self.s += 1
        self.L -= 2

    def normalize(self):
        while self.L >= 2:
            spike = next((p for p in range(self.s + 1, self.s + self.L)
                          if self.at(p - 1) == self.at(p + 1)), None)
            if spike is not None:
                self.slide(spike)
            elif self.at(self.s + 1) == self.at(self.s + self.L - 1):
                self.uncycle()
            else:
                break

    def apply(self, kind, params):
        s = self.s
        if kind == "31":
            self.recolour(s + 1, params[0])
        elif kind == "22":
            self.recolour(s + 1, params[0])
        elif kind == "13":
            a, b = params
            self.recolour(s - 1, a)
            self.recolour(s, b)
            self.s -= 2
            self.L += 2
        elif kind == "04":
            a, b, c = params
            self.recolour(s - 3, a)
            self.recolour(s - 1, c)
            self.recolour(s - 2, b)
            self.s -= 4
            self.L += 4
        self.normalize()


def _realize(K, W, m, path):
    R = _Realizer(K, lengthen(W, m).vertices[:-1], len(W))
    R.normalize()
    for parent, (r, kind, params, _), child in path:
        cur = R.core()
        body, pbody = cur[:-1], parent[:-1]
        Lc = len(body)
        t = next((t for t in range(Lc) if body[t:] + body[:t] == pbody), None)
        if t is None:
            raise ConsistencyError("realized walk drifted from the planned word")
        for _ in range((t + r) % Lc):
            R.rotate()
        R.apply(kind, params)
        if _key(R.core()) != _key(child):
            raise ConsistencyError("realized move disagrees with the word-level move")
    return R


def replay_certificate(K, C1, C2, cert):
    """Independently check a :class:`Confirmed` certificate.

    Both lengthenings are recoloured step by step as homomorphisms from the
    cycle ``C_m``; the results must have equal cyclic cores.
    """
    m = cert.m
    Cm = Graph(m, [(i, (i + 1) % m) for i in range(m)])
    ends = []
    for W, steps in ((C1, cert.steps1), (C2, cert.steps2)):
        f = lengthen(W, m).vertices[:-1]
        if not Hom(Cm, K, f).is_valid():
            raise InvalidHom("lengthening is not a closed walk")
        g = apply_steps(Cm, K, f, steps)
        ends.append(_key(_cyclic_core(g + (g[0],))))
    return ends[0] == ends[1]


def conjugacy_oracle(K, C1, C2, m_max, budget=20000):
    """Semi-decide conjugacy modulo squares by recolouring closed walks.

    Square moves on cyclic words are searched from both walks until they
    meet; the two move sequences are then replayed as single-vertex
    recolourings of the ``m``-lengthenings, with ``m`` the longest word the
    moves need.  Returns :class:`Confirmed` with the certificate or
    :class:`Unresolved` (which proves nothing).
    """
    for C in (C1, C2):
        if not C.is_closed():
            raise NotClosed("the oracle compares closed walks")
    if len(C1) % 2 != len(C2) % 2:
        return Unresolved("parity", "closed walks of different parity are never conjugate")
    Z1, Z2 = _cyclic_core(C1.vertices), _cyclic_core(C2.vertices)
    k, sides = _search(K, Z1, Z2, m_max, budget)
    if k is None:
        return Unresolved("budget", f"no common word within length {m_max}")
    p1, p2 = _path(sides[0], k), _path(sides[1], k)
    need = max([len(C1), len(C2)] + [mv[3] for _, mv, _ in p1 + p2])
    m = need + ((need - len(C1)) % 2)
    if m > m_max:
        return Unresolved("length", f"certificate needs m = {m}")
    R1 = _realize(K, C1, m, p1)
    R2 = _realize(K, C2, m, p2)
    if _key(R1.core()) != _key(R2.core()):
        raise ConsistencyError("the two realizations do not meet")
    cert = Confirmed(m, R1.steps, R2.steps, R1.core())
    if not replay_certificate(K, C1, C2, cert):
        raise ConsistencyError("certificate failed its replay")
    return cert


# ---------------------------------------------------------------------------
# trichotomy

@dataclass
class TrichotomyResult:
    """Outcome of :func:`classify_trichotomy`.

    ``case`` is 1, 2 or 3.  Cases 1 and 2 carry the list of checked edges in
    ``witness``; case 3 carries the lifted homomorphism into the truncated
    unicyclic cover in ``witness`` and the cover in ``cover``.
    """

    case: int
    nf1: object
    nf2: object
    base_arcs: tuple
    witness: object = None
    cover: object = None
    root: object = None
    exponent: int = 0


def _least_arc(C):
    arcs = []
    L = len(C)
    for i in range(L):
        a, b = C[i], C[(i + 1) % L]
        arcs += [(a, b), (b, a)]
    return min(arcs)


def _oriented_cycle(C, arc):
    g0, g1 = arc
    L = len(C)
    i = C.index(g0)
    if C[(i + 1) % L] == g1:
        seq = [C[(i + j) % L] for j in range(L)]
    else:
        seq = [C[(i - j) % L] for j in range(L)]
    return seq + [g0]


def classify_trichotomy(G, C, H, D, K, Dsm, phi):
    """Decide which of the three factorization cases a map falls in.

    ``phi`` is a homomorphism from ``union_subproduct(G, C, H, D)`` to ``K``.
    With ``(g0, g1)`` and ``(h0, h1)`` the least arcs of ``C`` and ``D``:

    * case 1: ``phi(C x h0h1)`` has trivial normal form (then so does
      ``phi(C x hh')`` for every edge ``hh'`` of ``H``, which is checked);
    * case 2: the same for ``phi(g0g1 x D)``;
    * case 3: both are nontrivial; ``phi`` is lifted to the unicyclic cover
      of the primitive root of the first and the lift is validated.
    """
    if Dsm is None:
        Dsm = find_dismantling_sequence(K)
        if Dsm is None:
            raise NotDismantlable("no square-dismantling sequence found for the target")
    if not (Dsm.source == K):
        raise WrongHost("dismantling sequence is for a different graph")
    C = check_cycle(G, C)
    D = check_cycle(H, D)
    U = union_subproduct(G, C, H, D)
    if not (phi.source == U) or not (phi.target == K):
        raise InvalidHom("phi must map the union subproduct to K")
    phi.check()
    ga, ha = _least_arc(C), _least_arc(D)
    Cw = Walk(G, _oriented_cycle(C, ga))
    Dw = Walk(H, _oriented_cycle(D, ha))
    nf1 = normal_form(Dsm, image_walk(phi, tensor_walk(Cw, ha, H, host=U)))
    nf2 = normal_form(Dsm, image_walk(phi, tensor_walk_dual(ga, G, Dw, host=U)))
    arcs = (ga, ha)
    if nf1.is_trivial():
        checked = []
        for h, h2 in H.edge_list():
            w = normal_form(Dsm, image_walk(phi, tensor_walk(Cw, (h, h2), H, host=U)))
            if not w.is_trivial():
                raise ConsistencyError(f"edge {h}-{h2} breaks the case-1 invariant")
            checked.append((h, h2))
        return TrichotomyResult(1, nf1, nf2, arcs, checked)
    if nf2.is_trivial():
        checked = []
        for g, g2 in G.edge_list():
            w = normal_form(Dsm, image_walk(phi, tensor_walk_dual((g, g2), G, Dw, host=U)))
            if not w.is_trivial():
                raise ConsistencyError(f"edge {g}-{g2} breaks the case-2 invariant")
            checked.append((g, g2))
        return TrichotomyResult(2, nf1, nf2, arcs, checked)
    root, e = primitive_root(nf1)
    lift, cover = _lift_to_unicyclic(U, phi, Dsm, Walk(K, root.vertices, check=False))
    return TrichotomyResult(3, nf1, nf2, arcs, lift, cover, root, e)


def _lift_to_unicyclic(U, phi, Dsm, R):
    from .covers import UnicyclicSpace, unicyclic_cover
    S = UnicyclicSpace(Dsm, R)
    f = phi.mapping
    lifted = [None] * U.n
    for comp in U.components():
        p0 = comp[0]
        if f[p0] == R.start:
            lifted[p0] = S.root_vertex
        else:
            lifted[p0] = S.canon(tuple(Dsm.kernel.shortest_path(S.s, f[p0])))
        q = deque([p0])
        while q:
            p = q.popleft()
            for x in sorted(U.neighbours(p)):
                if lifted[x] is None:
                    lifted[x] = S.step(lifted[p], f[x])
                    q.append(x)
    for p, x in U.edge_list():
        if S.step(lifted[p], f[x]) != lifted[x]:
            raise ConsistencyError(f"lift is inconsistent on edge {p}-{x}")
    window = max(S.depth(w) for w in lifted)
    cover = unicyclic_cover(Dsm, R, window)
    hom = Hom(U, cover.graph, tuple(cover.index[w] for w in lifted)).check()
    if any(cover.tau[hom.mapping[p]] != f[p] for p in range(U.n)):
        raise ConsistencyError("lift does not project back to phi")
    return hom, cover


def constant_slice_hom(G, H, phi, h0, Dsm, vertex_budget=200000):
    """A homomorphism ``H -> K`` from a map on ``G x H`` with a constant slice.

    ``phi(-, h0)`` must be constant.  ``G`` is cut down to a shortest odd
    cycle ``C``; ``H`` then maps into the component of constants of
    ``K^C`` and :func:`homlab.median.cyclic_hom` finishes the job.
    Returns :class:`Unresolved` when the median construction hits an
    obstruction.
    """
    from .median import ObstructionWitness, cyclic_hom
    K = phi.target
    if not G.is_connected():
        raise ValueError("G must be connected")
    if G.is_bipartite():
        raise Bipartite("G has no odd cycle")
    m = H.n
    f = phi.mapping
    slice_ = {f[g * m + h0] for g in range(G.n)}
    if len(slice_) != 1:
        raise NotConstantSlice(f"phi(-, {h0}) takes {len(slice_)} values")
    C = G.shortest_odd_cycle()
    n = len(C)
    star = [tuple(f[C[i] * m + h] for i in range(n)) for h in range(H.n)]
    for h, h2 in H.edge_list():
        if not exp_adjacent(K, star[h], star[h2]):
            raise InvalidHom(f"phi does not induce an exponential edge at {h}-{h2}")
    comp = exp_component(K, n, star[h0], vertex_budget, strict=True)
    out = cyclic_hom(K, Dsm, n, comp)
    if isinstance(out, ObstructionWitness):
        return Unresolved("obstruction", out)
    return Hom(H, K, tuple(out.mapping[comp.index[star[h]]] for h in range(H.n))).check()
