"""Universal and unicyclic covers of square-dismantlable graphs.

A vertex of the universal cover rooted at ``r`` is a reduced walk of the
square-free kernel starting at ``r`` (the normal form of a class of walks).
Moving along a base arc ``(u, v)`` from a word ending at ``u`` appends the
normal form of that single arc and freely reduces.  For kernel arcs this
is the usual tree step; for removed edges it jumps across the detour, which
adds the extra cover edges that close up squares.

Covers are infinite, so two layers exist:

* lazy *spaces* (:class:`UniversalSpace`, :class:`UnicyclicSpace`) that
  compute steps on words without bounds, and
* materialized, truncated :class:`CoverGraph` objects built from them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace

from .errors import NotAnArc, OutOfRadius, RootMismatch, TrivialWinding
from .graph import Graph, to_dot
from .walks import Walk, concat_reduce, cyclic_reduction, normal_form, primitive_root

__all__ = [
    "UniversalSpace",
    "UnicyclicSpace",
    "CoverGraph",
    "CoveringReport",
    "universal_cover",
    "unicyclic_cover",
    "lift_word",
    "lift_walk",
    "deck_transform",
    "verify_covering_map",
    "tree_distance",
]


def tree_distance(a, b):
    """Distance between two words in the kernel tree (same root)."""
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return len(a) + len(b) - 2 * i


class UniversalSpace:
    """The universal cover rooted at ``root``, evaluated lazily on words.

    >>> from homlab.graph import cycle_graph, find_dismantling_sequence
    >>> U = UniversalSpace(find_dismantling_sequence(cycle_graph(5)), 0)
    >>> U.step(U.root_vertex, 1), U.step((0, 1), 0)
    ((0, 1), (0,))
    """

    mode = "universal"

    def __init__(self, D, root):
        base = D.source
        if not base.is_loopless():
            raise ValueError("covers are built for loopless graphs only")
        self.context = D
        self.base = base
        self.kernel = D.kernel
        self.root = root
        self.root_vertex = (root,)
        self._arc = {}
        for u, v in base.arcs():
            self._arc[(u, v)] = normal_form(D, Walk(base, (u, v), check=False)).vertices
        # longest kernel stretch a single base arc can cover
        self.reach = max((len(p) - 1 for p in self._arc.values()), default=1)

    def arc_word(self, u, v):
        try:
            return self._arc[(u, v)]
        except KeyError:
            raise NotAnArc(f"({u},{v}) is not an arc of the base graph") from None

    def tau(self, x):
        return x[-1]

    def step(self, x, v):
        return concat_reduce(x, self.arc_word(x[-1], v))

    def neighbours(self, x):
        """``[(v, word)]`` for every base neighbour ``v`` of ``tau(x)``."""
        return [(v, self.step(x, v)) for v in sorted(self.base.neighbours(x[-1]))]

    def tree_neighbours(self, x):
        """Neighbours of ``x`` along kernel edges (parent first, then children)."""
        out = []
        if len(x) >= 2:
            out.append(x[:-1])
        back = x[-2] if len(x) >= 2 else None
        for y in sorted(self.kernel.neighbours(x[-1])):
            if y != back:
                out.append(x + (y,))
        return out

    def colour(self, x):
        return (len(x) - 1) % 2

    def canon(self, word):
        return tuple(word)

    def key(self, x):
        return (len(x), x)


class UnicyclicSpace:
    """The quotient of the universal cover by the deck transformation of ``R``.

    Let the normal form of ``R`` be ``P Z P^-1`` with ``Z`` cyclically
    reduced, based at ``s``.  Words are taken from ``s``; the words
    ``Z^j`` form a bi-infinite axis on which ``Z`` acts by a shift of
    ``k = |Z|``.  Every reduced word splits uniquely as an axis segment
    followed by a tail ``T`` leaving the axis, and its orbit is represented
    by ``Z[:i+1] + T`` where ``i`` is the axis position modulo ``k``.
    The depth of a vertex is ``|T|``; depth-0 vertices form the central cycle.
    """

    mode = "unicyclic"

    def __init__(self, D, R):
        nf = normal_form(D, R)
        if nf.is_trivial():
            raise TrivialWinding("the closed walk has trivial normal form; use the universal cover")
        P, Z = cyclic_reduction(nf.vertices)
        self.context = D
        self.base = D.source
        self.kernel = D.kernel
        self.R = R
        self.root = R.start
        self.P = P
        self.Z = Z
        self.k = len(Z) - 1
        self.s = Z[0]
        self._body = Z[:-1]
        self.universal = UniversalSpace(D, self.s)
        self.reach = self.universal.reach
        self.root_vertex = self.canon(P[::-1])

    def split(self, Y):
        """``(i, T)``: axis position mod ``k`` and the off-axis tail."""
        body, k = self._body, self.k
        a = 0
        while a + 1 < len(Y) and Y[a + 1] == body[(a + 1) % k]:
            a += 1
        if a > 0:
            return a % k, tuple(Y[a:])
        b = 0
        while b + 1 < len(Y) and Y[b + 1] == body[(-(b + 1)) % k]:
            b += 1
        return (-b) % k, tuple(Y[b:])

    def canon(self, Y):
        i, T = self.split(Y)
        return self.Z[:i + 1] + T[1:]

    def depth(self, x):
        return len(self.split(x)[1]) - 1

    def anchor(self, x):
        return self.split(x)[0]

    def tau(self, x):
        return x[-1]

    def arc_word(self, u, v):
        return self.universal.arc_word(u, v)

    def step(self, x, v):
        return self.canon(concat_reduce(x, self.universal.arc_word(x[-1], v)))

    def neighbours(self, x):
        return [(v, self.step(x, v)) for v in sorted(self.base.neighbours(x[-1]))]

    def kernel_steps(self, x):
        return [self.step(x, v) for v in sorted(self.kernel.neighbours(x[-1]))]

    def key(self, x):
        i, T = self.split(x)
        return (len(T), i, T)


@dataclass(frozen=True, eq=False)
class CoverGraph:
    """A finite truncation of a cover.

    Attributes
    ----------
    space : UniversalSpace or UnicyclicSpace
        The lazy cover this truncation was cut from.
    vertices : tuple of tuple
        Vertex words; vertex ``i`` of ``graph`` is ``vertices[i]``.
    graph : Graph
        Cover edges among the kept vertices.
    tau : tuple of int
        Endpoint map (base vertex of each cover vertex).
    interior : tuple of bool
        True when every base neighbour of ``tau[i]`` has its lift present.
    kernel_edges : frozenset
        Index pairs joined by kernel (tree) edges.
    bound : int
        Radius (universal) or window (unicyclic).
    """

    space: object
    vertices: tuple
    index: dict = field(repr=False)
    graph: Graph = field(repr=False)
    tau: tuple = field(repr=False)
    interior: tuple = field(repr=False)
    kernel_edges: frozenset = field(repr=False)
    bound: int = 0

    @property
    def mode(self):
        return self.space.mode

    @property
    def base(self):
        return self.space.base

    @property
    def context(self):
        return self.space.context

    @property
    def root(self):
        return self.space.root

    @property
    def root_index(self):
        return self.index[self.space.root_vertex]

    @property
    def radius(self):
        return self.bound

    def vertex_id(self, word):
        return self.index.get(tuple(word))

    def is_closed(self):
        """True when no vertex is missing a neighbour (the cover is finite)."""
        return all(self.interior)

    def fibre(self, b):
        return [i for i, t in enumerate(self.tau) if t == b]

    def kernel_graph(self):
        return Graph(len(self.vertices), self.kernel_edges, self.graph.labels)

    def with_graph(self, graph):
        """A copy with a different edge set (for negative controls)."""
        return replace(self, graph=graph)

    def to_text(self):
        """Vertex table ``id : tau : word : interior`` followed by the edges."""
        B = self.base
        lines = [f"# {self.mode} cover, {len(self.vertices)} vertices, bound {self.bound}"]
        for i, w in enumerate(self.vertices):
            word = " ".join(B.label(v) for v in w)
            lines.append(f"{i} : {B.label(self.tau[i])} : {word} : {'interior' if self.interior[i] else 'boundary'}")
        lines += [f"{u} {v}" for u, v in self.graph.edge_list()]
        return "\n".join(lines) + "\n"

    def to_dot(self, name="cover"):
        dashed = [e for e in self.graph.edges if e not in self.kernel_edges]
        return to_dot(self.graph, name, colour_of=list(self.tau), dashed=dashed)


def _materialize(space, words, bound):
    words = sorted(set(words), key=space.key)
    index = {w: i for i, w in enumerate(words)}
    edges, kedges = set(), set()
    interior = []
    for i, w in enumerate(words):
        ok = True
        for v, w2 in space.neighbours(w):
            j = index.get(w2)
            if j is None:
                ok = False
                continue
            e = (min(i, j), max(i, j))
            edges.add(e)
            if _is_tree_step(w, w2):
                kedges.add(e)
        interior.append(ok)
    B = space.base
    labels = [B.label(w[-1]) + "~" + ".".join(B.label(v) for v in w) for w in words]
    G = Graph(len(words), edges, labels)
    return CoverGraph(space, tuple(words), index, G, tuple(w[-1] for w in words),
                      tuple(interior), frozenset(kedges), bound)


def _is_tree_step(a, b):
    return (len(b) == len(a) + 1 and b[:-1] == a) or (len(a) == len(b) + 1 and a[:-1] == b)


def universal_cover(D, root, radius):
    """Truncation of the universal cover to words of length ``<= radius``.

    >>> from homlab.graph import cycle_graph, find_dismantling_sequence
    >>> U = universal_cover(find_dismantling_sequence(cycle_graph(5)), 0, 8)
    >>> U.graph.n, U.graph.num_edges
    (17, 16)
    """
    if radius < 1:
        raise ValueError("radius must be at least 1")
    space = UniversalSpace(D, root)
    level = [space.root_vertex]
    words = list(level)
    for _ in range(radius):
        nxt = []
        for w in level:
            for x in space.tree_neighbours(w):
                if len(x) > len(w):
                    nxt.append(x)
        words += nxt
        level = nxt
    return _materialize(space, words, radius)


def unicyclic_cover(D, R, window):
    """Truncation of the quotient by ``R`` to vertices of depth ``<= window``."""
    if window < 0:
        raise ValueError("window must be nonnegative")
    space = UnicyclicSpace(D, R)
    start = [space.Z[:i + 1] for i in range(space.k)]
    seen = set(start)
    q = deque(start)
    while q:
        w = q.popleft()
        for x in space.kernel_steps(w):
            if x not in seen and space.depth(x) <= window:
                seen.add(x)
                q.append(x)
    C = _materialize(space, seen, window)
    # kernel edges of the quotient: tree edges plus the central cycle
    kedges = set()
    for i, w in enumerate(C.vertices):
        for x in space.kernel_steps(w):
            j = C.index.get(x)
            if j is not None:
                kedges.add((min(i, j), max(i, j)))
    return replace(C, kernel_edges=frozenset(kedges))


def _space_of(C):
    return C.space if isinstance(C, CoverGraph) else C


def lift_word(space, start, W):
    """Lift ``W`` from the cover vertex ``start`` without any truncation.

    Returns the list of cover vertices visited (``len(W) + 1`` of them).
    """
    space = _space_of(space)
    start = tuple(start)
    if space.tau(start) != W.start:
        raise RootMismatch(f"start lies over {space.tau(start)}, walk starts at {W.start}")
    out = [start]
    for v in W.vertices[1:]:
        out.append(space.step(out[-1], v))
    return out


def lift_walk(C, start, W):
    """Lift of ``W`` in the truncated cover ``C`` from ``start``.

    ``start`` is a vertex id of ``C`` or a word.  Raises OutOfRadius if the
    lift leaves the truncation and RootMismatch if ``tau(start)`` is not the
    first vertex of ``W``.
    """
    if isinstance(start, int):
        start = C.vertices[start]
    words = lift_word(C.space, start, W)
    ids = []
    for j, w in enumerate(words):
        i = C.index.get(w)
        if i is None:
            raise OutOfRadius(f"lift leaves the truncation at position {j}")
        ids.append(i)
    return Walk(C.graph, ids, check=False)


def deck_transform(C, A):
    """The deck transformation of the closed walk ``A`` (based at the root).

    Returns a dict ``{i: j}`` on the vertex ids whose image is present.
    On a unicyclic cover only walks in the normalizer of the quotient
    (powers of the primitive root of ``Z``) are well defined; others raise
    ValueError.
    """
    if A.start != C.root or not A.is_closed():
        raise RootMismatch("deck transformations take closed walks at the cover's root")
    space = C.space
    a = normal_form(C.context, A).vertices
    if space.mode == "universal":
        image = {i: C.index.get(concat_reduce(a, w)) for i, w in enumerate(C.vertices)}
        return {i: j for i, j in image.items() if j is not None}
    P = space.P
    a_s = concat_reduce(concat_reduce(P[::-1], a), P)
    if not _in_cyclic_subgroup(a_s, space.Z, C.context):
        raise ValueError("walk does not normalize the quotient subgroup")
    image = {i: C.index.get(space.canon(concat_reduce(a_s, w))) for i, w in enumerate(C.vertices)}
    return {i: j for i, j in image.items() if j is not None}


def _in_cyclic_subgroup(a, Z, D):
    if len(a) == 1:
        return True
    from .walks import NormalForm
    root, _ = primitive_root(NormalForm(Z, D))
    r = root.vertices
    p = len(r) - 1
    L = len(a) - 1
    if L % p:
        return False
    j = L // p
    fwd = (r[0],) + r[1:] * j
    back = r[::-1]
    bwd = (back[0],) + back[1:] * j
    return a in (fwd, bwd)


@dataclass
class CoveringReport:
    """Outcome of :func:`verify_covering_map`.

    ``violations`` holds ``(kind, vertex id, detail)`` triples; the first one
    is the witness printed on failure.
    """

    ok: bool
    violations: list
    interior_checked: int
    surjective_vertices: bool
    surjective_edges: bool

    def witness(self):
        return self.violations[0] if self.violations else None

    def summary(self):
        if self.ok:
            return f"covering map verified on {self.interior_checked} interior vertices"
        kind, v, detail = self.violations[0]
        return f"{len(self.violations)} violations; first: {kind} at vertex {v} ({detail})"


def verify_covering_map(C):
    """Certify that ``tau`` is a covering map on the truncation ``C``.

    Checks that every cover edge projects to a base edge, that ``tau`` is a
    bijection from the neighbourhood of each interior vertex onto the base
    neighbourhood, and that ``tau`` is onto the base vertices and edges.
    """
    B = C.base
    G = C.graph
    tau = C.tau
    bad = []
    for u, v in G.edge_list():
        if not B.has_edge(tau[u], tau[v]):
            bad.append(("non-edge", u, f"edge {u}-{v} projects to {tau[u]}-{tau[v]}"))
    checked = 0
    for i in range(G.n):
        if not C.interior[i]:
            continue
        checked += 1
        got = sorted(tau[j] for j in G.neighbours(i))
        want = sorted(B.neighbours(tau[i]))
        if got != want:
            bad.append(("not locally bijective", i, f"neighbour images {got} vs base {want}"))
    surj_v = set(tau) == set(range(B.n))
    surj_e = {(min(tau[u], tau[v]), max(tau[u], tau[v])) for u, v in G.edges} >= set(B.edges)
    if not surj_v:
        bad.append(("not onto vertices", -1, f"missing {sorted(set(range(B.n)) - set(tau))}"))
    if not surj_e:
        bad.append(("not onto edges", -1, "some base edge has no lift"))
    return CoveringReport(not bad, bad, checked, surj_v, surj_e)
