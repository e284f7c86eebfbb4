"""Walks, free reduction and normal forms modulo squares.

A walk is stored as its vertex sequence; the arcs are consecutive pairs.
Two walks in a square-dismantlable graph are equivalent modulo
backtracking and square boundaries exactly when their normal forms agree.
The normal form is obtained by replacing every removed edge by its detour,
step by step in dismantling order, and freely reducing the result in the
square-free kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyWord, NotAnArc, NotClosed, WrongHost
from .graph import DismantlingSequence

__all__ = [
    "Walk",
    "NormalForm",
    "reduce",
    "reduce_vertices",
    "concat_reduce",
    "rho_rewrite",
    "normal_form",
    "equivalent",
    "cyclic_reduction",
    "conjugacy",
    "primitive_root",
    "arc_closed_walk",
    "tensor_walk",
    "tensor_walk_dual",
    "parse_walk",
    "project_walk",
    "image_walk",
]


class Walk:
    """A walk in ``host`` given by its vertex sequence.

    The empty walk at ``r`` is ``Walk(host, (r,))``.

    >>> from homlab.graph import cycle_graph
    >>> W = Walk(cycle_graph(5), (0, 1, 2, 1))
    >>> len(W), W.start, W.end, W.arcs
    (3, 0, 1, [(0, 1), (1, 2), (2, 1)])
    """

    __slots__ = ("host", "vertices")

    def __init__(self, host, vertices, check=True):
        vertices = tuple(int(v) for v in vertices)
        if not vertices:
            raise ValueError("a walk needs at least its start vertex")
        if check:
            for i in range(len(vertices) - 1):
                if not host.has_edge(vertices[i], vertices[i + 1]):
                    raise ValueError(
                        f"({vertices[i]},{vertices[i + 1]}) at position {i} is not an arc of the host")
            if not 0 <= vertices[0] < host.n:
                raise ValueError("start vertex outside the host")
        self.host = host
        self.vertices = vertices

    @classmethod
    def from_arcs(cls, host, start, arcs):
        vs = [start]
        for a, b in arcs:
            if a != vs[-1]:
                raise ValueError("arcs do not chain")
            vs.append(b)
        return cls(host, vs)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def arcs(self):
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def __len__(self):
        return len(self.vertices) - 1

    def is_closed(self):
        return self.vertices[0] == self.vertices[-1]

    def inverse(self):
        return Walk(self.host, self.vertices[::-1], check=False)

    def __add__(self, other):
        if self.end != other.start:
            raise ValueError(f"walks do not chain: {self.end} vs {other.start}")
        return Walk(self.host, self.vertices + other.vertices[1:], check=False)

    def __pow__(self, k):
        if not self.is_closed():
            raise NotClosed("only closed walks have powers")
        out = Walk(self.host, (self.start,), check=False)
        for _ in range(k):
            out = out + self
        return out

    def rotate(self, k):
        """The closed walk read from position ``k`` (mod its length)."""
        if not self.is_closed():
            raise NotClosed("only closed walks can be rotated")
        L = len(self)
        if L == 0:
            return self
        k %= L
        body = self.vertices[:-1]
        body = body[k:] + body[:k]
        return Walk(self.host, body + (body[0],), check=False)

    def is_reduced(self):
        vs = self.vertices
        return all(vs[i] != vs[i + 2] for i in range(len(vs) - 2))

    def to_text(self):
        return f"{self.start};" + "".join(f" {v}" for v in self.vertices[1:])

    def __eq__(self, other):
        return isinstance(other, Walk) and self.vertices == other.vertices and \
            (self.host is other.host or self.host == other.host)

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Walk({self.to_text()})"


def parse_walk(host, text):
    """Parse ``"start; v1 v2 ..."`` (the vertices after the start)."""
    head, _, tail = text.partition(";")
    vs = [host.vertex(head.strip())] + [host.vertex(t) for t in tail.split()]
    return Walk(host, vs)


def reduce_vertices(vs):
    """Free reduction of a vertex sequence (deletes every ``x, y, x`` turn)."""
    out = [vs[0]]
    for v in vs[1:]:
        if len(out) >= 2 and out[-2] == v:
            out.pop()
        else:
            out.append(v)
    return tuple(out)


def concat_reduce(a, b):
    """Reduced product of two reduced vertex sequences with ``a[-1] == b[0]``."""
    i = 0
    la, lb = len(a), len(b)
    while i < la - 1 and i < lb - 1 and a[la - 2 - i] == b[i + 1]:
        i += 1
    return a[:la - i] + b[i + 1:]


def reduce(W):
    """Delete backtracks ``(u,v)(v,u)`` until none remain.

    >>> from homlab.graph import path_graph
    >>> reduce(Walk(path_graph(3), (0, 1, 2, 1, 0))).vertices
    (0,)
    """
    return Walk(W.host, reduce_vertices(W.vertices), check=False)


def _substitution(D, upto=None):
    steps = D.steps if upto is None else D.steps[:upto]
    return [(s.edge, s.detour) for s in steps]


def _rewrite(vs, subs):
    for (a, d), detour in subs:
        rev = detour[::-1]
        out = [vs[0]]
        for i in range(len(vs) - 1):
            x, y = vs[i], vs[i + 1]
            if x == a and y == d:
                out.extend(detour[1:])
            elif x == d and y == a:
                out.extend(rev[1:])
            else:
                out.append(y)
        vs = out
    return tuple(vs)


def _check_host(D, W):
    if not (W.host is D.source or W.host == D.source):
        raise WrongHost("walk does not live in the dismantled graph")


def rho_rewrite(D, W, upto=None):
    """Replace removed edges by their detours, in dismantling order.

    Every occurrence of a removed edge (either direction) is replaced at
    its step; a detour introduced early may itself be rewritten by later
    steps.  With ``upto=i`` only the first ``i`` steps are applied.
    The result is not reduced.
    """
    _check_host(D, W)
    host = D.kernel if upto is None or upto >= len(D.steps) else D.intermediate(upto)
    return Walk(host, _rewrite(W.vertices, _substitution(D, upto)), check=False)


@dataclass(frozen=True)
class NormalForm:
    """Reduced kernel walk representing an equivalence class of walks."""

    vertices: tuple
    context: DismantlingSequence = field(compare=False, repr=False, hash=False)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def word(self):
        return Walk(self.context.kernel, self.vertices, check=False)

    def __len__(self):
        return len(self.vertices) - 1

    def is_trivial(self):
        return len(self.vertices) == 1

    def inverse(self):
        return NormalForm(self.vertices[::-1], self.context)

    def __mul__(self, other):
        if self.end != other.start:
            raise ValueError("normal forms do not chain")
        return NormalForm(concat_reduce(self.vertices, other.vertices), self.context)

    def as_walk(self):
        """The normal form as a walk of the source graph."""
        return Walk(self.context.source, self.vertices, check=False)


def normal_form(D, W):
    """Normal form of ``W``: the reduced rewrite into the kernel.

    >>> from homlab.graph import cycle_graph, find_dismantling_sequence
    >>> C5 = cycle_graph(5)
    >>> D = find_dismantling_sequence(C5)
    >>> len(normal_form(D, Walk(C5, (0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0))))
    10
    """
    _check_host(D, W)
    return NormalForm(reduce_vertices(_rewrite(W.vertices, _substitution(D))), D)


def equivalent(D, W1, W2):
    return normal_form(D, W1) == normal_form(D, W2)


def cyclic_reduction(vs):
    """Split a reduced closed vertex sequence as ``P . Z . P^-1``.

    Returns ``(P, Z)`` with ``Z`` cyclically reduced (its first arc is not
    the inverse of its last arc).
    """
    if vs[0] != vs[-1]:
        raise NotClosed("cyclic reduction needs a closed walk")
    i, j = 0, len(vs) - 1
    # strip matching outer arcs: vs[i+1] == vs[j-1] means arc i is inverse of the last arc
    while j - i >= 2 and vs[i + 1] == vs[j - 1]:
        i += 1
        j -= 1
    return tuple(vs[:i + 1]), tuple(vs[i:j + 1])


def _rotations_match(Z1, Z2):
    """Offsets ``k`` with ``Z1`` equal to ``Z2`` read from position ``k``."""
    b1, b2 = Z1[:-1], Z2[:-1]
    L = len(b1)
    if L != len(b2):
        return []
    doubled = b2 + b2
    return [k for k in range(L) if doubled[k:k + L] == b1]


def conjugacy(D, C1, C2):
    """A walk ``W`` with ``C1`` equivalent to ``W C2 W^-1``, or None.

    Works in the free group of the kernel: both normal forms are
    cyclically reduced and compared up to rotation.  The witness is a
    reduced kernel walk, returned as a walk of the source graph.
    """
    for C in (C1, C2):
        _check_host(D, C)
        if not C.is_closed():
            raise NotClosed("conjugacy is defined for closed walks")
    n1 = normal_form(D, C1).vertices
    n2 = normal_form(D, C2).vertices
    P1, Z1 = cyclic_reduction(n1)
    P2, Z2 = cyclic_reduction(n2)
    K = D.kernel
    if len(Z1) == 1 and len(Z2) == 1:
        path = K.shortest_path(C1.start, C2.start)
        if path is None:
            return None
        return Walk(D.source, path, check=False)
    offsets = _rotations_match(Z1, Z2)
    if not offsets:
        return None
    k = offsets[0]
    # Z2 = Q.R with |Q| = k and Z1 = R.Q, so Z1 = R Z2 R^-1 = Q^-1 Z2 Q
    Q = Z2[:k + 1]
    R = Z2[k:]
    mid = R if len(R) <= len(Q) else Q[::-1]
    W = concat_reduce(concat_reduce(P1, mid), P2[::-1])
    return Walk(D.source, W, check=False)


def primitive_root(nf):
    """Primitive root and exponent of a nontrivial closed normal form.

    For a cyclically reduced word the root is its shortest period.  A word
    ``P Z P^-1`` that is not cyclically reduced gets the root
    ``P root(Z) P^-1``.

    >>> from homlab.graph import cycle_graph, find_dismantling_sequence
    >>> C5 = cycle_graph(5)
    >>> D = find_dismantling_sequence(C5)
    >>> root, e = primitive_root(normal_form(D, Walk(C5, (0, 1, 2, 3, 4) * 3 + (0,))))
    >>> root.vertices, e
    ((0, 1, 2, 3, 4, 0), 3)
    """
    vs = nf.vertices
    if len(vs) == 1:
        raise EmptyWord("the trivial word has no primitive root")
    if vs[0] != vs[-1]:
        raise NotClosed("primitive roots exist for closed words only")
    P, Z = cyclic_reduction(vs)
    L = len(Z) - 1
    body = Z[:-1]
    for p in range(1, L + 1):
        if L % p == 0 and all(body[i] == body[i % p] for i in range(L)):
            root = concat_reduce(concat_reduce(P, Z[:p + 1]), P[::-1])
            return NormalForm(root, nf.context), L // p
    raise AssertionError("unreachable")


def _is_exp_arc(K, n, h, h2):
    return all(K.has_edge(h[i], h2[(i + 1) % n]) and K.has_edge(h[(i + 1) % n], h2[i])
               for i in range(n))


def arc_closed_walk(K, n, h, h2):
    """The closed walk ``h(0), h2(1), h(2), ..., h2(0), h(1), ..., h(0)``.

    Position ``j`` (``0 <= j <= 2n``) uses ``h`` for even ``j`` and ``h2``
    for odd ``j``, evaluated at cycle position ``j mod n``.
    """
    h, h2 = tuple(h), tuple(h2)
    if n % 2 == 0 or len(h) != n or len(h2) != n:
        raise NotAnArc("need two tables on an odd cycle")
    if not _is_exp_arc(K, n, h, h2):
        raise NotAnArc(f"{h!r} and {h2!r} are not adjacent in the exponential graph")
    vs = [(h if j % 2 == 0 else h2)[j % n] for j in range(2 * n + 1)]
    return Walk(K, vs, check=False)


def tensor_walk(C, arc, H, host=None):
    """The product walk ``C (x) h0h1`` in ``G x H`` (or in ``host``).

    Position ``j`` is ``(C_j, h_{j mod 2})`` for ``j = 0..2|C|``; its
    first projection is ``C.C`` and its second alternates ``h0, h1``.
    """
    if not C.is_closed():
        raise NotClosed("the cycle factor must be a closed walk")
    h0, h1 = arc
    if not H.has_edge(h0, h1):
        raise NotAnArc(f"{arc!r} is not an arc of the second factor")
    if host is None:
        from .graph import tensor_product
        host = tensor_product(C.host, H)
    body = C.vertices[:-1]
    L = len(body)
    hs = (h0, h1)
    vs = [body[j % L] * H.n + hs[j % 2] for j in range(2 * L)] + [body[0] * H.n + h0]
    return Walk(host, vs)


def tensor_walk_dual(arc, G, D, host=None):
    """The product walk ``g0g1 (x) D`` in ``G x H`` (or in ``host``)."""
    if not D.is_closed():
        raise NotClosed("the cycle factor must be a closed walk")
    g0, g1 = arc
    if not G.has_edge(g0, g1):
        raise NotAnArc(f"{arc!r} is not an arc of the first factor")
    H = D.host
    if host is None:
        from .graph import tensor_product
        host = tensor_product(G, H)
    body = D.vertices[:-1]
    L = len(body)
    gs = (g0, g1)
    vs = [gs[j % 2] * H.n + body[j % L] for j in range(2 * L)] + [g0 * H.n + body[0]]
    return Walk(host, vs)


def project_walk(W, H_n, coordinate, target):
    """Coordinate projection of a product walk (0 = first factor)."""
    if coordinate == 0:
        vs = [v // H_n for v in W.vertices]
    else:
        vs = [v % H_n for v in W.vertices]
    return Walk(target, vs)


def image_walk(phi, W):
    """The image of a walk under a homomorphism."""
    return Walk(phi.target, [phi.mapping[v] for v in W.vertices])
