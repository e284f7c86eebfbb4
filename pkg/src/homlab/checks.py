"""The acceptance criteria as runnable checks.

Each criterion is a function ``fx -> (ok, detail)`` where ``fx`` is a
:class:`FixtureSource`.  The test suite and ``homlab verify-paper`` both run
them through :func:`run_checks`.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from . import fixtures
from .adjoints import girth13_psi, p3, p3_inverse, unit
from .covers import (
    UniversalSpace,
    unicyclic_cover,
    universal_cover,
    verify_covering_map,
)
from .errors import HomlabError
from .exponential import (
    classify_trichotomy,
    constant_table,
    exp_adjacent,
    exp_component,
    conjugacy_oracle,
)
from .graph import (
    Graph,
    all_squares,
    cycle_graph,
    path_graph,
    square_counts,
    union_subproduct,
    validate_dismantling_sequence,
)
from .homsearch import Hom, find_hom, find_isomorphism
from .median import cyclic_hom, median_of, retract_unicyclic
from .properties import PROPERTIES, diamond_move, random_closed_walk, run_property
from .walks import Walk, arc_closed_walk, conjugacy, normal_form, rho_rewrite

__all__ = ["FixtureSource", "Criterion", "CRITERIA", "select", "run_checks", "CheckResult"]


class FixtureSource:
    """Fixture lookup with optional per-name file overrides."""

    def __init__(self, overrides=None):
        self.overrides = dict(overrides or {})

    def graph(self, name):
        if name in self.overrides:
            return fixtures.load_file(name, self.overrides[name])
        return fixtures.load(name)

    def dismantling(self, name):
        if name in self.overrides:
            return fixtures.dismantling_of(name, self.graph(name))
        return fixtures.dismantling(name)


def _v(G, *names):
    return [G.vertex(s) for s in names]


def _labels(G, vs):
    return ",".join(G.label(v) for v in vs)


# ---------------------------------------------------------------------------

def moser_structure(fx):
    G = fx.graph("moser")
    worst = max(square_counts(G).values())
    validate_dismantling_sequence(G, [tuple(_v(G, "a", "2")), tuple(_v(G, "b", "3"))])
    return worst <= 1, f"max squares per edge {worst}; sequence (a2, b3) validates"


def rho_exact(fx):
    G, D = fx.graph("moser"), fx.dismantling("moser")
    W = Walk(G, _v(G, "0", "a", "2", "3", "b", "4", "0"))
    want = tuple(_v(G, "0", "a", "0", "1", "2", "3", "b", "4", "0"))
    got = rho_rewrite(D, W).vertices
    return got == want, f"rewrite {_labels(G, got)}; expected {_labels(G, want)}"


def c5_covers(fx):
    D = fx.dismantling("c5")
    C5 = fx.graph("c5")
    U = universal_cover(D, 0, 8)
    is_path = find_isomorphism(U.graph, path_graph(17)) is not None
    R = Walk(C5, tuple(range(5)) * 3 + (0,))
    Q = unicyclic_cover(D, R, 1)
    is_c15 = find_isomorphism(Q.graph, cycle_graph(15)) is not None
    r1, r2 = verify_covering_map(U), verify_covering_map(Q)
    ok = is_path and is_c15 and r1.ok and r2.ok
    return ok, (f"radius 8: {U.graph.n} vertices, path {is_path}, {r1.summary()}; "
                f"triple winding: {Q.graph.n} vertices, C15 {is_c15}, {r2.summary()}")


def bowtie_cover(fx):
    G, D = fx.graph("bowtie"), fx.dismantling("bowtie")
    x = G.vertex("x")
    U = universal_cover(D, x, 6)
    prof = {}
    for i in range(U.graph.n):
        if U.interior[i]:
            key = "x" if U.tau[i] == x else "other"
            prof.setdefault(key, set()).add(U.graph.degree(i))
    ok = prof == {"x": {4}, "other": {2}}
    return ok, f"interior degrees over x {sorted(prof.get('x', ()))}, elsewhere {sorted(prof.get('other', ()))}"


def k_a_obstruction(fx):
    K, D = fx.graph("k_a"), fx.dismantling("k_a")
    n = 9
    zero = K.vertex("0")
    x = constant_table(zero, n)
    y = tuple(_v(K, "6", "2", "6", "4", "6", "4", "2", "4", "2"))
    notes = []
    arc = exp_adjacent(K, x, y)
    trivial = arc and normal_form(D, arc_closed_walk(K, n, x, y)).is_trivial()
    notes.append(f"arc {arc}, closed walk trivial {trivial}")
    S = UniversalSpace(D, zero)
    xt = [S.root_vertex] * n
    yt = [S.step(a, b) for a, b in zip(xt, y)]
    same = median_of(xt) == median_of(yt)
    notes.append(f"medians equal {same}")
    shift = yt[1:] + yt[:1]
    want = {"u": "1", "v": "3", "w": "5"}
    tuples = {
        "u": ("1", "1", "3", "1", "3", "1", "3", "1", "5"),
        "v": ("3", "5", "3", "5", "3", "1", "3", "3", "5"),
        "w": ("1", "5", "3", "5", "5", "1", "5", "1", "5"),
    }
    meds = []
    ok_meds = True
    for name, t in tuples.items():
        lift = [S.step(a, b) for a, b in zip(shift, _v(K, *t))]
        m = median_of(lift)
        meds.append(m)
        expect = (zero, {"1": K.vertex("2"), "3": K.vertex("4"), "5": K.vertex("6")}[want[name]],
                  K.vertex(want[name]))
        ok_meds &= m == expect
    notes.append(f"medians {[_labels(K, m) for m in meds]} as expected {ok_meds}")
    C = universal_cover(D, zero, 6)
    ids = [C.index[m] for m in meds]
    common = set.intersection(*(set(C.graph.neighbours(i)) for i in ids))
    notes.append(f"common neighbours {len(common)}")
    return arc and trivial and same and ok_meds and not common, "; ".join(notes)


def k_b_self_cover(fx):
    K, D = fx.graph("k_b"), fx.dismantling("k_b")
    R = Walk(K, _v(K, "a", "b", "c", "d", "e", "a"))
    prev, window = None, 0
    while True:
        Q = unicyclic_cover(D, R, window)
        if Q.is_closed() and prev is not None and prev == Q.graph.n:
            break
        prev = Q.graph.n
        window += 1
        if window > 8:
            return False, "quotient did not close by window 8"
    iso = find_isomorphism(Q.graph, K) is not None
    reds = [len([q for q in all_squares(K) if set(e) <= set(q) and _on_cycle(q, e)])
            for e in (tuple(_v(K, a, b)) for a, b in fixtures.RED_EDGES_K_B)]
    ok = iso and all(r == 1 for r in reds)
    return ok, f"closed at window {window} with {Q.graph.n} vertices, isomorphic {iso}; squares per red edge {reds}"


def _on_cycle(q, e):
    a, b = e
    i = q.index(a)
    return q[(i + 1) % 4] == b or q[(i - 1) % 4] == b


def median_homs(fx):
    notes, ok = [], True
    for name, n in (("c5", 3), ("bowtie", 3), ("moser", 3), ("c5", 5)):
        K, D = fx.graph(name), fx.dismantling(name)
        comp = exp_component(K, n, constant_table(0, n))
        out = cyclic_hom(K, D, n, comp)
        good = isinstance(out, Hom) and out.is_valid() and not comp.truncated
        ok &= good
        notes.append(f"{name} n={n}: {len(comp)} vertices, {'validated' if good else 'failed'}")
    return ok, "; ".join(notes)


def unicyclic_retractions(fx):
    notes, ok = [], True
    for name, cyc in (("c7", [str(i) for i in range(7)]), ("moser", ["0", "1", "2", "3", "4"])):
        K, D = fx.graph(name), fx.dismantling(name)
        vs = _v(K, *cyc)
        Q = unicyclic_cover(D, Walk(K, vs + vs[:1]), 4)
        r = retract_unicyclic(Q)
        notes.append(f"{name}: {Q.graph.n} vertices onto a {len(r.cycle)}-cycle")
    return ok, "; ".join(notes)


def _canonical(G):
    best = None
    for perm in itertools.permutations(range(G.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in G.edges))
        if best is None or key < best:
            best = key
    return best


def connected_graphs(max_n):
    """All connected simple graphs on ``1..max_n`` vertices up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            G = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if not G.is_connected():
                continue
            c = _canonical(G)
            if c not in seen:
                seen.add(c)
                out.append(G)
    return out


def random_connected_graph(rng, n, p=0.5):
    while True:
        G = Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])
        if G.is_connected():
            return G


def adjunction(fx):
    small = connected_graphs(4)
    pairs = [(G, H) for G in small for H in small if H.num_edges]
    rng = random.Random(2024)
    for _ in range(30):
        pairs.append((random_connected_graph(rng, rng.randrange(5, 7)),
                      random_connected_graph(rng, rng.randrange(5, 7))))
    bad = 0
    for G, H in pairs:
        left = find_hom(p3(G), H) is not None
        right = find_hom(G, p3_inverse(H)) is not None
        bad += left != right
    return bad == 0, f"{len(pairs)} pairs, {bad} disagreements (edgeless target excluded)"


def p3_inverse_cycles(fx):
    a = find_isomorphism(p3_inverse(fx.graph("c3")), cycle_graph(9)) is not None
    b = find_isomorphism(p3_inverse(fx.graph("c5")), cycle_graph(15)) is not None
    return a and b, f"C3 -> C9 {a}, C5 -> C15 {b}"


def girth13(fx):
    K = fx.graph("c13")
    psi = girth13_psi(K)
    u = unit(K)
    both = psi.is_valid() and u.is_valid() and u.target == psi.source
    return both and psi.source.n == 195, f"{psi.source.n} vertices, unit and retraction valid {both}"


def oracle_cross_validation(fx):
    rng = random.Random(7)
    counts = {"confirmed": 0, "unresolved": 0}
    errors = []
    for case in range(100):
        name = "moser" if case < 50 else "k_a"
        K, D = fx.graph(name), fx.dismantling(name)
        sq = all_squares(K)
        C1 = random_closed_walk(rng, K, rng.randrange(K.n), rng.randrange(2, 8))
        if case % 5:
            vs = C1.vertices
            for _ in range(rng.randrange(1, 4)):
                vs = diamond_move(rng, K, vs, sq)
            C2 = Walk(K, vs).rotate(rng.randrange(len(vs) - 1)) if len(vs) > 1 else Walk(K, vs)
        else:
            C2 = random_closed_walk(rng, K, rng.randrange(K.n), rng.randrange(2, 8))
        truth = conjugacy(D, C1, C2) is not None
        verdict = conjugacy_oracle(K, C1, C2, max(len(C1), len(C2)) + 12)
        counts["confirmed" if verdict else "unresolved"] += 1
        if bool(verdict) != truth:
            errors.append((name, C1.vertices, C2.vertices, truth))
    ok = not errors
    detail = f"{counts['confirmed']} confirmed, {counts['unresolved']} unresolved, {len(errors)} disagreements"
    if errors:
        detail += f"; first {errors[0]}"
    return ok, detail


def property_suites(fx):
    fails = {k: run_property(k, 100) for k in PROPERTIES}
    bad = {k: v[0] for k, v in fails.items() if v}
    return not bad, f"{len(PROPERTIES)} properties x 100 cases" + (f"; failures {bad}" if bad else "")


def _product_hom(G, C, H, D, K, f):
    U = union_subproduct(G, C, H, D)
    return Hom(U, K, tuple(f(g, h) for g in range(G.n) for h in range(H.n))).check()


def trichotomy(fx):
    notes, ok = [], True
    C5, C3 = fx.graph("c5"), fx.graph("c3")
    c5, c3 = tuple(range(5)), tuple(range(3))
    D5 = fx.dismantling("c5")
    # constant slices along the first factor: phi(g, h) = h
    phi = _product_hom(C3, c3, C5, c5, C5, lambda g, h: h)
    r = classify_trichotomy(C3, c3, C5, c5, C5, D5, phi)
    ok &= r.case == 1 and len(r.witness) == C5.num_edges
    notes.append(f"constant slice: case {r.case}")
    # mirror: phi(g, h) = g on C5 x C7
    C7 = fx.graph("c7")
    phi = _product_hom(C5, c5, C7, tuple(range(7)), C5, lambda g, h: g)
    r = classify_trichotomy(C5, c5, C7, tuple(range(7)), C5, D5, phi)
    ok &= r.case == 2 and len(r.witness) == C5.num_edges
    notes.append(f"mirror: case {r.case}")
    # first projection C5 x C3 -> C5, expected case 3
    phi = _product_hom(C5, c5, C3, c3, C5, lambda g, h: g)
    r = classify_trichotomy(C5, c5, C3, c3, C5, D5, phi)
    good = r.case == 3 and r.witness is not None and r.witness.is_valid()
    ok &= good
    notes.append(f"projection: case {r.case} (expected 3), |nf1| = {len(r.nf1)}, |nf2| = {len(r.nf2)}")
    return ok, "; ".join(notes)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Criterion:
    number: int
    key: str
    tags: tuple
    fn: object
    title: str


CRITERIA = [
    Criterion(1, "moser-structure", ("moser", "graph"), moser_structure, "Moser spindle squares and dismantling"),
    Criterion(2, "rho-rewrite", ("moser", "walks"), rho_exact, "exact rewrite of 0,a,2,3,b,4,0"),
    Criterion(3, "c5-covers", ("covers",), c5_covers, "universal and triple-winding covers of C5"),
    Criterion(4, "bowtie-cover", ("covers", "bowtie"), bowtie_cover, "bowtie cover degree profile"),
    Criterion(5, "k_a-obstruction", ("k_a", "median"), k_a_obstruction, "K_A median obstruction"),
    Criterion(6, "k_b-self-cover", ("k_b", "covers"), k_b_self_cover, "K_B is its own unicyclic quotient"),
    Criterion(7, "median-hom", ("median",), median_homs, "median homomorphisms from constants"),
    Criterion(8, "unicyclic-retraction", ("median", "covers"), unicyclic_retractions, "retractions of unicyclic covers"),
    Criterion(9, "adjunction", ("p3",), adjunction, "P3 adjunction on small graphs"),
    Criterion(10, "p3inv-cycles", ("p3",), p3_inverse_cycles, "adjoint of odd cycles"),
    Criterion(11, "girth13", ("p3",), girth13, "girth-13 equivalence map"),
    Criterion(12, "oracle", ("oracle", "exponential"), oracle_cross_validation, "recolouring oracle vs normal forms"),
    Criterion(13, "properties", ("properties",), property_suites, "randomized property suites"),
    Criterion(14, "trichotomy", ("trichotomy", "exponential"), trichotomy, "trichotomy classifier cases"),
]


def select(only=None):
    """Criteria whose number, key or tag is in ``only`` (all if empty)."""
    if not only:
        return list(CRITERIA)
    want = set(only)
    return [c for c in CRITERIA if str(c.number) in want or c.key in want or want & set(c.tags)]


@dataclass
class CheckResult:
    criterion: Criterion
    ok: bool
    detail: str
    seconds: float

    def line(self):
        c = self.criterion
        return f"[{'PASS' if self.ok else 'FAIL'}] {c.number:2d} {c.key} ({self.seconds:.2f}s): {self.detail}"


def run_one(c, fx=None):
    fx = fx or FixtureSource()
    t = time.monotonic()
    try:
        ok, detail = c.fn(fx)
    except (HomlabError, ValueError, KeyError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(c, bool(ok), detail, time.monotonic() - t)


def run_checks(only=None, overrides=None, echo=None):
    fx = FixtureSource(overrides)
    out = []
    for c in select(only):
        r = run_one(c, fx)
        if echo:
            echo(r.line())
        out.append(r)
    return out
