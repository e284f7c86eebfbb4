"""A 3-colouring of C9 x C9 that winds along both factors.

Both test walks have nontrivial images in K3, so the map lifts to the
unicyclic cover of a common root walk; the script prints the classification.
"""

from __future__ import annotations

from homlab.exponential import classify_trichotomy
from homlab.graph import complete_graph, cycle_graph, union_subproduct
from homlab.homsearch import Hom


def colouring():
    order = [(2 * k) % 9 for k in range(9)]
    incs = [1] * 6 + [-1] * 3
    tri, val = [0] * 9, 0
    for v, inc in zip(order, incs):
        tri[v] = val % 3
        val += inc
    return lambda i, j: ((i + j) + tri[(i - j) % 9]) % 3


def main():
    C9, K3 = cycle_graph(9), complete_graph(3)
    U = union_subproduct(C9, range(9), C9, range(9))
    f = colouring()
    phi = Hom(U, K3, tuple(f(i, j) for i in range(9) for j in range(9))).check()
    r = classify_trichotomy(C9, range(9), C9, range(9), K3, None, phi)
    print(f"case {r.case}")
    print(f"first factor walk: {len(r.nf1)} arcs; second: {len(r.nf2)} arcs")
    if r.case == 3:
        print(f"root walk {r.root.vertices} to the power {r.exponent}")
        print(f"lift into a cover with {r.cover.graph.n} vertices, valid {r.witness.is_valid()}")


if __name__ == "__main__":
    main()
