"""Why the median construction fails on K_A.

Three neighbours of the root of the universal cover, one per spoke of K_A,
have no common neighbour, yet the nine-tuple built from them has the root
as its median.  The script prints the tuples and the neighbour sets.
"""

from __future__ import annotations

from homlab import fixtures
from homlab.covers import UniversalSpace
from homlab.median import median_of


def main():
    K, D = fixtures.k_a(), fixtures.dismantling("k_a")
    lab = K.vertex
    S = UniversalSpace(D, lab("0"))
    spokes = [(lab("0"), lab(a), lab(b)) for a, b in (("2", "1"), ("4", "3"), ("6", "5"))]
    for x in spokes:
        nb = sorted(",".join(K.label(v) for v in w) for _, w in S.neighbours(x))
        print(f"{','.join(K.label(v) for v in x)}: neighbours {nb}")
    common = set.intersection(*(set(w for _, w in S.neighbours(x)) for x in spokes))
    print(f"common neighbours: {len(common)}")
    y = [S.step(S.root_vertex, lab(c)) for c in "626464242"]
    m = median_of(y)
    print(f"median of the nine root neighbours: {','.join(K.label(v) for v in m)}")


if __name__ == "__main__":
    main()
