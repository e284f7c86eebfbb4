"""K_B: a graph that is its own unicyclic quotient, where medians break.

The quotient of the universal cover by the red 5-cycle closes up into a
copy of K_B.  The median map on the component of constants of K_B^{C_3}
then hits an edge whose two images are not adjacent; the script prints it.
"""

from __future__ import annotations

from homlab import fixtures
from homlab.covers import unicyclic_cover
from homlab.exponential import constant_table, exp_component
from homlab.homsearch import find_isomorphism
from homlab.median import ObstructionWitness, cyclic_hom
from homlab.walks import Walk


def main():
    K, D = fixtures.k_b(), fixtures.dismantling("k_b")
    R = Walk(K, [K.vertex(s) for s in "a b c d e a".split()])
    Q = unicyclic_cover(D, R, 2)
    iso = find_isomorphism(Q.graph, K) is not None
    print(f"quotient cover: {Q.graph.n} vertices, closed {Q.is_closed()}, isomorphic to K_B {iso}")
    comp = exp_component(K, 3, constant_table(0, 3))
    print(f"component of constants in K_B^C3: {len(comp)} tables")
    out = cyclic_hom(K, D, 3, comp)
    if isinstance(out, ObstructionWitness):
        print("obstruction:", out.describe(K))
    else:
        print("median map is a homomorphism")


if __name__ == "__main__":
    main()
