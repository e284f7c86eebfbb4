"""Recolouring certificate for two conjugate closed walks in the Moser spindle.

A square boundary and a back-and-forth walk are conjugate modulo squares.
The oracle finds single-vertex recolourings of both lengthenings that meet,
and the certificate is replayed independently.
"""

from __future__ import annotations

from homlab import fixtures
from homlab.exponential import conjugacy_oracle, replay_certificate
from homlab.graph import all_squares
from homlab.walks import Walk


def _show(K, W):
    return ",".join(K.label(v) for v in W.vertices)


def main():
    K = fixtures.moser()
    q = all_squares(K)[0]
    W = Walk(K, q + (q[0],))
    T = Walk(K, (q[0], q[1], q[0], q[1], q[0]))
    cert = conjugacy_oracle(K, W, T, 12)
    print(f"walks: {_show(K, W)} and {_show(K, T)}")
    if not cert:
        print(f"unresolved: {cert.reason}")
        return
    print(f"confirmed at length {cert.m}: {len(cert.steps1)} + {len(cert.steps2)} recolouring steps")
    for st in cert.steps1:
        print(f"  first walk: position {st.position}: {K.label(st.old)} -> {K.label(st.new)}")
    for st in cert.steps2:
        print(f"  second walk: position {st.position}: {K.label(st.old)} -> {K.label(st.new)}")
    print(f"replay: {replay_certificate(K, W, T, cert)}")


if __name__ == "__main__":
    main()
