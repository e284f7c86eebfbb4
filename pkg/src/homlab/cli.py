"""Command-line interface to homlab: homomorphisms, covers, medians and exponential graphs.

Graphs are given either as a fixture name (``moser``, ``k_a``, ``c7``, ...)
or as a path to an edge-list file.  Exit status is 0 on success or a true
answer, 1 on an absent or false answer and 2 on errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, fixtures
from .adjoints import p3, p3_inverse
from .checks import run_checks
from .covers import unicyclic_cover, universal_cover, verify_covering_map
from .errors import HomlabError
from .exponential import classify_trichotomy, exp_component, format_table, parse_table
from .graph import find_dismantling_sequence, format_edge_list, tensor_product, to_dot
from .homsearch import find_hom, parse_hom
from .median import ObstructionWitness, cyclic_hom
from .walks import parse_walk


def load_graph(source):
    """A fixture by name, or an edge-list file."""
    if os.path.exists(source):
        from .graph import parse_edge_list
        with open(source) as fh:
            return parse_edge_list(fh.read())
    return fixtures.load(source)


def dismantling_for(source, G):
    if not os.path.exists(source) and source in fixtures.names():
        return fixtures.dismantling(source)
    D = find_dismantling_sequence(G)
    if D is None:
        raise HomlabError(f"{source} is not square-dismantlable")
    return D


def _vertices(G, text):
    return tuple(G.vertex(t.strip()) for t in text.split(","))


def _emit_graph(G, args, name="G"):
    return to_dot(G, name) if args.dot else format_edge_list(G)


# ---------------------------------------------------------------------------
# subcommands

def cmd_product(args):
    G, H = load_graph(args.left), load_graph(args.right)
    return 0, _emit_graph(tensor_product(G, H), args, "product")


def cmd_expgraph(args):
    K = load_graph(args.graph)
    start = parse_table(args.start, K) if args.start else (0,) * args.n
    comp = exp_component(K, args.n, start, vertex_budget=args.budget)
    if args.dot:
        return 0, to_dot(comp.graph, "exp")
    lines = [f"# component of {format_table(start, K)} in K^C{args.n}: "
             f"{len(comp)} vertices, {comp.graph.num_edges} edges"
             + (" (truncated)" if comp.truncated else "")]
    lines += [f"{i} {format_table(t, K)}" for i, t in enumerate(comp.tables)]
    lines += [f"{u} {v}" for u, v in comp.graph.edge_list()]
    return 0, "\n".join(lines) + "\n"


def cmd_hom(args):
    G, H = load_graph(args.source), load_graph(args.target)
    f = find_hom(G, H)
    if f is None:
        return 1, "no homomorphism\n"
    return 0, f.to_text()


def cmd_cover(args):
    K = load_graph(args.graph)
    D = dismantling_for(args.graph, K)
    if args.walk:
        C = unicyclic_cover(D, parse_walk(K, args.walk), args.window)
    else:
        root = K.vertex(args.root) if args.root is not None else 0
        C = universal_cover(D, root, args.radius)
    if args.verify:
        rep = verify_covering_map(C)
        return (0 if rep.ok else 1), rep.summary() + "\n"
    return 0, C.to_dot() if args.dot else C.to_text()


def cmd_median_hom(args):
    K = load_graph(args.graph)
    D = dismantling_for(args.graph, K)
    start = parse_table(args.start, K) if args.start else (0,) * args.n
    comp = exp_component(K, args.n, start, vertex_budget=args.budget, strict=True)
    out = cyclic_hom(K, D, args.n, comp)
    if isinstance(out, ObstructionWitness):
        return 1, "obstruction: " + out.describe(K) + "\n"
    lines = [f"{format_table(t, K)} -> {K.label(out.mapping[i])}" for i, t in enumerate(comp.tables)]
    return 0, "\n".join(lines) + "\n"


def cmd_p3(args):
    return 0, _emit_graph(p3(load_graph(args.graph)), args, "P3")


def cmd_p3inv(args):
    return 0, _emit_graph(p3_inverse(load_graph(args.graph), override=args.override), args, "P3inv")


def cmd_classify(args):
    from .graph import union_subproduct
    G, H, K = load_graph(args.g), load_graph(args.h), load_graph(args.k)
    C, Dc = _vertices(G, args.c), _vertices(H, args.d)
    U = union_subproduct(G, C, H, Dc)
    with open(args.phi) as fh:
        phi = parse_hom(fh.read(), U, K)
    Dsm = dismantling_for(args.k, K)
    r = classify_trichotomy(G, C, H, Dc, K, Dsm, phi)
    lines = [f"case {r.case}",
             f"nf1 {','.join(K.label(v) for v in r.nf1.vertices)}",
             f"nf2 {','.join(K.label(v) for v in r.nf2.vertices)}"]
    if r.case == 3:
        lines.append(f"root {','.join(K.label(v) for v in r.root.vertices)} exponent {r.exponent}")
        lines.append(f"lift into a quotient cover with {r.cover.graph.n} vertices")
    return 0, "\n".join(lines) + "\n"


def cmd_verify_paper(args):
    overrides = dict(item.split("=", 1) for item in args.fixture or [])
    echo = None if args.jsonl else print
    results = run_checks(args.only, overrides, echo=echo)
    if args.jsonl:
        for r in results:
            print(json.dumps({"criterion": r.criterion.number, "key": r.criterion.key,
                              "ok": r.ok, "seconds": round(r.seconds, 3), "detail": r.detail}))
    else:
        passed = sum(r.ok for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    return (0 if all(r.ok for r in results) else 1), ""


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="homlab", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=f"homlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("product", help="tensor product of two graphs")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(fn=cmd_product)

    s = sub.add_parser("expgraph", help="component of K^C_n containing a table")
    s.add_argument("--graph", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--start", help="comma-separated table (default: the constant at vertex 0)")
    s.add_argument("--budget", type=int, default=200000)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(fn=cmd_expgraph)

    s = sub.add_parser("hom", help="find a homomorphism")
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.set_defaults(fn=cmd_hom)

    s = sub.add_parser("cover", help="truncated universal or unicyclic cover")
    s.add_argument("--graph", required=True)
    s.add_argument("--radius", type=int, default=4)
    s.add_argument("--root")
    s.add_argument("--walk", help='closed walk "start; v1 v2 ..." for a unicyclic cover')
    s.add_argument("--window", type=int, default=2)
    s.add_argument("--dot", action="store_true")
    s.add_argument("--verify", action="store_true", help="certify the covering map instead of printing")
    s.set_defaults(fn=cmd_cover)

    s = sub.add_parser("median-hom", help="median homomorphism from a component of K^C_n")
    s.add_argument("--graph", required=True)
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--start")
    s.add_argument("--budget", type=int, default=200000)
    s.set_defaults(fn=cmd_median_hom)

    s = sub.add_parser("p3", help="third power")
    s.add_argument("--graph", required=True)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(fn=cmd_p3)

    s = sub.add_parser("p3inv", help="right adjoint of the third power")
    s.add_argument("--graph", required=True)
    s.add_argument("--override", action="store_true", help="allow maximum degree above 12")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(fn=cmd_p3inv)

    s = sub.add_parser("classify", help="trichotomy case of a map on a union subproduct")
    s.add_argument("--g", required=True)
    s.add_argument("--c", required=True, help="odd cycle of G, comma-separated")
    s.add_argument("--h", required=True)
    s.add_argument("--d", required=True, help="odd cycle of H, comma-separated")
    s.add_argument("--k", required=True)
    s.add_argument("--phi", required=True, help="file with lines '(g,h) -> k'")
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("verify-paper", help="run the acceptance checks")
    s.add_argument("--only", nargs="*", help="criterion numbers, keys or tags (e.g. p3)")
    s.add_argument("--fixture", action="append", metavar="NAME=PATH", help="replace a fixture by a file")
    s.add_argument("--jsonl", action="store_true")
    s.set_defaults(fn=cmd_verify_paper)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code, text = args.fn(args)
    except (HomlabError, ValueError, KeyError, OSError) as exc:
        print(f"homlab: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
