"""``oneplanar`` command line.

Drawing arguments default to ``-`` (standard input) and drawing outputs to
standard output, so commands compose with pipes::

    oneplanar gen k2222 | oneplanar crossings

Exit status: 0 for success or a true verdict, 1 for a false verdict, 2 for
errors (bad input, invalid drawing, exhausted search budget).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bounds, construct, drawing, io, oracle, verify
from .errors import InvalidDrawing, OnePlanarError, SearchBudgetExceeded
from .graph import parse_graph

OK, NO, ERR = 0, 1, 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path: str, check: bool = True) -> drawing.OnePlaneDrawing:
    return io.parse_drawing(_read_text(path), check=check)


def _emit(d: drawing.OnePlaneDrawing, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(io.format_drawing(d))
    else:
        io.write_drawing(d, out)


def _verdict(flag: bool) -> int:
    print("true" if flag else "false")
    return OK if flag else NO


# -- commands ---------------------------------------------------------------------


def cmd_validate(args) -> int:
    d = _load(args.drawing, check=False)
    bad = drawing.validate(d)
    for v in bad:
        print(f"{v.code} {' '.join(map(str, v.where))}: {v.message}")
    return _verdict(not bad)


def cmd_crossings(args) -> int:
    print(drawing.crossing_count(_load(args.drawing)))
    return OK


def cmd_faces(args) -> int:
    d = _load(args.drawing)
    census = drawing.face_census(d)
    for i, f in enumerate(census):
        print(f"face {i} size {f.size} eps {f.eps}: {' '.join(map(str, f.boundary))}")
    print(f"faces: {len(census)}")
    print(f"odd: {drawing.odd_face_count(d)}")
    return OK


def cmd_maximal(args) -> int:
    d = _load(args.drawing)
    options = drawing.addable_edges(d)
    for a in options:
        print(f"addable {a.u} {a.v} {a.mode}")
    return _verdict(not options)


def cmd_quasi(args) -> int:
    d = _load(args.drawing)
    verdict = construct.is_quasi_optimal(d)
    if not verdict:
        print("false")
        print(f"reason: {verdict.reason}")
        if verdict.deficit:
            print(f"deficit: {verdict.deficit}")
        return NO
    dec = construct.decompose(d)
    print("true")
    print(f"k: {dec.k}")
    for i, j, (u, v) in dec.shared_edges:
        print(f"t {i} {j} {u} {v}")
    return OK


def cmd_decompose(args) -> int:
    dec = construct.decompose(_load(args.drawing))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for i, p in enumerate(dec.pieces):
        io.write_drawing(p, out / f"piece_{i}.1p")
    lines = ["# piece vertex ids: piece_<i>.1p vertex v is original vertex ids[v]"]
    lines += [f"ids {i}: {' '.join(map(str, ids))}" for i, ids in enumerate(dec.vertex_ids)]
    lines += [f"t {i} {j} {u} {v}" for i, j, (u, v) in dec.shared_edges]
    (out / "tree.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"k: {dec.k}")
    return OK


def cmd_merge(args) -> int:
    host, guest = _load(args.host), _load(args.guest)
    spec = construct.MergeSpec(tuple(args.host_edge), tuple(args.guest_edge), host_face=args.face,
                               ordered=args.ordered, mirror_guest=args.mirror)
    _emit(construct.edge_merge(host, guest, spec), args.output)
    return OK


def cmd_gen(args) -> int:
    if args.family == "k2222":
        d = construct.gen_k2222()
    elif args.family == "pdw":
        d = construct.gen_pdw_optimal(args.size)
    elif args.family == "odd-pair":
        d = construct.gen_odd_pair(args.size)
    else:
        d = construct.chain([construct.gen_k2222()] * args.size)
    _emit(d, args.output)
    return OK


def cmd_cr_oracle(args) -> int:
    g = parse_graph(_read_text(args.graph))
    rep = oracle.crossing_number(g, k_max=args.max_k, budget=args.budget)
    print(f"result: {rep.value if rep.exact else 'none'}")
    print(f"lower_bound: {rep.lower_bound}")
    print(f"refuted: {','.join(map(str, rep.refuted))}")
    print(f"nodes: {rep.nodes}")
    if rep.witness is not None:
        for e, f in rep.witness.plan.pairs:
            print(f"cross {e[0]} {e[1]} {f[0]} {f[1]}")
        if args.emit_drawing:
            d = drawing.OnePlaneDrawing(rep.witness.rotation, g.n)
            if drawing.validate(d):
                logging.warning("witness crosses an edge twice; not writable as a 1-plane drawing")
            else:
                io.write_drawing(d, args.emit_drawing)
    return OK if rep.exact else NO


def cmd_oneplanar_oracle(args) -> int:
    g = parse_graph(_read_text(args.graph))
    d = oracle.is_one_planar(g, budget=args.budget)
    if d is None:
        print("result: none")
        return NO
    print(f"result: {drawing.crossing_count(d)}")
    if args.emit_drawing:
        io.write_drawing(d, args.emit_drawing)
    return OK


def cmd_census7(args) -> int:
    rep = oracle.seven_vertex_census()
    print(f"total: {rep.total}")
    print(f"two_matching: {rep.two_matching}")
    print(f"max_degree_3: {rep.max_degree_3}")
    for name, count in rep.exceptional.items():
        print(f"exceptional {name}: {count}")
    print(f"result: {rep.unclassified}")
    return OK if rep.passed else NO


def cmd_bound(args) -> int:
    rep = bounds.crossing_upper_bound_report(_load(args.drawing))
    print(f"bound: {rep.bound}")
    print(f"rules: {','.join(rep.rules)}")
    return OK


def cmd_verify_paper(args) -> int:
    settings = verify.Settings(budget=args.budget)
    if args.quick:
        settings = verify.Settings(merge_trees=40, sub_drawings=40, random_drawings=150,
                                   roundtrips=30, budget=args.budget)
    results = verify.verify_paper(settings, only=args.only, out_dir=args.out, figures=not args.no_figures)
    for r in results:
        print(r.line())
    return OK if all(r.status == verify.PASS for r in results) else NO


def cmd_svg(args) -> int:
    from .plotting import svg_export

    d = _load(args.drawing)
    svg_export(d, args.output)
    print(f"crossing marks: {len(d.fakes)}")
    return OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oneplanar", description="1-plane drawings, quasi-optimality and crossing numbers.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def drawing_cmd(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("drawing", nargs="?", default="-", help="drawing file (default: stdin)")
        sp.set_defaults(func=fn)
        return sp

    drawing_cmd("validate", cmd_validate, "check a drawing and list violations")
    drawing_cmd("crossings", cmd_crossings, "print the number of crossings")
    drawing_cmd("faces", cmd_faces, "face census of the planarization")
    drawing_cmd("maximal", cmd_maximal, "is no edge addable?")
    drawing_cmd("quasi", cmd_quasi, "quasi-optimality with decomposition summary")
    drawing_cmd("bound", cmd_bound, "upper bound on crossings with the rules used")
    sp = drawing_cmd("decompose", cmd_decompose, "split into optimal pieces")
    sp.add_argument("-o", "--out", required=True, help="output directory")
    sp = drawing_cmd("svg", cmd_svg, "render the drawing as SVG")
    sp.add_argument("-o", "--output", required=True)

    sp = sub.add_parser("merge", help="glue GUEST onto HOST along an uncrossed edge")
    sp.add_argument("host")
    sp.add_argument("guest")
    sp.add_argument("--host-edge", nargs=2, type=int, required=True, metavar=("U", "V"))
    sp.add_argument("--guest-edge", nargs=2, type=int, required=True, metavar=("U", "V"))
    sp.add_argument("--face", type=int, default=None, help="host face index (default: first face along the edge)")
    sp.add_argument("--ordered", action="store_true", help="identify endpoints in the order given")
    sp.add_argument("--mirror", action="store_true", help="reflect the guest before gluing")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_merge)

    sp = sub.add_parser("gen", help="generate a drawing")
    sp.add_argument("family", choices=["k2222", "pdw", "odd-pair", "chain"])
    sp.add_argument("size", nargs="?", type=int, default=None,
                    help="pdw: wheel size k; odd-pair: n; chain: number of K2222 pieces")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    for name, fn in (("cr-oracle", cmd_cr_oracle), ("oneplanar-oracle", cmd_oneplanar_oracle)):
        sp = sub.add_parser(name, help="exact crossing number" if name == "cr-oracle" else "1-planarity test")
        sp.add_argument("graph", nargs="?", default="-", help="graph file (default: stdin)")
        sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="search node budget")
        sp.add_argument("--emit-drawing", metavar="FILE", help="write the witness drawing")
        if name == "cr-oracle":
            sp.add_argument("--max-k", type=int, default=10)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("census7", help="1-planarity census of 7-vertex graphs")
    sp.set_defaults(func=cmd_census7)

    sp = sub.add_parser("verify-paper", help="run the reproduction checks")
    sp.add_argument("-o", "--out", default="verify-report", help="directory for report.txt and figures")
    sp.add_argument("--only", nargs="+", choices=[n for n, _ in verify.CHECKS], metavar="CHECK")
    sp.add_argument("--quick", action="store_true", help="smaller random corpora")
    sp.add_argument("--no-figures", action="store_true")
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "gen":
        needs = {"k2222": False, "pdw": True, "odd-pair": True, "chain": True}[args.family]
        if needs and args.size is None:
            parser.error(f"gen {args.family} needs a size")
    try:
        return args.func(args)
    except InvalidDrawing as exc:
        print(f"error: {exc}", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v.code} {' '.join(map(str, v.where))}: {v.message}", file=sys.stderr)
        return ERR
    except SearchBudgetExceeded as exc:
        print("result: undecided")
        print(f"error: {exc}", file=sys.stderr)
        return ERR
    except (OnePlanarError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return ERR


if __name__ == "__main__":
    sys.exit(main())
