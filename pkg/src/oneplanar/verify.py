"""Reproduction checks for the quasi-optimal theory, one per acceptance criterion.

Each check returns PASS, FAIL or UNDECIDED (oracle budget exhausted).
Library functions are looked up through their modules at call time so a
test can patch one and watch the matching check fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Callable

from . import bounds as bd
from . import construct as cs
from . import drawing as dr
from . import graph as gr
from . import io
from . import oracle as orc
from .corpus import delete_random_uncrossed, quasi_optimal_corpus, random_drawing
from .errors import SearchBudgetExceeded

PASS, FAIL, UNDECIDED = "PASS", "FAIL", "UNDECIDED"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        return f"{self.name}: {self.status}" + (f"  # {self.detail}" if self.detail else "")


class CheckFailed(AssertionError):
    pass


def expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailed(msg)


@dataclass
class Settings:
    seed: int = 2024
    merge_trees: int = 500
    max_pieces: int = 5
    sub_drawings: int = 200
    random_drawings: int = 1000
    roundtrips: int = 100
    budget: int = orc.DEFAULT_BUDGET


class Context:
    def __init__(self, settings: Settings):
        self.s = settings

    @cached_property
    def wheels(self) -> list[dr.OnePlaneDrawing]:
        return [cs.gen_pdw_optimal(k) for k in range(3, 9)]

    @cached_property
    def merge_trees(self) -> list[dr.OnePlaneDrawing]:
        return quasi_optimal_corpus(self.s.seed, self.s.merge_trees, self.s.max_pieces)

    @cached_property
    def identity_corpus(self) -> list[dr.OnePlaneDrawing]:
        return self.wheels + self.merge_trees

    @cached_property
    def random_drawings(self) -> list[dr.OnePlaneDrawing]:
        rng = random.Random(self.s.seed + 1)
        return [random_drawing(rng, rng.randint(3, 12)) for _ in range(self.s.random_drawings)]


# -- checks -------------------------------------------------------------------------


def check_optimal_baseline(ctx: Context) -> str:
    d = cs.gen_k2222()
    g = dr.underlying_graph(d)
    expect(not dr.validate(d), "K2222 drawing invalid")
    expect((d.n, g.m) == (8, 24) and g.m == 4 * d.n - 8, f"n={d.n}, m={g.m}")
    expect(dr.crossing_count(d) == 6 == d.n - 2, "crossings != n-2")
    expect(dr.is_maximal(d) and cs.is_optimal(d), "not maximal/optimal")
    expect(gr.connectivity(g) == 6, "connectivity != 6")
    expect(all(x % 2 == 0 for x in g.degrees()), "odd degree present")
    census = dr.face_census(d)
    expect(len(census) == 24 and all(f.size == 3 and f.eps == 2 for f in census), "faces not 24 triangles with eps=2")
    return "n=8 m=24 cr=6 kappa=6, 24 triangular faces with eps=2"


def check_lemma_c(ctx: Context) -> str:
    bad = [i for i, d in enumerate(ctx.identity_corpus) if dr.crossing_count(d) != dr.lemma_c_rhs(d)]
    expect(not bad, f"{len(bad)} failures, first corpus index {bad[:1]}")
    return f"{len(ctx.identity_corpus)} drawings, 0 failures"


def check_odd_parity(ctx: Context) -> str:
    rng = random.Random(ctx.s.seed + 2)
    subs = [delete_random_uncrossed(rng, rng.choice(ctx.identity_corpus)) for _ in range(ctx.s.sub_drawings)]
    corpus = ctx.identity_corpus + subs
    expect(all(not dr.validate(d) for d in subs), "a sub-drawing is invalid")
    bad = [i for i, d in enumerate(corpus) if dr.odd_face_count(d) % 2]
    expect(not bad, f"{len(bad)} drawings with an odd number of odd faces")
    return f"{len(corpus)} drawings, all even"


def check_merge_arithmetic(ctx: Context) -> str:
    d = cs.gen_odd_pair(14)
    g = dr.underlying_graph(d)
    odd = [x for x in g.degrees() if x % 2]
    expect((d.n, g.m, dr.crossing_count(d)) == (14, 47, 12), f"odd pair n={d.n} m={g.m}")
    expect(odd == [11, 11], f"odd degrees {odd}")
    lo, hi = bd.pro1_window(14)
    expect((lo, hi) == (47, 48) and g.m == lo, f"window {lo}, {hi}")
    c = cs.chain([cs.gen_k2222()] * 3)
    gc = dr.underlying_graph(c)
    expect((c.n, gc.m, dr.crossing_count(c)) == (20, 70, 18) and gc.m == 4 * c.n - 3 - 7, "3-chain arithmetic")
    return "odd pair (14, 47, 12) two vertices of degree 11; window (47, 48); 3-chain (20, 70, 18)"


def check_recognition(ctx: Context) -> str:
    rng = random.Random(ctx.s.seed + 3)
    ks = []
    for i, d in enumerate(ctx.merge_trees):
        expect(bool(cs.is_quasi_optimal(d)), f"merge tree {i} not recognised")
        dec = cs.decompose(d)
        expect(all(cs.is_optimal(p) for p in dec.pieces), f"tree {i}: non-optimal piece")
        t = dec.tree
        expect(t.m == dec.k - 1 and t.is_connected(), f"tree {i}: merge tree is not a tree")
        r = cs.recompose(dec)
        g, gr_ = dr.underlying_graph(d), dr.underlying_graph(r)
        expect((r.n, gr_.m, dr.crossing_count(r)) == (d.n, g.m, dr.crossing_count(d)), f"tree {i}: recompose counts")
        expect(gr.is_isomorphic(g, gr_), f"tree {i}: recompose changed the graph")
        u, v = rng.choice(d.non_crossing_edges())
        verdict = cs.is_quasi_optimal(dr.delete_edge(d, u, v))
        expect(not verdict and verdict.reason == cs.NOT_MAXIMAL, f"tree {i}: deletion still recognised")
        ks.append(dec.k)
    return f"{len(ks)} merge trees, pieces per tree {min(ks)}..{max(ks)}"


def check_degree_bound(ctx: Context) -> str:
    d = cs.gen_odd_pair(14)
    g = dr.underlying_graph(d)
    b = dr.problem1_bound(g)
    expect(b == Fraction(35, 3), f"bound {b}")
    expect(b < 12 == dr.crossing_count(d) == d.n - 2, "bound not below n-2")
    dec = cs.decompose(d)
    piece_cr = []
    for p in dec.pieces:
        rep = orc.crossing_number(dr.underlying_graph(p), k_max=p.n - 2, budget=ctx.s.budget, upper=p)
        expect(rep.value == p.n - 2, f"piece crossing number {rep.value}")
        piece_cr.append(rep.value)
    expect(sum(piece_cr) == 12, f"certified lower bound {sum(piece_cr)}")
    return f"bound 35/3 < CR = 12 (pieces certified {piece_cr})"


def check_oracle_exactness(ctx: Context) -> str:
    out = []
    for name, g, want in (("K5", gr.complete(5), 1), ("K6", gr.complete(6), 3)):
        t = time.perf_counter()
        rep = orc.crossing_number(g, k_max=want + 1, budget=ctx.s.budget)
        expect(rep.value == want, f"cr({name}) = {rep.value}")
        expect(orc.verify_witness(g, rep.witness, want), f"{name} witness rejected")
        expect(orc.crossing_number_bruteforce(g, want) == want, f"brute force disagrees on {name}")
        dt = time.perf_counter() - t
        expect(dt < 60, f"{name} took {dt:.1f}s")
        out.append(f"cr({name})={want} in {dt:.2f}s")
    return ", ".join(out)


def k7_minus(h: gr.SimpleGraph) -> gr.SimpleGraph:
    return gr.remove_edges(gr.complete(7), gr.embed_into(h, 7))


def check_croa_cr5(ctx: Context) -> str:
    g = k7_minus(gr.cycle(3))
    expect(gr.is_isomorphic(g, gr.complete_multipartite([1, 1, 1, 1, 3])), "K7-C3 is not K11113")
    t = time.perf_counter()
    rep = orc.crossing_number(g, k_max=6, budget=ctx.s.budget)
    dt = time.perf_counter() - t
    expect(rep.value == 5 and 4 in rep.refuted, f"cr = {rep.value}, refuted {rep.refuted}")
    expect(orc.verify_witness(g, rep.witness, 5), "witness rejected")
    expect(dt < 15 * 60, f"took {dt:.0f}s")
    return f"cr(K7-C3)=5, k in {rep.refuted} refuted, {rep.nodes} nodes, {dt:.1f}s"


def check_croa_one_planarity(ctx: Context) -> str:
    k6 = orc.is_one_planar(gr.complete(6), budget=ctx.s.budget)
    expect(k6 is not None and not dr.validate(k6), "K6 has no valid witness")
    expect(orc.is_one_planar(k7_minus(gr.cycle(3)), budget=ctx.s.budget) is None, "K7-C3 reported 1-planar")
    crs = []
    for h in (gr.matching(2), gr.star(3)):
        g = k7_minus(h)
        w = orc.is_one_planar(g, budget=ctx.s.budget)
        expect(w is not None, f"no witness for K7 - {h}")
        expect(not dr.validate(w) and dr.underlying_graph(w) == g, "witness invalid")
        expect(dr.crossing_count(w) <= 4, f"witness has {dr.crossing_count(w)} crossings")
        crs.append(dr.crossing_count(w))
    return f"K6 yes, K7-C3 no, K7-2K2/K7-K13 witnesses with {crs} crossings"


def check_census7(ctx: Context) -> str:
    t = time.perf_counter()
    rep = orc.seven_vertex_census()
    dt = time.perf_counter() - t
    expect(rep.passed, f"unclassified {rep.unclassified}")
    expect(dt < 60, f"took {dt:.1f}s")
    return (f"2-matching {rep.two_matching}, max degree>=3 {rep.max_degree_3}, "
            f"exceptional {rep.exceptional}, {dt:.1f}s")


def check_quasi_maximal(ctx: Context) -> str:
    bad = [i for i, d in enumerate(ctx.identity_corpus) if dr.addable_edges(d)]
    expect(not bad, f"{len(bad)} quasi-optimal drawings admit an edge")
    return f"{len(ctx.identity_corpus)} quasi-optimal drawings are maximal"


def check_bounds(ctx: Context) -> str:
    seven = 0
    for i, d in enumerate(ctx.random_drawings):
        rep = bd.crossing_upper_bound_report(d)
        expect(dr.crossing_count(d) <= rep.bound, f"drawing {i} exceeds its bound")
        if d.n == 7:
            expect(rep.bound == 4 and "cro1" in rep.rules, f"drawing {i}: 7-vertex bound {rep.bound}")
            seven += 1
    return f"{len(ctx.random_drawings)} drawings ({seven} on 7 vertices)"


def check_roundtrip(ctx: Context) -> str:
    pool = ctx.identity_corpus + ctx.random_drawings
    rng = random.Random(ctx.s.seed + 4)
    sample = rng.sample(pool, min(ctx.s.roundtrips, len(pool)))
    for i, d in enumerate(sample):
        text = io.format_drawing(d)
        back = io.parse_drawing(text)
        expect(io.format_drawing(back) == text, f"sample {i} not bit-identical")
        expect(back == io.canonical(d), f"sample {i} rotation changed")
    return f"{len(sample)} drawings"


CHECKS: list[tuple[str, Callable[[Context], str]]] = [
    ("optimal-baseline", check_optimal_baseline),
    ("lem-c-identity", check_lemma_c),
    ("odd-parity", check_odd_parity),
    ("merge-arithmetic", check_merge_arithmetic),
    ("quasi-recognition", check_recognition),
    ("degree-bound-counterexample", check_degree_bound),
    ("oracle-exactness", check_oracle_exactness),
    ("croa-cr5", check_croa_cr5),
    ("croa-one-planarity", check_croa_one_planarity),
    ("census7", check_census7),
    ("quasi-maximal", check_quasi_maximal),
    ("bounds-soundness", check_bounds),
    ("format-roundtrip", check_roundtrip),
]


def run_check(name: str, ctx: Context) -> CheckResult:
    fn = dict(CHECKS)[name]
    t = time.perf_counter()
    try:
        detail = fn(ctx)
        status = PASS
    except SearchBudgetExceeded as exc:
        status, detail = UNDECIDED, str(exc)
    except Exception as exc:  # a crash is a failed criterion, not a crashed report
        status, detail = FAIL, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, status, detail, time.perf_counter() - t)


def verify_paper(settings: Settings | None = None, only: list[str] | None = None,
                 out_dir: str | Path | None = None, figures: bool = True) -> list[CheckResult]:
    """Run the checks; with ``out_dir`` also write ``report.txt`` and figures."""
    ctx = Context(settings or Settings())
    names = [n for n, _ in CHECKS if only is None or n in only]
    results = [run_check(n, ctx) for n in names]
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.txt").write_text("".join(r.line() + "\n" for r in results), encoding="utf-8")
        if figures:
            write_figures(ctx, out)
    return results


def write_figures(ctx: Context, out: Path) -> None:
    from .plotting import plot_edge_window, svg_export

    svg_export(cs.gen_k2222(), out / "k2222.svg")
    svg_export(cs.gen_odd_pair(14), out / "odd_pair_14.svg")
    pts = []
    for d in ctx.merge_trees:
        m = dr.underlying_graph(d).m
        pts.append((d.n, m, 4 * d.n - 7 - m))  # pieces, from m = 4n - k - 7
    plot_edge_window(pts, out / "edge_window.png")
