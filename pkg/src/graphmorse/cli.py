"""Command-line interface: JSON report on stdout, short summary on stderr.

Exit codes: 0 success, 1 failed check, 2 input error, 3 budget or cap exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import checks
from .catalog import generator
from .category import DEFAULT_FACET_CAP, cat_bounds, cup_length_search
from .complex import barycentric_refinement, euler_characteristic, f_polynomial, \
    stanley_reisner_product, whitney_complex
from .delta import SimplexSet, fusion_check
from .errors import BudgetExceeded, CapExceeded, GraphInputError
from .graphs import Graph, disjoint_union, mertens_graph, shannon_product, zykov_join
from .hodge import betti
from .homotopy import DEFAULT_BUDGET
from .morse import DEFAULT_ORDER_CAP, NotMorse, cri_exact, cri_heuristic, \
    curvature_expectation_exact, curvature_levitt, curvature_mc, morse_inequalities_check, \
    morse_profile, ph_polynomial_check, ph_theorem_check, CurvatureField

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise GraphInputError(message)


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path}: malformed JSON at line {exc.lineno}, "
                              f"column {exc.colno}: {exc.msg}") from None


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(source: str) -> Graph:
    """A graph JSON file, ``-`` for stdin, or ``@name[:p1,p2,...]`` from the catalog."""
    if source.startswith("@"):
        name, _, params = source[1:].partition(":")
        try:
            values = [int(p) for p in params.split(",") if p]
        except ValueError:
            raise GraphInputError(f"bad generator parameters in {source!r}") from None
        return generator(name, values)
    data = _read_json(source)
    if not isinstance(data, dict):
        raise GraphInputError(f"{source}: expected a JSON object with vertices and edges")
    return Graph.from_dict(data)


def load_function(path: str) -> dict:
    """``{"values": {"label": "num/den", ...}}`` or the bare mapping."""
    data = _read_json(path)
    if isinstance(data, dict) and "values" in data:
        data = data["values"]
    if not isinstance(data, dict):
        raise GraphInputError(f"{path}: expected a mapping from vertex label to value")
    try:
        return {int(k): Fraction(str(v)) for k, v in data.items()}
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphInputError(f"{path}: bad function value ({exc})") from None


def _frac(x) -> str:
    return str(Fraction(x))


# -- commands ----------------------------------------------------------------------

def cmd_gen(args):
    g = generator(args.name, args.params)
    if args.out:
        Path(args.out).write_text(g.to_json() + "\n")
    return {"graph": g.to_dict(), "vertices": len(g), "edges": len(g.edges)}, \
        f"{args.name}: {len(g)} vertices, {len(g.edges)} edges"


def cmd_betti(args):
    b = betti(whitney_complex(load_graph(args.graph)))
    return {"betti": list(b)}, f"betti {list(b)}"


def cmd_euler(args):
    chi = euler_characteristic(whitney_complex(load_graph(args.graph)))
    return {"chi": chi}, f"chi {chi}"


def cmd_fvector(args):
    k = whitney_complex(load_graph(args.graph))
    return {"f_vector": list(k.f_vector), "f_polynomial": list(f_polynomial(k))}, \
        f"f-vector {list(k.f_vector)}"


def cmd_refine(args):
    r = barycentric_refinement(whitney_complex(load_graph(args.graph)))
    if args.out:
        Path(args.out).write_text(r.to_json() + "\n")
    return {"graph": r.to_dict()}, f"refinement: {len(r)} vertices"


def cmd_product(args):
    g, h = load_graph(args.g), load_graph(args.h)
    op = {"join": zykov_join, "shannon": shannon_product, "union": disjoint_union,
          "sr": stanley_reisner_product}[args.op]
    p = op(g, h)
    if args.out:
        Path(args.out).write_text(p.to_json() + "\n")
    return {"operation": args.op, "graph": p.to_dict()}, \
        f"{args.op} product: {len(p)} vertices, {len(p.edges)} edges"


def cmd_curvature(args):
    g = load_graph(args.graph)
    chi = euler_characteristic(whitney_complex(g))
    if args.measure == "levitt":
        field = curvature_levitt(g)
    elif args.measure == "exact":
        field = CurvatureField({v: curvature_expectation_exact(g, v) for v in g.vertices},
                               "index-expectation")
    else:
        field = curvature_mc(g, args.samples, args.seed)
    rep = field.to_dict()
    rep.update(chi=chi, **{"pass": field.total == chi})
    return rep, f"{args.measure} curvature sums to {field.total} (chi {chi})"


def cmd_ph(args):
    g = load_graph(args.graph)
    f = load_function(args.function)
    rep = ph_theorem_check(g, f)
    poly = ph_polynomial_check(g, f)
    out = rep.to_dict()
    out["polynomial"] = {"lhs": [_frac(x) for x in poly.lhs], "rhs": [_frac(x) for x in poly.rhs],
                         "pass": poly.passed}
    out["pass"] = rep.passed and poly.passed
    return out, f"index sum {rep.total}, chi {rep.chi}"


def cmd_morse(args):
    g = load_graph(args.graph)
    prof = morse_profile(g, load_function(args.function), args.budget)
    if isinstance(prof, NotMorse):
        return {"morse": False, "vertex": prof.vertex, "reason": prof.reason}, \
            f"not Morse at vertex {prof.vertex}"
    ineq = morse_inequalities_check(betti(whitney_complex(g)), prof.c)
    return {"morse": True, "critical": {str(v): m for v, m in sorted(prof.critical.items())},
            "c": list(prof.c), "strong": [list(p) for p in ineq.strong],
            "pass": ineq.passed}, f"Morse with c = {list(prof.c)}"


def cmd_cri(args):
    g = load_graph(args.graph)
    if len(g) <= args.exact_cap:
        value, order = cri_exact(g, args.exact_cap, args.budget, with_witness=True)
        method = "exact"
    else:
        value, order = cri_heuristic(g, args.restarts, args.seed, args.budget, with_witness=True)
        method = "heuristic-upper-bound"
    return {"cri": value, "method": method, "order": list(order)}, f"cri {value} ({method})"


def cmd_cat(args):
    g = load_graph(args.graph)
    b = cat_bounds(g, args.exact_cap, args.budget, seed=args.seed)
    return {"cat": b.to_dict()}, f"cat in [{b.lower}, {b.upper}]"


def cmd_cup(args):
    r = cup_length_search(whitney_complex(load_graph(args.graph)))
    return {"cup": r.length, "witness": [list(w) for w in r.witness],
            "products_tested": r.products_tested, "truncated": r.truncated}, f"cup {r.length}"


def cmd_fusion(args):
    k = whitney_complex(load_graph(args.graph))
    data = _read_json(args.closed)
    rep = fusion_check(k, SimplexSet.from_dict(k, data))
    return rep.to_dict(), f"fusion {'holds' if rep.passed else 'fails'}"


def cmd_mertens(args):
    n = args.n
    chi = euler_characteristic(whitney_complex(mertens_graph(n)))
    m = checks.mertens(n)
    return {"n": n, "chi": chi, "mertens": m, "pass": chi == 1 - m}, f"chi {chi}, M(n) {m}"


def cmd_check(args):
    corpus = checks.load_corpus(args.corpus) if args.corpus else checks.default_corpus()
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in checks.SUITES:
        raise GraphInputError(f"unknown suite {args.suite!r}; "
                              f"known: all, {', '.join(checks.SUITES)}")
    results = []
    for name in names:
        for chk in checks.run_suite(name, corpus):
            results.append(chk)
            print(chk.line(), file=sys.stderr)
    ok = all(c.passed for c in results)
    failed = sum(not c.passed for c in results)
    return {"checks": [c.to_dict() for c in results], "failed": failed, "pass": ok}, \
        f"{len(results) - failed}/{len(results)} checks passed"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--exact-cap", type=int, default=None)

    p = _Parser(prog="graphmorse", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("gen", cmd_gen, "emit a catalog graph")
    sp.add_argument("name")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--out")
    for name, fn, help_ in [("betti", cmd_betti, "Betti vector"),
                            ("euler", cmd_euler, "Euler characteristic"),
                            ("fvector", cmd_fvector, "f-vector and f-polynomial"),
                            ("cup", cmd_cup, "cup length"),
                            ("cat", cmd_cat, "category bounds")]:
        add(name, fn, help_).add_argument("graph")
    sp = add("refine", cmd_refine, "Barycentric refinement")
    sp.add_argument("graph")
    sp.add_argument("--out")
    sp = add("product", cmd_product, "graph products and sums")
    group = sp.add_mutually_exclusive_group(required=True)
    for flag in ("join", "shannon", "union", "sr"):
        group.add_argument(f"--{flag}", dest="op", action="store_const", const=flag)
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--out")
    sp = add("curvature", cmd_curvature, "curvature fields")
    sp.add_argument("graph")
    sp.add_argument("--measure", choices=["levitt", "exact", "mc"], default="levitt")
    sp.add_argument("--samples", type=int, default=1000)
    for name, fn in [("ph", cmd_ph), ("morse", cmd_morse)]:
        sp = add(name, fn, "Poincare-Hopf check" if name == "ph" else "Morse profile")
        sp.add_argument("graph")
        sp.add_argument("--function", required=True)
    sp = add("cri", cmd_cri, "minimal number of critical points")
    sp.add_argument("graph")
    sp.add_argument("--restarts", type=int, default=20)
    sp = add("fusion", cmd_fusion, "fusion inequality for an open-closed split")
    sp.add_argument("graph")
    sp.add_argument("--closed", required=True)
    sp = add("mertens", cmd_mertens, "Euler characteristic of the divisibility graph")
    sp.add_argument("n", type=int)
    sp = add("check", cmd_check, "run acceptance suites")
    sp.add_argument("suite", nargs="?", default="all")
    sp.add_argument("--corpus")
    return p


_CAP_DEFAULTS = {"cri": DEFAULT_ORDER_CAP, "cat": DEFAULT_FACET_CAP}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.exact_cap is None:
            args.exact_cap = _CAP_DEFAULTS.get(args.command, DEFAULT_ORDER_CAP)
        start = time.perf_counter()
        report, summary = args.fn(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, CapExceeded) as exc:
        print(json.dumps({"error": "budget-exhausted", "message": str(exc)}))
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    params = {"seed": args.seed, "budget": args.budget, "exact_cap": args.exact_cap}
    out = {"command": args.command, "params": params}
    if hasattr(args, "graph"):
        out["input"] = args.graph
    out.update(report)
    print(json.dumps(out, sort_keys=True))
    print(f"{summary} [{time.perf_counter() - start:.2f}s]", file=sys.stderr)
    return EXIT_FAIL if report.get("pass") is False else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
