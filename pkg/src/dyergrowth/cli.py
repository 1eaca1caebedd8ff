"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .analysis import DEFAULT_TOL, Family, check_monotonicity, continuity_experiment, growth_rate
from .errors import BudgetExceeded, DyerError
from .model import (
    DyerGraph,
    classify_dyer,
    format_extnat,
    graph_to_matrix,
    induced_coxeter_graph,
    require_valid,
    validate_graph,
)
from .series import growth_series, series_coefficients
from .words import ball, format_word, marking_agreement_radius, normal_form, parse_word, word_to_json

DEFAULT_BUDGET = 10**6


class UsageError(Exception):
    pass


def _load_graph(path, validate=True) -> DyerGraph:
    if path is None:
        raise UsageError("--graph is required")
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc.msg})") from exc
    g = DyerGraph.from_dict(data)
    return require_valid(g) if validate else g


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for {args.command}")
    return value


def _tau_pair(r):
    if r.is_one:
        return [1, 1]
    # round outward so the printed interval still contains tau
    lo = math.floor(r.tau_lower * 10**12) / 10**12
    hi = math.ceil(r.tau_upper * 10**12) / 10**12
    return [lo, hi]


def _table(header, rows, fmt):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(n) for x, n in zip(row, widths)) for row in [header, *rows]]
    return "\n".join(lines)


def _growth_output(table, fmt):
    if fmt == "json":
        return {"a": list(table.a), "b": list(table.b)}
    return _table(["m", "a"], list(enumerate(table.a)), fmt)


# -- commands ---------------------------------------------------------------

def cmd_validate(args):
    g = _load_graph(args.graph, validate=False)
    problems = validate_graph(g)
    if args.format == "json":
        out = {"valid": not problems, "violations": problems}
    else:
        out = "valid" if not problems else "\n".join(problems)
    return out, (0 if not problems else 1)


def cmd_classify(args):
    v = classify_dyer(_load_graph(args.graph))
    if args.format == "json":
        comps = [{"vertices": list(vs), "type": label} for vs, label in v.components]
        return {"kind": v.kind, "components": comps}, 0
    rows = [(" ".join(vs), label) for vs, label in v.components]
    return v.kind + ("\n" + _table(["vertices", "type"], rows, args.format) if rows else ""), 0


def cmd_matrix(args):
    g = _load_graph(args.graph)
    M = graph_to_matrix(g)
    rows = [[format_extnat(x) for x in row] for row in M.entries]
    if args.format == "json":
        return {"vertices": list(g.vertices), "matrix": rows}, 0
    return _table(["", *g.vertices], [[v, *row] for v, row in zip(g.vertices, rows)], args.format), 0


def cmd_induce(args):
    g = _load_graph(args.graph)
    cox, gen_map = induced_coxeter_graph(g)
    mapping = {g.vertices[i]: [cox.vertices[k] for k in word] for i, word in enumerate(gen_map)}
    if args.format == "json":
        return {"graph": cox.to_dict(), "generator_map": mapping}, 0
    lines = [cox.to_json()] + [f"{v} -> {' '.join(w)}" for v, w in mapping.items()]
    return "\n".join(lines), 0


def _normal_form(args):
    g = _load_graph(args.graph)
    w = parse_word(_need(args, "word"), g)
    return g, normal_form(g, w, args.budget)


def cmd_nf(args):
    g, nf = _normal_form(args)
    if args.format == "json":
        return {
            "word": word_to_json(nf.word, g),
            "text": format_word(nf.word, g),
            "syllabic_length": nf.syllabic_length,
            "word_length": nf.word_length,
        }, 0
    return f"{format_word(nf.word, g)}\nsyllabic_length {nf.syllabic_length}\nword_length {nf.word_length}", 0


def cmd_wordlen(args):
    _, nf = _normal_form(args)
    return (nf.word_length if args.format == "json" else str(nf.word_length)), 0


def cmd_ball(args):
    g = _load_graph(args.graph)
    table = ball(g, _need(args, "max"), budget=args.budget, method=args.method)
    return _growth_output(table, args.format), 0


def cmd_series(args):
    r = growth_series(_load_graph(args.graph))
    return (r.to_dict() if args.format == "json" else str(r)), 0


def cmd_coeffs(args):
    r = growth_series(_load_graph(args.graph))
    return _growth_output(series_coefficients(r, _need(args, "max")), args.format), 0


def cmd_rate(args):
    r = growth_rate(_load_graph(args.graph), args.tol)
    if args.format == "json":
        out = {"tau": _tau_pair(r), "classification": r.classification}
        if not r.is_one:
            out["tau_exact"] = [str(r.tau_lower), str(r.tau_upper)]
        return out, 0
    lo, hi = _tau_pair(r)
    return f"{r.classification} tau in [{lo}, {hi}]", 0


def cmd_compare(args):
    g, g2 = _load_graph(args.graph), _load_graph(_need(args, "graph2"))
    rep = check_monotonicity(g, g2, m_max=args.max if args.max is not None else 15, tol=args.tol,
                             budget=args.budget)
    if args.format == "json":
        out = rep.to_dict(g, g2)
        out["tau"], out["tau2"] = _tau_pair(rep.tau), _tau_pair(rep.tau2)
        return out, 0
    rows = [(m, x, y, y - x) for m, (x, y) in enumerate(zip(rep.a, rep.a2))]
    verdict = "holds" if rep.holds else "VIOLATED"
    return _table(["m", "a", "a2", "margin"], rows, args.format) + f"\nmonotonicity {verdict}", 0


def cmd_distance(args):
    g, g2 = _load_graph(args.graph), _load_graph(_need(args, "graph2"))
    r_max = args.max if args.max is not None else 6
    radius = marking_agreement_radius(g, g2, r_max, budget=args.budget)
    out = {"radius": radius, "r_max": r_max, "distance_upper_bound": math.exp(-radius)}
    if args.format == "json":
        return out, 0
    return f"agreement radius {radius} (of {r_max}); d <= {out['distance_upper_bound']:.6g}", 0


def cmd_converge(args):
    path = _need(args, "family")
    try:
        with open(path) as fh:
            family = Family.from_dict(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    ks = [int(k) for k in _need(args, "ks").split(",") if k.strip()]
    rep = continuity_experiment(family, ks, args.tol)
    if args.format == "json":
        return rep.to_dict(), 0
    if args.format == "csv":
        return rep.to_csv().rstrip("\n"), 0
    return _table(["k", "tau_lower", "tau_upper", "gap"],
                  [(k, f"{float(a):.12f}", f"{float(b):.12f}", f"{float(c):.3e}") for k, a, b, c in rep.rows()],
                  "text"), 0


COMMANDS = {
    "validate": (cmd_validate, "check a Dyer graph file"),
    "classify": (cmd_classify, "spherical / Euclidean / neither"),
    "matrix": (cmd_matrix, "Dyer matrix of a graph"),
    "induce": (cmd_induce, "induced Coxeter graph and generator map"),
    "nf": (cmd_nf, "ShortLex normal form of a word"),
    "wordlen": (cmd_wordlen, "word length of a word"),
    "ball": (cmd_ball, "sphere sizes by breadth-first search"),
    "series": (cmd_series, "growth series as a reduced fraction"),
    "coeffs": (cmd_coeffs, "sphere sizes from the growth series"),
    "rate": (cmd_rate, "certified growth-rate interval"),
    "compare": (cmd_compare, "monotonicity check between two graphs"),
    "distance": (cmd_distance, "marking agreement radius of two graphs"),
    "converge": (cmd_converge, "growth rates along a family"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyergrowth", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=list(COMMANDS), metavar="command",
                        help=", ".join(COMMANDS))
    parser.add_argument("--graph")
    parser.add_argument("--graph2")
    parser.add_argument("--max", type=int)
    parser.add_argument("--tol", type=Fraction, default=DEFAULT_TOL)
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--word")
    parser.add_argument("--family")
    parser.add_argument("--ks")
    parser.add_argument("--method", choices=("rewriting", "linear"), default="rewriting",
                        help="ball enumeration method")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.max is not None and args.max < 0:
        print("error: --max must be nonnegative", file=stderr)
        return 2
    if args.tol <= 0:
        print("error: --tol must be positive", file=stderr)
        return 2
    func = COMMANDS[args.command][0]
    try:
        out, code = func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return 3
    except (DyerError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if not isinstance(out, str):
        out = json.dumps(out, separators=(",", ":"))
    print(out, file=stdout)
    return code


def main():
    sys.exit(run())
