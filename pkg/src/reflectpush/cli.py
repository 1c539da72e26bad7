"""Command-line entry point: certificates, verification campaigns and tables.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource guard.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import graphs, oracle
from .classify import (
    Kind,
    classify_rect_all,
    colex_segment_is_optimal,
    lex_segment_is_optimal,
    predicted_packed_box,
)
from .errors import DomainError, ResourceError
from .grid import GridShape, RankWeight
from .orders import all_orders, colex, initial_segment_points, lex, segment_2d
from .symmetry import symmetrize_set
from .triangle import TriangleShape, best_segment_weight, classify_triangle_all

SCHEMA = "downset-cert/1"
VERIFY_SCHEMA = "downset-verify/1"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _json_number(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# ---- optimize ----


def _load_weight(spec: str, max_rank: int) -> RankWeight:
    if spec == "standard":
        return RankWeight.standard(max_rank)
    try:
        with open(spec, encoding="utf-8") as fh:
            w = RankWeight.from_text(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read weight table: {exc}") from None
    if not w.covers(max_rank):
        raise UsageError(f"weight table has {len(w.values)} ranks, the shape needs {max_rank + 1}")
    return w


def _box_profile(A, lengths) -> list[list[int]]:
    l1, l2, l3 = lengths
    layers = [[0] * l1 for _ in range(l3)]
    for x, y, z in A:
        layers[z][x] += 1
    return layers


def cmd_optimize(args) -> tuple[int, str]:
    if args.shape is not None:
        if len(args.shape) != 2:
            raise UsageError("--shape takes two lengths")
        poset = GridShape(args.shape)
        shape_json = {"kind": "rectangle", "lengths": list(args.shape)}
    elif args.triangle is not None:
        poset = TriangleShape(args.triangle)
        shape_json = {"kind": "triangle", "ell": args.triangle}
    else:
        if len(args.box) != 3:
            raise UsageError("--box takes three lengths")
        poset = GridShape(args.box)
        shape_json = {"kind": "box", "lengths": list(args.box)}
    weight = _load_weight(args.weight, poset.max_rank)
    best, opt = oracle.optimal_downsets(poset, weight, args.size)

    sets, classes = [], []
    for A in opt:
        if isinstance(poset, TriangleShape):
            tops = [0] * poset.ell
            for x, y in A:
                tops[x] = max(tops[x], y + 1)
            sets.append(tops)
            classes.append([c.as_json() for c in classify_triangle_all(poset, A)])
        elif poset.d == 2:
            prof = [0] * poset.lengths[0]
            for x, _ in A:
                prof[x] += 1
            sets.append(prof)
            classes.append([c.as_json() for c in classify_rect_all(poset, A)])
        else:
            sets.append(_box_profile(A, poset.lengths))
            names = [o.name for o in all_orders(3) if initial_segment_points(poset, o, len(A)) == A]
            classes.append([{"kind": "Segment", "orders": names}] if names else [{"kind": Kind.UNSTRUCTURED.value}])
    cert = {
        "schema": SCHEMA,
        "shape": shape_json,
        "m": args.size,
        "weight": "standard" if args.weight == "standard" else [_json_number(v) for v in weight.values],
        "max_weight": _json_number(best),
        "optimal_sets": sets,
        "classifications": classes,
    }
    return EXIT_OK, json.dumps(cert, ensure_ascii=False) + "\n"


# ---- verify ----
# Each cell function takes one task tuple and returns a list of result rows
# (cell label, passed, detail). They live at module level so a process pool
# can pickle them.


def _std(shape) -> RankWeight:
    return RankWeight.standard(shape.max_rank)


def _cell_rect_structure(task):
    l1, l2 = task
    shape = GridShape((l1, l2))
    rows = []
    for m, (_, opt) in oracle.optimal_by_size(shape, _std(shape)).items():
        bad = [A for A in opt if classify_rect_all(shape, A)[0].kind is Kind.UNSTRUCTURED]
        rows.append((f"{l1}x{l2}:m={m}", not bad, f"{len(opt)} optimal, {len(bad)} unstructured"))
    return rows


def _cell_exact_criteria(task):
    l1, l2 = task
    shape = GridShape((l1, l2))
    rows = []
    for m, (_, opt) in oracle.optimal_by_size(shape, _std(shape)).items():
        lo = segment_2d(shape, lex(2), m).points in opt
        co = segment_2d(shape, colex(2), m).points in opt
        plo, pco = lex_segment_is_optimal(l1, l2, m), colex_segment_is_optimal(l1, l2, m)
        rows.append(
            (f"{l1}x{l2}:m={m}", lo == plo and co == pco, f"lex {lo}/{plo} colex {co}/{pco}")
        )
    return rows


def _cell_box_formulas(task):
    l1, l2 = task
    shape = GridShape((l1, l2))
    rows = []
    for m, (_, opt) in oracle.optimal_by_size(shape, _std(shape)).items():
        family = set(opt)
        predicted = set()
        for o in (lex(2), colex(2)):
            seg = segment_2d(shape, o, m).points
            if seg not in family:
                continue
            predicted.add(seg)
            for variant in ("T21", "T22"):
                box = predicted_packed_box(shape, o, m, variant)
                if box is not None:
                    predicted.add(symmetrize_set(box, seg, *o.pi))
        rows.append(
            (f"{l1}x{l2}:m={m}", predicted == family, f"{len(family)} optimal, {len(predicted)} predicted")
        )
    return rows


def _cell_weight_class(task):
    l1, l2 = task
    shape = GridShape((l1, l2))
    r = shape.max_rank
    fams = [
        {m: v[1] for m, v in oracle.optimal_by_size(shape, w).items()}
        for w in (RankWeight.standard(r), RankWeight.squares(r), RankWeight.powers_of_two(r))
    ]
    ok = fams[0] == fams[1] == fams[2]
    return [(f"{l1}x{l2}", ok, "r, r^2, 2^r agree" if ok else "families differ")]


def _cell_nested(task):
    l1, l2 = task
    shape = GridShape((l1, l2))
    table = oracle.optimal_by_size(shape, _std(shape))
    levels = [table[m][1] for m in range(shape.size + 1)]
    n = oracle.count_full_chains(levels)
    chains = oracle.full_chains(levels)
    lex_chain = [segment_2d(shape, lex(2), m).points for m in range(shape.size + 1)]
    colex_chain = [segment_2d(shape, colex(2), m).points for m in range(shape.size + 1)]
    if l1 < l2:
        ok = n == 1 and chains == [lex_chain]
    elif l1 > l2:
        ok = n == 1 and chains == [colex_chain]
    else:
        ok = lex_chain in chains and colex_chain in chains
    return [(f"{l1}x{l2}", ok, f"{n} full chains")]


def _cell_triangle(task):
    (ell,) = task
    shape = TriangleShape(ell)
    w = _std(shape)
    rows = []
    for m, (best, opt) in oracle.optimal_by_size(shape, w).items():
        bad = [A for A in opt if classify_triangle_all(shape, A)[0].kind is Kind.UNSTRUCTURED]
        seg_w, _ = best_segment_weight(shape, w, m)
        rows.append(
            (f"R{ell}:m={m}", not bad and seg_w == best, f"max {best}, best segment {seg_w}, {len(bad)} unstructured")
        )
    return rows


def _cell_ak(task):
    n, m = task
    a, b = graphs.ak_optimum(n, m), graphs.ak_bruteforce(n, m)
    return [(f"n={n}:m={m}", a == b, f"closed form {a}, brute force {b}")]


def _report_rows(rep):
    return [
        (f"{rep.title}:m={r['m']}", r["agree"], f"lex {r['lex_weight']}, oracle {r['oracle_max']}")
        for r in rep.rows
    ]


def _cell_lindsay(task):
    return _report_rows(graphs.lindsay_check(list(task)))


def _cell_local_global(task):
    n, d = task
    return _report_rows(graphs.verify_local_global(n, d))


def _pairs(lo: int, lmax: int):
    return [(a, b) for a in range(lo, lmax + 1) for b in range(lo, lmax + 1)]


def _plan(args) -> tuple[Callable, list]:
    th = args.theorem
    if th == "rect-structure":
        return _cell_rect_structure, _pairs(1, 6 if args.lmax is None else args.lmax)
    if th == "exact-criteria":
        return _cell_exact_criteria, _pairs(1, 7 if args.lmax is None else args.lmax)
    if th == "box-formulas":
        return _cell_box_formulas, _pairs(1, 6 if args.lmax is None else args.lmax)
    if th == "weight-class":
        return _cell_weight_class, _pairs(1, 5 if args.lmax is None else args.lmax)
    if th == "nested-unique":
        lmax = 6 if args.lmax is None else args.lmax
        return _cell_nested, [(a, b) for a in range(2, lmax + 1) for b in range(a, lmax + 1)]
    if th == "triangle-structure":
        return _cell_triangle, [(ell,) for ell in range(1, (8 if args.lmax is None else args.lmax) + 1)]
    if th == "ak":
        n = 6 if args.n is None else args.n
        if n > graphs.AK_GUARD:
            raise ResourceError(f"brute force is limited to n <= {graphs.AK_GUARD}")
        return _cell_ak, [(n, m) for m in range(n * (n - 1) // 2 + 1)] if n >= 2 else []
    if th == "lindsay":
        dims = args.dims if args.dims is not None else [3, 4]
        return _cell_lindsay, [tuple(dims)] if dims else []
    if th == "local-global":
        n = 3 if args.n is None else args.n
        d = 3 if args.d is None else args.d
        return _cell_local_global, [(n, d)] if n >= 1 and d >= 1 else []
    raise UsageError(f"unknown theorem {th!r}")


def _run_cells(fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def _summary(passed: int, failed: int) -> str:
    text = f"{passed + failed} cells: {passed} PASS, {failed} FAIL"
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        colour = "\033[31m" if failed else "\033[32m"
        text = f"{colour}{text}\033[0m"
    return text


def cmd_verify(args) -> tuple[int, str]:
    fn, tasks = _plan(args)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    rows = [row for chunk in _run_cells(fn, tasks, jobs) for row in chunk]
    failed = sum(1 for _, ok, _ in rows if not ok)
    if args.format == "json":
        out = json.dumps(
            {
                "schema": VERIFY_SCHEMA,
                "theorem": args.theorem,
                "cells": [{"cell": c, "result": "PASS" if ok else "FAIL", "detail": d} for c, ok, d in rows],
                "all_pass": failed == 0,
            }
        ) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "cell", "result", "detail"])
        for c, ok, d in rows:
            w.writerow([args.theorem, c, "PASS" if ok else "FAIL", d])
        out = buf.getvalue()
    print(_summary(len(rows) - failed, failed), file=sys.stderr)
    return (EXIT_MISMATCH if failed else EXIT_OK), out


# ---- table ----


def cmd_table(args) -> tuple[int, str]:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if args.ak is not None:
        n = args.ak
        if n < 2:
            raise UsageError("--ak needs n >= 2")
        shape = TriangleShape(n - 1)
        weight = RankWeight.standard(shape.max_rank)
        w.writerow(["m", "P_n(m)", "argmax"])
        for m in range(n * (n - 1) // 2 + 1):
            value, which = best_segment_weight(shape, weight, m)
            w.writerow([m, value, "lex;colex" if which == "both" else which])
    elif args.delta is not None:
        g = graphs.parse_graph_spec(args.delta)
        w.writerow(["i", "delta"])
        for i, v in enumerate(graphs.delta_sequence(g), start=1):
            w.writerow([i, v])
    else:
        w.writerow(["ell", "m", "set", "order", "box_lo", "box_hi", "coords"])
        for r in oracle.triangle_box_catalogue(args.triangle_catalogue):
            box = r["box"]
            w.writerow(
                [
                    r["ell"],
                    r["m"],
                    " ".join(f"({x},{y})" for x, y in r["set"]),
                    r["order"] or "",
                    "" if box is None else "({},{})".format(*box.lo),
                    "" if box is None else "({},{})".format(*box.hi),
                    "" if box is None else "({},{})".format(*r["coords"]),
                ]
            )
    return EXIT_OK, buf.getvalue()


THEOREMS = (
    "rect-structure",
    "exact-criteria",
    "triangle-structure",
    "nested-unique",
    "ak",
    "lindsay",
    "local-global",
    "box-formulas",
    "weight-class",
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reflectpush", description="Maximum-weight downset certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("optimize", help="all optimal downsets of one size, as a JSON certificate")
    g = o.add_mutually_exclusive_group(required=True)
    g.add_argument("--shape", type=_int_list, help="rectangle side lengths l1,l2")
    g.add_argument("--triangle", type=int, help="right triangle side length")
    g.add_argument("--box", type=_int_list, help="3D box side lengths l1,l2,l3")
    o.add_argument("--size", type=int, required=True)
    o.add_argument("--weight", default="standard", help="'standard' or a file with one weight per rank")
    o.set_defaults(func=cmd_optimize)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("--theorem", required=True, choices=THEOREMS)
    v.add_argument("--lmax", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--dims", type=_int_list)
    v.add_argument("--format", choices=("csv", "json"), default="csv")
    v.add_argument("--jobs", type=int)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="CSV tables")
    tg = t.add_mutually_exclusive_group(required=True)
    tg.add_argument("--ak", type=int, help="maximum adjacent edge pairs on n vertices, per edge count")
    tg.add_argument("--delta", help="graph spec such as K4, C5, P3 or K3xK4 (vertex index order)")
    tg.add_argument("--triangle-catalogue", type=int, metavar="LMAX", help="boxes behind non-segment optimal triangle sets")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"{parser.prog}: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
