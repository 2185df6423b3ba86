"""Command-line front end: verify suites, transform tables, dump elements."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from fqharmonic.c1 import (
    C1Fn,
    HaarMeasure,
    Window,
    delta_lattice,
    delta_point_dist,
    dist_at,
    fn_at,
    fourier1,
    window_dim,
)
from fqharmonic.c2 import BiWindow, D2Elem, VirtualMeasure, fourier2
from fqharmonic.dim0 import FinSpace, Fn0, fourier0
from fqharmonic.exactnum import DomainError
from fqharmonic.harness.config import ConfigError, parse_config
from fqharmonic.harness.csvio import parse_table, render_table
from fqharmonic.harness.report import emit_report
from fqharmonic.harness.suites import run_suites


def _load_config(path: str):
    try:
        return parse_config(Path(path).read_text())
    except ConfigError as exc:
        for ln, msg in exc.errors:
            print(f"{path}:{ln}: {msg}", file=sys.stderr)
        sys.exit(2)


def _parse_window(spec: str) -> Window:
    lo, _, hi = spec.partition(":")
    return Window(int(lo), int(hi))


def _parse_biwindow(spec: str) -> BiWindow:
    outer, _, inner = spec.partition(",")
    l, _, i = outer.partition(":")
    m, _, n = inner.partition(":")
    return BiWindow(int(l), int(i), int(m), int(n))


def _parse_measure(spec: str) -> tuple[Fraction, int]:
    val, _, ref = spec.partition("@")
    num, _, den = val.partition("/")
    return Fraction(int(num), int(den or "1")), int(ref or "0")


def cmd_verify(args) -> int:
    cfg = _load_config(args.config)
    only = set(args.suite) if args.suite else None
    reports = run_suites(cfg, only=only, seed=args.seed)
    text = emit_report(reports, args.format)
    out = args.out or cfg.out
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_transform(args) -> int:
    cfg = _load_config(args.config)
    p = cfg.field.p
    q, dim, table = parse_table(Path(args.input).read_text(), p)
    if q != cfg.field.q:
        print(f"table is over q={q}, config field has q={cfg.field.q}", file=sys.stderr)
        return 2
    if args.op == "fourier0":
        out_fn = fourier0(Fn0(FinSpace(cfg.field, dim), table))
        text = render_table(q, out_fn.table)
    elif args.op == "fourier1":
        model = cfg.models.get(args.model)
        if model is None:
            print(f"unknown model {args.model!r}", file=sys.stderr)
            return 2
        w = _parse_window(args.window)
        value, ref = _parse_measure(args.measure or "1@0")
        f = C1Fn(model, "D", w, table)
        out_f = fourier1(f, HaarMeasure(model, ref, value))
        text = render_table(q, out_f.table, window=(out_f.window.lo, out_f.window.hi))
    elif args.op == "fourier2":
        model = cfg.models.get(args.model)
        if model is None:
            print(f"unknown model {args.model!r}", file=sys.stderr)
            return 2
        bw = _parse_biwindow(args.biwindow)
        o = args.basepoint
        x = D2Elem(model, o, bw, table, VirtualMeasure(model, bw.l, o, Fraction(1)))
        y = fourier2(x)
        text = render_table(q, y.table, biwindow=(y.bw.l, y.bw.i, y.bw.m, y.bw.n))
    else:
        print(f"unknown op {args.op!r}", file=sys.stderr)
        return 2
    Path(args.out).write_text(text)
    return 0


def _build_elem(model, spec: str, w: Window):
    kind, _, rest = spec.partition(":")
    if kind == "deltaF":
        return fn_at(delta_lattice(model, int(rest)), w).table
    if kind == "haar":
        value, ref = _parse_measure(rest)
        return HaarMeasure(model, ref, value).as_dist(w).table
    if kind == "point":
        point = {}
        if rest:
            for item in rest.split(";"):
                k, _, v = item.partition("=")
                point[int(k)] = int(v)
        return dist_at(delta_point_dist(model, point, w), w).table
    raise DomainError(f"unknown element spec {spec!r}")


def cmd_dump(args) -> int:
    from fqharmonic.c2 import C2Model, bw_dim
    from fqharmonic.c2_triples import delta0_fn, one_fn
    from fqharmonic.exactnum import CycNum
    from fqharmonic.tables import const_table

    cfg = _load_config(args.config)
    model = cfg.models.get(args.model)
    if model is None:
        print(f"unknown model {args.model!r}", file=sys.stderr)
        return 2
    try:
        if isinstance(model, C2Model):
            bw = _parse_biwindow(args.window)
            kind = args.elem.partition(":")[0]
            if kind == "ones":
                if model.is_cf:
                    table = one_fn(model, args.basepoint, bw).table
                else:
                    table = const_table(
                        CycNum.one(cfg.field.p), cfg.field.q, bw_dim(model, bw)
                    )
            elif kind == "delta0":
                table = delta0_fn(model, args.basepoint, bw).table
            else:
                raise DomainError(f"unknown element spec {args.elem!r}")
            text = render_table(cfg.field.q, table, biwindow=(bw.l, bw.i, bw.m, bw.n))
        else:
            w = _parse_window(args.window)
            table = _build_elem(model, args.elem, w)
            text = render_table(cfg.field.q, table, window=(w.lo, w.hi))
    except DomainError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fqharmonic",
        description="Exact window-level verification of harmonic analysis on filtered spaces",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run verification suites from a config")
    v.add_argument("config")
    v.add_argument("--suite", action="append", help="run only the named suites")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out")
    v.set_defaults(fn=cmd_verify)

    t = sub.add_parser("transform", help="apply a transform to a CSV table")
    t.add_argument("config")
    t.add_argument("--op", required=True, choices=("fourier0", "fourier1", "fourier2"))
    t.add_argument("--input", required=True)
    t.add_argument("--out", required=True)
    t.add_argument("--model")
    t.add_argument("--window")
    t.add_argument("--biwindow")
    t.add_argument("--measure")
    t.add_argument("--basepoint", type=int, default=0)
    t.set_defaults(fn=cmd_transform)

    d = sub.add_parser("dump", help="dump a window table of a named element")
    d.add_argument("config")
    d.add_argument("--model", required=True)
    d.add_argument("--window", required=True, help="lo:hi, or l:i,m:n for 2d models")
    d.add_argument("--elem", required=True)
    d.add_argument("--basepoint", type=int, default=0)
    d.add_argument("--out")
    d.set_defaults(fn=cmd_dump)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
