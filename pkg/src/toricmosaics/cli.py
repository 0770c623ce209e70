"""Command-line interface.

Machine-readable results go to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 domain errors (bad mosaics, infeasible parameters), 2 usage
errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import census as census_mod
from . import enumerator, generators
from .render import RenderOptions, render as render_diagram
from .diagram import DiagramError
from .generators import ParameterError
from .mosaic import (
    Mosaic,
    MosaicError,
    canonical_code,
    decode,
    encode,
    hidden_crossing_count,
    is_suitably_connected,
    visible_crossing_count,
)
from .tracer import trace


def _decode_arg(code: str) -> Mosaic:
    try:
        return decode(code)
    except MosaicError as exc:
        raise SystemExit2(str(exc))


class SystemExit2(Exception):
    """Usage-level error: reported on stderr with exit code 2."""


def cmd_encode(args):
    rows = args.rows.split("/")
    try:
        m = Mosaic.from_rows([[int(t) for t in row.split(",")] for row in rows])
    except (ValueError, MosaicError) as exc:
        raise SystemExit2(str(exc))
    print(encode(m))


def cmd_decode(args):
    m = _decode_arg(args.code)
    for row in m.cells:
        print(" ".join(str(k) for k in row))


def cmd_validate(args):
    m = _decode_arg(args.code)
    ok = is_suitably_connected(m, args.mode)
    print("suitably-connected" if ok else "not-suitably-connected")
    return 0 if ok else 1


def cmd_render(args):
    m = _decode_arg(args.code)
    opts = RenderOptions(
        format=args.format,
        cell_size=args.cell_size,
        show_grid=not args.no_grid,
        highlight_hidden=args.highlight_hidden,
    )
    out = render_diagram(m, opts)
    if args.out:
        with open(args.out, "w") as f:
            f.write(out + "\n")
    else:
        print(out)


def cmd_trace(args):
    m = _decode_arg(args.code)
    d = trace(m)
    if args.simplify:
        d = d.simplify()
    print(d.pd_code())
    print(
        f"components={d.component_count} crossings={d.crossing_count} "
        f"visible={visible_crossing_count(m)} hidden={hidden_crossing_count(m)}",
        file=sys.stderr,
    )


def cmd_identify(args):
    m = _decode_arg(args.code)
    table = census_mod.build_table(args.table)
    d = trace(m)
    if d.component_count != 1:
        print(f"link ({d.component_count} components)")
        return 1
    ident = census_mod.identify(d.simplify(), table)
    print(ident.label)
    return 0 if ident.status in ("identified", "ambiguous") else 1


def cmd_solve_hv(args):
    plan = generators.solve_hv(args.p, args.q)
    if plan is None:
        print("infeasible")
        return 1
    print(f"h={plan.h} v={plan.v} n={plan.size}")


def cmd_gen(args):
    if args.kind == "one-braid":
        plan = generators.solve_hv(args.p, args.q)
        if plan is None:
            print("infeasible", file=sys.stderr)
            return 1
        m = generators.one_braid(plan)
    elif args.kind == "naive":
        m = generators.naive_mosaic(args.p, args.q)
    else:  # full-braid
        m, q_prime = generators.full_braid(args.n)
        if args.q is not None and args.q != q_prime:
            m = generators.remove_crossings(m, q_prime, args.q)
    print(encode(m))


def cmd_enumerate(args):
    opts = enumerator.EnumOptions(
        n=args.n,
        symmetry_reduce=args.symmetry,
        prefix=tuple(int(c, 11) for c in args.prefix) if args.prefix else (),
    )
    stream = open(args.out, "w") if args.out else sys.stdout
    try:
        for m in enumerator.enumerate_mosaics(opts):
            stream.write(encode(m) + "\n")
    finally:
        if args.out:
            stream.close()


def cmd_count(args):
    opts = enumerator.EnumOptions(
        n=args.n,
        symmetry_reduce=args.symmetry,
        prefix=tuple(int(c, 11) for c in args.prefix) if args.prefix else (),
    )
    print(enumerator.count(opts))


def cmd_census(args):
    jobs = args.jobs or os.cpu_count() or 1
    report = census_mod.run_census(args.n, jobs=jobs, pd_file=args.table)
    stream = open(args.out, "w") if args.out else sys.stdout
    try:
        report.to_csv(stream)
    finally:
        if args.out:
            stream.close()
    print(
        f"orbits={report.total} knots={len(report.knots)} links={report.link_count} "
        f"ambiguous={len(report.ambiguous)} unknown={len(report.unknown)} "
        f"budget={len(report.budget_failures)}",
        file=sys.stderr,
    )
    for name in sorted(report.knots, key=census_mod._name_key):
        print(f"{name}\t{report.knots[name]}", file=sys.stderr)


def cmd_verify_appendix(args):
    table = census_mod.build_table(args.table)
    rows = census_mod.verify_appendix(
        table,
        path=args.file or census_mod.APPENDIX_PATH,
        names=args.names.split(",") if args.names else None,
    )
    bad = 0
    for row in rows:
        print(f"{row.name}\t{row.bound}\t{row.status}\t{row.detail}")
        bad += row.status == "FAIL"
    summary = [r for r in rows if r.status not in ("PASS", "SKIP")]
    print(f"{len(rows)} rows, {len(summary)} not PASS/SKIP", file=sys.stderr)
    for r in summary:
        print(f"  {r.name}: {r.status} {r.detail}", file=sys.stderr)
    return 0


def cmd_table_build(args):
    table = census_mod.build_table(
        args.table,
        progress=lambda k, n, name: print(f"{k}/{n} {name}", file=sys.stderr),
    )
    print(f"{len(table)} records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricmosaics",
        description="Toric knot mosaics: encode, construct, enumerate, identify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="rows like 1,2,7/8,9,10 -> base-11 code")
    p.add_argument("rows")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="base-11 code -> tile grid")
    p.add_argument("code")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("validate", help="check suitable connectedness")
    p.add_argument("code")
    p.add_argument("--mode", choices=("toric", "classical"), default="toric")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("render", help="draw a mosaic")
    p.add_argument("code")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--cell-size", type=int, default=40)
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("--highlight-hidden", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("trace", help="planar diagram code of a mosaic")
    p.add_argument("code")
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("identify", help="name the knot a mosaic carries")
    p.add_argument("code")
    p.add_argument("--table", default=census_mod.PD_TABLE_PATH)
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("solve-hv", help="best braid-layout parameters")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_solve_hv)

    p = sub.add_parser("gen", help="construct a torus-knot mosaic")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    g = gen_sub.add_parser("one-braid")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.set_defaults(func=cmd_gen, kind="one-braid")
    g = gen_sub.add_parser("naive")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.set_defaults(func=cmd_gen, kind="naive")
    g = gen_sub.add_parser("full-braid")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--q", type=int, default=None, help="odd target after crossing removal")
    g.set_defaults(func=cmd_gen, kind="full-braid")

    p = sub.add_parser("enumerate", help="all suitably connected n-mosaics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--prefix", default="")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count instead of listing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--prefix", default="")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("census", help="identify every n-mosaic knot")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=0, help="0 = all cores")
    p.add_argument("--table", default=census_mod.PD_TABLE_PATH)
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-appendix", help="re-check the bundled census rows")
    p.add_argument("--file")
    p.add_argument("--names", help="comma-separated subset")
    p.add_argument("--table", default=census_mod.PD_TABLE_PATH)
    p.set_defaults(func=cmd_verify_appendix)

    p = sub.add_parser("table", help="invariant table maintenance")
    tab_sub = p.add_subparsers(dest="tablecmd", required=True)
    t = tab_sub.add_parser("build")
    t.add_argument("--table", default=census_mod.PD_TABLE_PATH)
    t.set_defaults(func=cmd_table_build)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        return int(result or 0)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MosaicError, ParameterError, DiagramError, census_mod.TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
