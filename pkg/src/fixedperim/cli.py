"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import analysis, core, series
from .core import DomainError, Family
from .enumeration import constraint_for, enumerate_fixed_perimeter

FORMATS = ("text", "csv", "json")
SERIES_KINDS = ("H", "F", "h1", "h1_printed")


class UsageError(DomainError):
    pass


# -- rendering --------------------------------------------------------------


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_text_table(header: list[str], rows) -> str:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def _family_args(args) -> tuple[Family, int | None]:
    family = Family.parse(args.family)
    if family is Family.LAB and args.b is None:
        raise UsageError("--family lab requires --b")
    if family is not Family.LAB and args.b is not None:
        raise UsageError("--b is only accepted with --family lab")
    return family, args.b


def _header(family: Family, args) -> dict:
    return {"family": family.value.lower(), "d": args.d, "a": args.a, "b": args.b, "n": args.n}


# -- commands ---------------------------------------------------------------


def cmd_count(args) -> str:
    family, b = _family_args(args)
    value = core.total(family, args.d, args.a, args.n, b)
    if args.format == "json":
        return render_json({**_header(family, args), "count": value})
    if args.format == "csv":
        return render_csv(["family", "d", "a", "b", "n", "count"],
                          [[family.value.lower(), args.d, args.a, "" if b is None else b, args.n, value]])
    return f"{value}\n"


def cmd_table(args) -> str:
    family, b = _family_args(args)
    table = core.refinement_table(family, args.d, args.a, args.n, b)
    rows = table.as_triples()
    if args.format == "json":
        cells = [{"alpha": al, "lambda": lam, "count": c} for al, lam, c in rows]
        return render_json({**_header(family, args), "cells": cells, "count": table.total})
    if args.format == "csv":
        return render_csv(["alpha", "lambda", "count"], rows)
    return render_text_table(["alpha", "lambda", "count"], rows)


def cmd_enumerate(args) -> str:
    family, b = _family_args(args)
    parts = [p for p in enumerate_fixed_perimeter(args.n, constraint_for(family, args.d, args.a, b))]
    if args.format == "json":
        return render_json({**_header(family, args),
                            "partitions": [list(p.parts) for p in parts],
                            "count": len(parts)})
    if args.format == "csv":
        return render_csv(["alpha", "lambda", "parts"], [[p.arm, p.leg, str(p)] for p in parts])
    return "".join(f"{p}\n" for p in parts)


def cmd_series(args) -> str:
    if args.cap < args.a:
        raise UsageError(f"--cap must be >= a, got cap={args.cap}, a={args.a}")
    head = {"kind": args.kind, "d": args.d, "a": args.a, "cap": args.cap}
    if args.kind in ("H", "F"):
        expand = series.expand_H if args.kind == "H" else series.expand_F
        s = expand(args.d, args.a, args.cap)
        rows = sorted(((al, lam, c) for (al, lam), c in s.coeff.items()),
                      key=lambda r: (r[0] + r[1], r[0]))
        header = ["alpha", "lambda", "count"]
        records = [{"alpha": al, "lambda": lam, "count": c} for al, lam, c in rows]
    else:
        expand = (series.expand_h_univariate if args.kind == "h1"
                  else series.expand_h_univariate_printed)
        s = expand(args.d, args.a, args.cap)
        rows = [(n, s.coefficient(n)) for n in range(1, args.cap + 1)]
        header = ["n", "count"]
        records = [{"n": n, "count": c} for n, c in rows]
    if args.format == "json":
        return render_json({**head, "coefficients": records})
    if args.format == "csv":
        return render_csv(header, rows)
    return render_text_table(header, rows)


def cmd_verify(args) -> tuple[str, int]:
    names = [c.strip() for c in args.checks.split(",") if c.strip()]
    oracle = min(args.oracle_n_max, args.n_max)
    grid = analysis.GridSpec(d_min=args.d_min, d_max=args.d_max, n_max=args.n_max,
                             oracle_n_max=oracle, a=args.a)
    reports = analysis.run_checks(names, grid)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        out = render_json({"passed": ok, "reports": [r.to_dict() for r in reports]})
    elif args.format == "csv":
        out = render_csv(["check", "passed", "cases_run", "failures"],
                         [[r.check_name, r.passed, r.cases_run, len(r.failures)] for r in reports])
    else:
        lines = []
        for r in reports:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.check_name}  "
                         f"cases={r.cases_run}  failures={len(r.failures)}")
            for f in r.failures[:10]:
                lines.append(f"    {f.relation}: lhs={f.lhs} rhs={f.rhs} {f.params}")
        out = "\n".join(lines) + "\n"
    return out, 0 if ok else 1


def cmd_scan(args) -> str:
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    rep = analysis.scan_a_shift_conjecture(args.d, args.a, args.n_max)
    if args.format == "json":
        return render_json(rep.to_dict())
    if args.format == "csv":
        return render_csv(["n", "l_a", "l_a_plus_1"],
                          [[n, core.l_total(rep.d, rep.a, n), core.l_total(rep.d, rep.a + 1, n)]
                           for n in rep.exceptions])
    exc = ", ".join(map(str, rep.exceptions)) or "none"
    return (f"d={rep.d} a={rep.a} n_max={rep.n_max}\n"
            f"exceptions: {exc}\nstable_from: {rep.stable_from}\n")


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fixedperim",
                                description="Fixed-perimeter partition counts and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_n=True, with_b=True, with_family=True):
        if with_family:
            sp.add_argument("--family", required=True, type=str.lower,
                            choices=["h", "f", "l", "lab"])
        sp.add_argument("--d", type=int, required=True)
        sp.add_argument("--a", type=int, required=True)
        if with_b:
            sp.add_argument("--b", type=int)
        if with_n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--format", choices=FORMATS, default="text")

    common(sub.add_parser("count", help="total count at perimeter n"))
    common(sub.add_parser("table", help="counts by (arm, leg) at perimeter n"))
    common(sub.add_parser("enumerate", help="list every partition (brute force)"))

    sp = sub.add_parser("series", help="truncated generating-function coefficients")
    sp.add_argument("--kind", required=True, choices=SERIES_KINDS)
    sp.add_argument("--cap", type=int, required=True)
    common(sp, with_n=False, with_b=False, with_family=False)

    sp = sub.add_parser("verify", help="run grid checks")
    sp.add_argument("--checks", default=",".join(analysis.CHECKS))
    sp.add_argument("--d-min", type=int, default=1)
    sp.add_argument("--d-max", type=int, default=10)
    sp.add_argument("--a", type=int, default=None)
    sp.add_argument("--n-max", type=int, default=200)
    sp.add_argument("--oracle-n-max", type=int, default=25)
    sp.add_argument("--format", choices=FORMATS, default="text")

    sp = sub.add_parser("scan", help="scan l_d^(a)(n) <= l_d^(a+1)(n) for exceptions")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--format", choices=FORMATS, default="text")
    return p


COMMANDS = {
    "count": cmd_count,
    "table": cmd_table,
    "enumerate": cmd_enumerate,
    "series": cmd_series,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        result = COMMANDS[args.command](args)
    except (DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
