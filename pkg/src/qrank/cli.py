"""Command-line frontend: series evaluation, rank tables, congruence scans, checks.

Every command writes an OutputDoc: a stable JSON envelope with the schema
version, an echo of the command, and the payload.  Plain and CSV formats
render the payload only.  Exit status: 0 on success or PASS, 1 on any FAIL,
2 on usage errors.  The environment variable QRANK_PREC overrides the default
precision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cyclotomic import CycQ, cyclotomic_field
from .qexpr import EvalCtx, QExprEvalError, QExprSyntaxError, evaluate
from .quadruples import RANK_TABLE_COLUMNS, class_counts, rank_table
from .rankgen import u_series, v_series
from .verify import PROFILES, check_names, run_all

SCHEMA_VERSION = 1


def _default_prec() -> int:
    raw = os.environ.get("QRANK_PREC")
    if raw is None:
        return 60
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise SystemExit(f"QRANK_PREC must be a positive integer, got {raw!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrank",
        description="Exact q-series engine and partition-quadruple rank toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="evaluate a series expression")
    p.add_argument("--expr", required=True, help="expression, e.g. 'q*E(25)/P(1)^2'")
    p.add_argument("--ell", type=int, default=5, help="ambient cyclotomic order (default 5)")
    p.add_argument("--prec", type=int, default=None, help="working precision (default 60)")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    p = sub.add_parser("ranktable", help="rank table of the quadruples of n")
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=("u", "v"), default="u")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    p = sub.add_parser("classes", help="rank residue-class totals mod ell")
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=("u", "v"), default="u")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    p = sub.add_parser("congruence", help="scan a coefficient congruence family")
    p.add_argument("--family", choices=("u", "v"), required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--residue", type=int, required=True)
    p.add_argument("--max", type=int, required=True, help="largest exponent scanned")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    p = sub.add_parser("verify", help="run the named-check registry")
    p.add_argument("--only", default=None, help="comma-separated check names")
    p.add_argument("--profile", choices=PROFILES, default="default")
    p.add_argument("--prec", type=int, default=None, help="override every check precision")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    return parser


def _doc(command: str, args: dict, payload) -> dict:
    return {"schema_version": SCHEMA_VERSION,
            "command": {"name": command, "args": args},
            "payload": payload}


def _emit(doc: dict, fmt: str, plain_lines, csv_lines, out) -> None:
    if fmt == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        for line in csv_lines():
            out.write(line + "\n")
    else:
        for line in plain_lines():
            out.write(line + "\n")


def _coeff_plain(c: CycQ) -> str:
    if c.is_rational():
        v = c.rational_value()
        return str(v.numerator) if v.denominator == 1 else str(v)
    return f"({c})"


def _series_plain(series) -> str:
    terms = []
    for e, c in series.nonzero_items():
        cs = _coeff_plain(c)
        if e == 0:
            terms.append(cs)
        else:
            qs = "q" if e == 1 else f"q^{e}"
            terms.append(qs if cs == "1" else f"{cs}*{qs}")
    body = " + ".join(terms) if terms else "0"
    return f"{body} + O(q^{int(series.prec)})"


def _cmd_coeffs(args, out, err) -> int:
    prec = args.prec if args.prec is not None else _default_prec()
    try:
        ctx = EvalCtx(ell=args.ell, prec=prec)
        series = evaluate(args.expr, ctx)
    except (QExprSyntaxError, QExprEvalError, ValueError) as exc:
        err.write(f"qrank coeffs: {exc}\n")
        return 2
    dump = series.to_json()
    dump["ell"] = args.ell
    doc = _doc("coeffs", {"expr": args.expr, "ell": args.ell, "prec": prec,
                          "format": args.format}, dump)

    def plain():
        yield _series_plain(series)

    def csv():
        width = args.ell - 1
        yield "exponent," + ",".join(f"c{k}" for k in range(width))
        for e, c in series.nonzero_items():
            field = cyclotomic_field(args.ell)
            yield f"{e}," + ",".join(field.encode(c))

    _emit(doc, args.format, plain, csv, out)
    return 0


def _cmd_ranktable(args, out, err) -> int:
    if args.n < 1:
        err.write("qrank ranktable: n must be >= 1\n")
        return 2
    rows = [r.as_dict() for r in rank_table(args.n, args.kind)]
    doc = _doc("ranktable", {"n": args.n, "kind": args.kind, "format": args.format},
               {"n": args.n, "kind": args.kind, "rows": rows})

    def plain():
        header = "  ".join(RANK_TABLE_COLUMNS)
        yield header
        for r in rows:
            yield "  ".join(str(r[c]) for c in RANK_TABLE_COLUMNS)
        yield f"total: {len(rows)}"

    def csv():
        yield ",".join(RANK_TABLE_COLUMNS)
        for r in rows:
            yield ",".join(str(r[c]) for c in RANK_TABLE_COLUMNS)

    _emit(doc, args.format, plain, csv, out)
    return 0


def _cmd_classes(args, out, err) -> int:
    if args.n < 1 or args.mod < 2:
        err.write("qrank classes: need n >= 1 and --mod >= 2\n")
        return 2
    counts = class_counts(args.n, args.kind, args.mod)
    payload = {"n": args.n, "kind": args.kind, "mod": args.mod,
               "counts": counts, "equal": len(set(counts)) == 1,
               "total": sum(counts)}
    doc = _doc("classes", {"n": args.n, "kind": args.kind, "mod": args.mod,
                           "format": args.format}, payload)

    def plain():
        yield f"{args.kind}-rank classes of n={args.n} mod {args.mod}: {counts}"
        yield f"equal: {payload['equal']}  total: {payload['total']}"

    def csv():
        yield "residue,count"
        for k, c in enumerate(counts):
            yield f"{k},{c}"

    _emit(doc, args.format, plain, csv, out)
    return 0


def _cmd_congruence(args, out, err) -> int:
    if args.mod < 2 or not 0 <= args.residue < args.mod or args.max < 0:
        err.write("qrank congruence: need --mod >= 2, 0 <= --residue < --mod, --max >= 0\n")
        return 2
    series = u_series(args.max + 1) if args.family == "u" else v_series(args.max + 1)
    failure = None
    checked = 0
    for e in range(args.residue, args.max + 1, args.mod):
        c = series.coefficient(e)
        if c.denominator != 1 or c.numerator % args.mod:
            failure = {"exponent": e, "coefficient": str(c)}
            break
        checked += 1
    status = "PASS" if failure is None else "FAIL"
    payload = {"family": args.family, "mod": args.mod, "residue": args.residue,
               "max": args.max, "status": status, "checked": checked,
               "first_failure": failure}
    doc = _doc("congruence", {"family": args.family, "mod": args.mod,
                              "residue": args.residue, "max": args.max,
                              "format": args.format}, payload)

    def plain():
        head = (f"{args.family}({args.mod}n+{args.residue}) = 0 (mod {args.mod}) "
                f"for exponents <= {args.max}: {status}")
        yield head
        if failure is not None:
            yield f"first failure: coefficient of q^{failure['exponent']} is {failure['coefficient']}"
        else:
            yield f"{checked} coefficients checked"

    def csv():
        yield "family,mod,residue,max,status,checked"
        yield f"{args.family},{args.mod},{args.residue},{args.max},{status},{checked}"

    _emit(doc, args.format, plain, csv, out)
    return 0 if status == "PASS" else 1


def _cmd_verify(args, out, err) -> int:
    if args.list:
        for name in check_names():
            out.write(name + "\n")
        return 0
    only = None
    if args.only:
        only = [n.strip() for n in args.only.split(",") if n.strip()]
    try:
        reports = run_all(profile=args.profile, only=only, prec=args.prec)
    except KeyError as exc:
        err.write(f"qrank verify: {exc.args[0]}\n")
        return 2
    payload = [r.to_json() for r in reports]
    doc = _doc("verify", {"only": only, "profile": args.profile, "prec": args.prec,
                          "format": args.format}, payload)

    def plain():
        for r in reports:
            line = f"{r.status:<4}  {r.name:<32} prec={r.prec:<4} {r.runtime_ms:9.1f} ms"
            if r.detail:
                line += f"  [{r.detail}]"
            if r.first_failure:
                line += f"  first failure: {r.first_failure}"
            yield line
        fails = sum(1 for r in reports if r.status == "FAIL")
        yield f"{len(reports)} checks, {fails} failures"

    def csv():
        yield "name,prec,status,runtime_ms,detail"
        for r in reports:
            yield f"{r.name},{r.prec},{r.status},{r.runtime_ms:.1f},\"{r.detail}\""

    _emit(doc, args.format, plain, csv, out)
    return 1 if any(r.status == "FAIL" for r in reports) else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; keep that contract
        return int(exc.code or 0)
    out, err = sys.stdout, sys.stderr
    handler = {
        "coeffs": _cmd_coeffs,
        "ranktable": _cmd_ranktable,
        "classes": _cmd_classes,
        "congruence": _cmd_congruence,
        "verify": _cmd_verify,
    }[args.command]
    return handler(args, out, err)


if __name__ == "__main__":
    raise SystemExit(main())
