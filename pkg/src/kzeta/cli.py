"""``kzeta`` command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .errors import KzetaError, NotAvailableError
from .fpi import ac_reference, finite_part, mellin_point
from .quadrature import bridge_xi
from .report import format_real
from .series import XiVariant, xi, xi_checkpoint
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CHECKPOINTS = ((3, 1), (3, 2), (3, 4), (3, 8), (2, 1))


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty J list")
    return values


def _tolerance(text: str) -> float:
    try:
        tol = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 1e-14 <= tol <= 1e-6:
        raise argparse.ArgumentTypeError("tolerance must lie in [1e-14, 1e-6]")
    return tol


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--tol", type=_tolerance, default=1e-10)
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--timing", action="store_true", help="record wall time (makes output non-reproducible)")

    t = sub.add_parser("table", help="tabulate xi_s(J) by series and bridge routes")
    t.add_argument("--which", choices=("xi_checkpoints", "xi_sweep"), default="xi_checkpoints")
    t.add_argument("--s", type=float, default=3.0)
    t.add_argument("--J", type=_int_list, default=[1, 2, 4, 8, 16, 32, 64])
    t.add_argument("--format", choices=("text", "json", "csv"), default="text")

    f = sub.add_parser("fpi", help="finite-part integral of x^p times csch or sech")
    f.add_argument("--kernel", choices=("csch", "sech"), required=True)
    f.add_argument("--exponent", type=int, required=True)
    f.add_argument("--split", type=float, default=1.0)
    f.add_argument("--format", choices=("text", "json", "csv"), default="text")

    x = sub.add_parser("xi", help="evaluate xi_s(J)")
    x.add_argument("--s", type=float, required=True)
    x.add_argument("--J", type=_int_list, required=True)
    x.add_argument("--variant", choices=[m.value for m in XiVariant], default="plain")
    x.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return parser


def _render_rows(rows: list[dict], columns: list[str], fmt: str, header: dict | None = None) -> str:
    if fmt == "json":
        payload = dict(header or {})
        payload["rows"] = rows
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_real(row[c]) if isinstance(row[c], float) else row[c] for c in columns])
        return buf.getvalue()

    def cell(v):
        if v is None:
            return "-"
        if isinstance(v, float):
            return f"{v:.15g}" if abs(v) >= 1e-4 or v == 0 else f"{v:.3e}"
        return str(v)

    table = [columns] + [[cell(r[c]) for c in columns] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(columns))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(line, widths)) for line in table) + "\n"


def _xi_row(s: float, J: int) -> dict:
    series = xi(s, J).value
    bridge = bridge_xi(s, J).value
    try:
        closed = xi_checkpoint(s, J)
    except NotAvailableError:
        closed = None
    return {"s": s, "J": J, "series": series, "bridge": bridge, "closed_form": closed,
            "series_bridge_diff": abs(series - bridge)}


def cmd_table(args) -> int:
    if args.which == "xi_checkpoints":
        pairs = [(float(s), J) for s, J in CHECKPOINTS]
    else:
        if not args.s > 1.0:
            raise KzetaError(f"--s must exceed 1, got {args.s}")
        pairs = [(args.s, J) for J in args.J]
    rows = [_xi_row(s, J) for s, J in pairs]
    columns = ["s", "J", "series", "bridge", "closed_form", "series_bridge_diff"]
    sys.stdout.write(_render_rows(rows, columns, args.format, {"which": args.which}))
    return EXIT_OK


def cmd_xi(args) -> int:
    rows = []
    for J in args.J:
        r = xi(args.s, J, args.variant)
        rows.append({"s": r.s, "J": r.J, "variant": args.variant, "value": r.value,
                     "method": r.method.value, "error_estimate": r.error_estimate, "terms_used": r.terms_used})
    columns = ["s", "J", "variant", "value", "method", "error_estimate", "terms_used"]
    sys.stdout.write(_render_rows(rows, columns, args.format))
    return EXIT_OK


def cmd_fpi(args) -> int:
    r = finite_part(args.kernel, args.exponent, args.split)
    try:
        ac = ac_reference(args.kernel, mellin_point(args.exponent))
    except KzetaError:
        ac = None
    row = {
        "kernel": args.kernel,
        "exponent": args.exponent,
        "split_point": r.split_point,
        "value": r.value,
        "regular_part": r.regular_part,
        "compensation": r.compensation,
        "tail": r.tail,
        "subtracted_terms": " ".join(f"{q}*x^{a}" for a, q in r.subtracted_terms),
        "continuation": ac,
    }
    columns = list(row)
    if args.format == "text":
        width = max(len(c) for c in columns)
        for c in columns:
            v = row[c]
            v = "-" if v is None else (f"{v:.15g}" if isinstance(v, float) else v)
            sys.stdout.write(f"{c:<{width}s}  {v}\n")
    else:
        sys.stdout.write(_render_rows([row], columns, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    report = run_suite(args.suite, args.tol)
    if args.timing:
        report.wall_time_ms = int(round(1000 * (time.perf_counter() - start)))
    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "table": cmd_table, "fpi": cmd_fpi, "xi": cmd_xi}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except KzetaError as exc:
        sys.stderr.write(f"kzeta: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
