"""Command-line interface.

Exit codes: 0 success (or every identity behaved as expected), 1 a
verification mismatch, 2 a usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

from . import __version__
from .bfile import read_bfile
from .exact import Mat3, format_rational, parse_rational
from .exceptions import IdentityMismatch, Jacobsthal3Error, NonRationalResult
from .identities import (
    Context,
    all_match_expected,
    catalog,
    get_spec,
    strided_closed_form,
    strided_direct_sum,
    strided_sigma,
    verify,
    weighted_closed_form,
    weighted_direct_sum,
    nu,
)
from .matrix import (
    MatFamily,
    MatMethod,
    binet_matrix,
    explicit_matrix,
    matrix_term,
    power_matrix,
    recurrence_matrix,
)
from .scalar import SeqId, term_binet, term_binet_cyclotomic, term_range, term_recurrence, v3

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def render_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def matrix_record(m: Mat3) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in m.rows]


def matrix_text(m: Mat3, indent: str = "") -> str:
    cells = matrix_record(m)
    width = max(len(c) for row in cells for c in row)
    return "\n".join(indent + " ".join(c.rjust(width) for c in row) for row in cells)


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

_SCALAR_METHODS = {
    "recurrence": term_recurrence,
    "binet": term_binet,
    "cyclotomic": term_binet_cyclotomic,
}


def cmd_term(args) -> int:
    seq = SeqId.parse(args.seq)
    value = _SCALAR_METHODS[args.method](seq, args.n)
    shown = format_rational(value)
    if args.format == "json":
        out = render_json({"seq": seq.value, "n": args.n, "method": args.method, "value": shown})
    elif args.format == "csv":
        out = render_csv(["seq", "n", "method", "value"], [[seq.value, args.n, args.method, shown]])
    else:
        out = shown + "\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    family = MatFamily.parse(args.family)
    m = matrix_term(family, args.n, args.method)
    method = args.method or ("power" if abs(args.n) > 64 else "explicit")
    if args.format == "json":
        out = render_json({"family": family.value, "n": args.n, "method": method, "matrix": matrix_record(m)})
    elif args.format == "csv":
        out = render_csv(["c1", "c2", "c3"], matrix_record(m))
    else:
        out = matrix_text(m) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


def _given_params(args) -> dict:
    return {k: getattr(args, k) for k in ("x", "m", "r") if getattr(args, k) is not None}


def cmd_verify(args) -> int:
    if not args.all and not args.id:
        raise UsageError("give --all or at least one --id")
    if args.min > args.max:
        raise UsageError(f"--min {args.min} exceeds --max {args.max}")
    given = _given_params(args)
    ctx = Context()
    if args.all:
        ids = sorted(set(args.id or ()) | set(catalog()))
        reports = []
        for i in ids:
            names = {p.name for p in get_spec(i).params}
            reports.append(verify(i, args.min, args.max, {k: v for k, v in given.items() if k in names}, ctx))
    else:
        specs = [get_spec(i) for i in args.id]
        reports = [verify(s.id, args.min, args.max, given, ctx) for s in specs]
    ok = all_match_expected(reports)
    if args.format == "json":
        out = render_json([r.to_record() for r in reports])
    elif args.format == "csv":
        out = render_csv(
            ["id", "min", "max", "expected", "status", "matches_expected", "checked", "mismatches"],
            [[r.id, r.range[0], r.range[1], r.expected.value, r.status.value,
              str(r.matches_expected).lower(), r.checked, r.mismatches] for r in reports],
        )
    else:
        lines = []
        for r in reports:
            flag = "ok" if r.matches_expected else "UNEXPECTED"
            lines.append(f"{r.id:<18} {r.status.value:<4} expected={r.expected.value:<16} "
                         f"checked={r.checked:<5} mismatches={r.mismatches:<5} {flag}")
            if r.counterexamples:
                ce = r.counterexamples[0]
                detail = ce.get("entry", {"lhs": ce["lhs"], "rhs": ce["rhs"]})
                where = f" entry ({detail['row']},{detail['col']})" if "row" in detail else ""
                lines.append(f"    first counterexample: n={ce['n']} params={ce['params']}{where}: "
                             f"lhs={detail['lhs']} rhs={detail['rhs']}")
            for d in r.degenerate[:3]:
                lines.append(f"    degenerate (skipped): params={d['params']} {d['reason']}")
        lines.append(f"{'all identities behaved as expected' if ok else 'UNEXPECTED RESULT'} "
                     f"({len(reports)} identities, n in [{args.min}, {args.max}])")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_sum(args) -> int:
    family = MatFamily.parse(args.family)
    if args.n is None or args.n < 0:
        raise UsageError("--n >= 0 is required")
    ctx = Context()
    if args.kind == "t3":
        x = args.x
        if x is None:
            raise UsageError("--x is required for kind t3")
        if x == 0:
            raise UsageError("x = 0 is excluded")
        if nu(x) == 0:
            raise UsageError(f"x = {format_rational(x)} is a root of x^3 - x^2 - x - 2")
        direct = weighted_direct_sum(ctx, family, x, args.n)
        forms = {
            "corrected": weighted_closed_form(ctx, family, x, args.n, -nu(x)),
            "printed": weighted_closed_form(ctx, family, x, args.n, nu(x)),
        }
        verdict_key = "corrected"
        params = {"x": format_rational(x)}
    else:
        m, r = args.m, args.r
        if m is None or r is None:
            raise UsageError("--m and --r are required for kind t4")
        if m < 1:
            raise UsageError(f"m must be >= 1, got {m}")
        if r < m:
            raise UsageError(f"r must be >= m, got r={r}, m={m}")
        if strided_sigma(m) == 0:
            raise UsageError("sigma(m)=0: closed form undefined")
        direct = strided_direct_sum(ctx, family, m, r, args.n)
        forms = {"printed": strided_closed_form(ctx, family, m, r, args.n)}
        verdict_key = "printed"
        params = {"m": m, "r": r}
    equal = {k: v == direct for k, v in forms.items()}
    if args.format == "json":
        out = render_json({
            "kind": args.kind, "family": family.value, "n": args.n, "params": params,
            "direct": matrix_record(direct),
            "closed_forms": {k: matrix_record(v) for k, v in forms.items()},
            "equal": equal,
        })
    elif args.format == "csv":
        rows = []
        for label, m_ in [("direct", direct)] + list(forms.items()):
            rows.extend([label, i + 1, *row] for i, row in enumerate(matrix_record(m_)))
        out = render_csv(["source", "row", "c1", "c2", "c3"], rows)
    else:
        parts = [f"direct sum:\n{matrix_text(direct, '  ')}"]
        for k, v in forms.items():
            parts.append(f"{k} closed form ({'equal' if equal[k] else 'DIFFERS'}):\n{matrix_text(v, '  ')}")
        out = "\n".join(parts) + "\n"
    sys.stdout.write(out)
    return EXIT_OK if equal[verdict_key] else EXIT_MISMATCH


def _timed(fn, reps):
    best, value = math.inf, None
    for _ in range(reps):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return value, best


def run_bench(n: int, reps: int, max_linear: int) -> dict:
    """Time every route to M_J(n) and J3(n+1); all must agree exactly."""
    stats: dict = {}
    power, t_power = _timed(lambda: power_matrix(MatFamily.MJ, n, stats), reps)
    mults = stats.get("multiplications", 0) // reps
    matrices = {"power": power}
    timings = {"matrix.power": t_power}
    matrices["binet"], timings["matrix.binet"] = _timed(lambda: binet_matrix(MatFamily.MJ, n), reps)
    scalars = {}
    scalars["binet"], timings["scalar.binet"] = _timed(lambda: term_binet(SeqId.J3, n + 1), reps)
    scalars["cyclotomic"], timings["scalar.cyclotomic"] = _timed(
        lambda: term_binet_cyclotomic(SeqId.J3, n + 1), reps)
    skipped = []
    if n <= max_linear:
        matrices["explicit"], timings["matrix.explicit"] = _timed(lambda: explicit_matrix(MatFamily.MJ, n), reps)
        matrices["recurrence"], timings["matrix.recurrence"] = _timed(
            lambda: recurrence_matrix(MatFamily.MJ, n), reps)
        scalars["recurrence"], timings["scalar.recurrence"] = _timed(
            lambda: term_recurrence(SeqId.J3, n + 1), reps)
    else:
        skipped = ["matrix.explicit", "matrix.recurrence", "scalar.recurrence"]
    ref = matrices["power"]
    agreement = (all(m == ref for m in matrices.values())
                 and all(s == ref[0, 0] for s in scalars.values()))
    return {
        "n": n,
        "reps": reps,
        "agreement": agreement,
        "multiplications": mults,
        "multiplication_bound": 2 * math.ceil(math.log2(n)) if n >= 1 else 0,
        "timings": timings,
        "skipped": skipped,
        "entry_bits": abs(ref[0, 0]).bit_length() if isinstance(ref[0, 0], int) else None,
    }


def cmd_bench(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    res = run_bench(args.n, args.reps, args.max_linear)
    if args.format == "json":
        out = render_json(res)
    elif args.format == "csv":
        out = render_csv(["method", "seconds"], [[k, f"{v:.6f}"] for k, v in res["timings"].items()])
    else:
        lines = [f"n={res['n']} reps={res['reps']} agreement={str(res['agreement']).lower()} "
                 f"power multiplications={res['multiplications']} (bound {res['multiplication_bound']})"]
        lines += [f"  {k:<20} {v:.6f} s" for k, v in res["timings"].items()]
        if res["skipped"]:
            lines.append(f"  skipped above --max-linear: {', '.join(res['skipped'])}")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_OK if res["agreement"] else EXIT_MISMATCH


def crosscheck(rows, seq: SeqId, offset: int) -> list[dict]:
    """Compare b-file rows (file index + offset = our n) against the recurrence."""
    if not rows:
        return []
    lo, hi = rows[0].index + offset, rows[-1].index + offset
    table = term_range(seq, lo, hi) if seq is not SeqId.V3 else None
    mismatches = []
    for row in rows:
        n = row.index + offset
        computed = table[n - lo] if table is not None else v3(n)
        if computed != row.value:
            mismatches.append({"index": row.index, "n": n, "file": str(row.value),
                               "computed": format_rational(computed)})
    return mismatches


def cmd_crosscheck(args) -> int:
    seq = SeqId.parse(args.seq)
    try:
        rows = read_bfile(args.path)
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    mismatches = crosscheck(rows, seq, args.offset)
    if args.format == "json":
        out = render_json({"path": str(args.path), "seq": seq.value, "offset": args.offset,
                           "compared": len(rows), "mismatches": mismatches})
    elif args.format == "csv":
        out = render_csv(["index", "n", "file", "computed"],
                         [[m["index"], m["n"], m["file"], m["computed"]] for m in mismatches])
    else:
        lines = [f"mismatch at n={m['n']} (file index {m['index']}): file {m['file']}, computed {m['computed']}"
                 for m in mismatches]
        lines.append(f"compared {len(rows)} rows, {len(mismatches)} mismatches")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_MISMATCH if mismatches else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS,
                     help="output format (default text)")

    parser = argparse.ArgumentParser(
        prog="jacobsthal3",
        description="Exact third-order Jacobsthal / Jacobsthal-Lucas numbers, matrices and identity checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    seqs = [s.value for s in SeqId]

    p = sub.add_parser("term", parents=[fmt], help="one scalar term")
    p.add_argument("--seq", required=True, choices=seqs)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--method", choices=tuple(_SCALAR_METHODS), default="recurrence")
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("matrix", parents=[fmt], help="one 3x3 matrix term")
    p.add_argument("--family", required=True, choices=[f.value for f in MatFamily])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--method", choices=[m.value for m in MatMethod], default=None)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", parents=[fmt], help="check identities over an index range")
    p.add_argument("--id", action="append", help="identity id (repeatable)")
    p.add_argument("--all", action="store_true", help="every catalogued identity")
    p.add_argument("--min", type=int, default=0)
    p.add_argument("--max", type=int, default=50)
    p.add_argument("--x", type=_rational_arg)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sum", parents=[fmt], help="matrix sums: t3 weighted by x^-k, t4 strided")
    p.add_argument("--kind", required=True, choices=("t3", "t4"))
    p.add_argument("--family", default="J", choices=[f.value for f in MatFamily])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_rational_arg)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("bench", parents=[fmt], help="time every route to M_J(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--max-linear", type=int, default=100_000,
                   help="skip O(n) routes above this n (default 100000)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("crosscheck", parents=[fmt], help="compare a b-file against the recurrence")
    p.add_argument("path")
    p.add_argument("--seq", required=True, choices=seqs)
    p.add_argument("--offset", type=int, default=0, help="our n = file index + offset")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (IdentityMismatch, NonRationalResult) as exc:
        print(f"{parser.prog} {args.command}: mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, Jacobsthal3Error, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
