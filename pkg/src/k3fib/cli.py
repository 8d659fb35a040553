"""Command line interface: ``k3fib <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 violated constraint (for example a
nonzero Hurwitz defect), 3 internal inconsistency.  Output is deterministic;
JSON keys are sorted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .errors import DegreeTooLarge, InternalInconsistency, InvalidInput, K3FibError

FORMATS = ("table", "json", "csv")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; here 2 means a violated constraint
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _partition(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers")
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(f"{text!r} is not a partition")
    return parts


def _max_degree_cap() -> int:
    raw = os.environ.get("K3FIB_MAX_DEGREE", "8")
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"K3FIB_MAX_DEGREE={raw!r} is not an integer")


# --------------------------------------------------------------------------
# rendering

def render_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def render_table(header: list, rows: list) -> str:
    cells = [[str(h) for h in header]] + [["" if v is None else str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(header: list, rows: list, fmt: str, payload=None) -> str:
    """Render rows as table or CSV; JSON uses ``payload`` (defaults to row dicts)."""
    if fmt == "json":
        if payload is None:
            payload = [dict(zip(header, r)) for r in rows]
        return render_json(payload)
    if fmt == "csv":
        return render_csv(header, rows)
    return render_table(header, rows)


def _fmt_part(p) -> str:
    return ",".join(str(x) for x in p)


# --------------------------------------------------------------------------
# subcommands

def cmd_modular(args) -> tuple:
    from .modular import (cy_existence_class, field_class_number, form_class_number,
                          k_field_reading, modular_curve_data)
    data = modular_curve_data(args.n).as_dict()
    data["existence_class"] = cy_existence_class(args.n).value
    if args.verbose:
        n = args.n
        data["k_field_reading"] = k_field_reading(n)
        data["class_numbers"] = {
            "form_h(-4n)": form_class_number(-4 * n),
            "field_h(-4n)": field_class_number(-4 * n),
        }
        if n % 4 == 3:
            data["class_numbers"]["form_h(-n)"] = form_class_number(-n)
            data["class_numbers"]["field_h(-n)"] = field_class_number(-n)
    keys = sorted(k for k, v in data.items() if not isinstance(v, dict))
    rows = [[k, data[k]] for k in keys]
    for k, v in sorted(data.get("class_numbers", {}).items()):
        rows.append([k, v])
    return render(["field", "value"], rows, args.format, payload=data), 0


def _branch_from_args(args):
    from .covers import BranchData
    from .tables import SUPPORTED_N, orbifold_signature
    if args.infinity is None or args.zero is None:
        raise InvalidInput("--infinity and --zero are required to describe a cover")
    lambdas = list(args.lam or [])
    d = sum(args.infinity)
    if args.n in SUPPORTED_N:
        q = orbifold_signature(args.n).q
        if not lambdas:
            lambdas = [(1,) * d] * q
        if len(lambdas) != q:
            raise InvalidInput(f"n={args.n} needs {q} --lambda partitions, got {len(lambdas)}")
    if args.extra is None:
        return BranchData.solve(args.n, args.infinity, args.zero, lambdas)
    return BranchData(args.n, d, args.infinity, args.zero, tuple(lambdas), args.extra)


def cmd_rank(args) -> tuple:
    from .errors import NonZeroDefect
    from .monodromy import h1_rank, pullback_system, vplus_system
    if args.infinity is not None or args.zero is not None:
        b = _branch_from_args(args)
        if b.hurwitz_defect != 0:
            raise NonZeroDefect(f"Hurwitz defect is {b.hurwitz_defect}")
        system = pullback_system(args.n, b)
    else:
        system = vplus_system(args.n)
    h1 = h1_rank(system)
    rows = [[lab, str(c), c.R] for lab, c in system.points]
    payload = dict(system.as_dict(), h1=h1, n=args.n)
    if args.format == "table":
        text = render_table(["label", "class", "R"], rows)
        return text + f"base genus {system.base_genus}, h1 = {h1}\n", 0
    return render(["label", "class", "R"], rows, args.format, payload=payload), 0


def cmd_enumerate(args) -> tuple:
    from .covers import enumerate_branch_data, realizable
    from .tables import orbifold_signature
    cap = _max_degree_cap()
    if args.max_degree > cap:
        raise DegreeTooLarge(f"--max-degree {args.max_degree} exceeds K3FIB_MAX_DEGREE={cap}")
    data = enumerate_branch_data(args.n, args.max_degree, require_smooth=args.smooth,
                                 r_max=args.r_max, lambda_unordered=args.lambda_unordered)
    q = orbifold_signature(args.n).q
    header = ["n", "d", "infinity", "zero"] + [f"lambda_{i + 1}" for i in range(q)] + ["r"]
    if args.witness:
        header.append("realizable")
    rows = []
    payload = []
    for b in data:
        row = [b.n, b.d, _fmt_part(b.part_infinity), _fmt_part(b.part_zero)]
        row += [_fmt_part(z) for z in b.part_lambda] + [b.r_extra]
        item = b.as_dict()
        if args.witness:
            w = realizable(b)
            row.append("yes" if w is not None else "no")
            item["witness"] = None if w is None else w.as_dict()
        rows.append(row)
        payload.append(item)
    return render(header, rows, args.format, payload=payload), 0


def cmd_classify(args) -> tuple:
    from .errors import NotAllowedPartition, NonZeroDefect
    from .hodge import classify
    from .tables import SUPPORTED_N, allowed_zero_partitions
    b = _branch_from_args(args)
    if b.hurwitz_defect != 0:
        raise NonZeroDefect(f"Hurwitz defect is {b.hurwitz_defect}; the identity "
                            "k+l+m_1+...+m_q-qd-r-2=0 fails")
    if b.n in SUPPORTED_N and b.part_zero not in allowed_zero_partitions(b.n):
        raise NotAllowedPartition(f"{list(b.part_zero)} is not an allowed profile over λ=0 "
                                  f"for n={b.n}")
    rec = classify(b)
    d = rec.as_dict()
    if args.format == "json":
        return render_json(d), 0
    scalar = ["admissible", "smooth", "delta", "h11", "h21", "b3", "euler", "existence_class"]
    rows = [["branch", str(b)]] + [[k, d[k]] for k in scalar]
    rows.append(["obstructions", ";".join(d["obstructions"])])
    rows.append(["reasons", ";".join(d["reasons"])])
    for f in rec.fibre_reports:
        desc = f.kind.value
        if f.components is not None:
            desc += f"({f.components})"
        if f.singularity:
            desc += f"({f.singularity})"
        rows.append([f"fibre {f.location}", f"{desc} {f.detail}".strip()])
    return render(["field", "value"], rows, args.format), 0


def cmd_mirror_pairs(args) -> tuple:
    from .hodge import mirror_pairs
    pairs = mirror_pairs(args.max_degree)
    rows = [[n, y] for n, y in pairs]
    payload = [{"n": n, "y": y} for n, y in pairs]
    return render(["n", "y"], rows, args.format, payload=payload), 0


def cmd_dump_tables(args) -> tuple:
    from .tables import dump_tables
    return render_json(dump_tables()), 0


def cmd_check(args) -> tuple:
    from .selfcheck import SUITES, run_all
    names = args.suite or None
    if names:
        unknown = [s for s in names if s not in SUITES]
        if unknown:
            raise InvalidInput(f"unknown suite(s): {', '.join(unknown)}")
    results = run_all(names)
    ok = all(r.passed for r in results)
    rows = [[r.name, "PASS" if r.passed else "FAIL", r.checked, len(r.failures),
             (r.failures[0] if r.failures else "")] for r in results]
    payload = {"passed": ok, "suites": [r.as_dict() for r in results]}
    text = render(["suite", "status", "checked", "failed", "first failure"], rows,
                  args.format, payload=payload)
    return text, 0 if ok else InternalInconsistency.exit_code


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="k3fib", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"k3fib {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    def branch(p, required: bool):
        p.add_argument("--infinity", type=_partition, required=required,
                       help="profile over ∞, e.g. 8 or 4,4")
        p.add_argument("--zero", type=_partition, required=required, help="profile over λ=0")
        p.add_argument("--lambda", dest="lam", type=_partition, action="append",
                       help="profile over λ_i, repeated in table order (default all ones)")
        p.add_argument("--extra", type=int, default=None,
                       help="number r of extra simple branch points (default: solved)")

    p = sub.add_parser("modular", help="invariants of X_0(n) and X_0(n)^+")
    p.add_argument("n", type=int)
    p.add_argument("--verbose", action="store_true", help="also show class-number readings")
    fmt(p)
    p.set_defaults(func=cmd_modular)

    p = sub.add_parser("rank", help="marked points and H^1 rank of V_n^+ or a pullback")
    p.add_argument("n", type=int)
    branch(p, required=False)
    fmt(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("enumerate", help="genus-0 branch data up to a degree")
    p.add_argument("n", type=int)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--smooth", action="store_true", help="unramified over every λ_i")
    p.add_argument("--r-max", type=int, default=None)
    p.add_argument("--lambda-unordered", action="store_true",
                   help="identify data differing by a permutation of the λ_i")
    p.add_argument("--witness", action="store_true", help="search permutation witnesses")
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="Hodge numbers and fibres of one datum")
    p.add_argument("n", type=int)
    branch(p, required=True)
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mirror-pairs", help="(n, y) pairs from l = 2, δ = 0 data")
    p.add_argument("--max-degree", type=int, default=8)
    fmt(p)
    p.set_defaults(func=cmd_mirror_pairs)

    p = sub.add_parser("dump-tables", help="embedded tables as JSON")
    p.set_defaults(func=cmd_dump_tables, format="json")

    p = sub.add_parser("check", help="run the consistency suites")
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    fmt(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except K3FibError as exc:
        print(f"k3fib: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except AssertionError as exc:
        print(f"k3fib: internal inconsistency: {exc}", file=sys.stderr)
        return InternalInconsistency.exit_code
    except ValueError as exc:
        print(f"k3fib: invalid input: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
