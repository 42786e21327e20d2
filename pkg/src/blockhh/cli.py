"""Command-line surface: block tables, series dumps, and the verify harness.

Output schemas are fixed per subcommand and integer-exact everywhere (full
decimal, no floats).  Exit codes: 0 success or all identities verified,
1 a verification/comparison failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Iterable

from . import blocks as blocks_mod
from . import hochschild as hh
from .partitions import Partition
from .series import Series, partition_gf, pcore_count_gf, section

FALLBACK_ORDER = 40
ORDER_ENV_VAR = "BLOCKHH_ORDER_DEFAULT"

SERIES_NAMES = ("P", "Z", "Y", "HH1group", "Cs")


def _prime(text: str) -> int:
    v = int(text)
    if v < 2 or any(v % d == 0 for d in range(2, int(v**0.5) + 1)):
        raise argparse.ArgumentTypeError("%d is not prime" % v)
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("%d is negative" % v)
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("%d is not positive" % v)
    return v


def default_order() -> int:
    raw = os.environ.get(ORDER_ENV_VAR)
    if raw is None:
        return FALLBACK_ORDER
    try:
        v = int(raw)
    except ValueError:
        print(
            "blockhh: error: %s must be an integer, got %r" % (ORDER_ENV_VAR, raw),
            file=sys.stderr,
        )
        raise SystemExit(2)
    if v < 1:
        print(
            "blockhh: error: %s must be positive, got %d" % (ORDER_ENV_VAR, v),
            file=sys.stderr,
        )
        raise SystemExit(2)
    return v


def canonical_json(obj) -> str:
    """The one JSON rendering: sorted keys, two-space indent, exact ints."""
    return json.dumps(obj, sort_keys=True, indent=2)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(command: str, params: dict, headers: list[str], rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(canonical_json({"command": command, "params": params, "rows": rows}))
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(headers)
        for row in rows:
            writer.writerow([_cell(row[h]) for h in headers])
    else:
        grid = [headers] + [[_cell(row[h]) for h in headers] for row in rows]
        widths = [max(len(r[i]) for r in grid) for i in range(len(headers))]
        for r in grid:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _core_str(core: Partition) -> str:
    return ",".join(str(x) for x in core.parts)


def _int_coeff(c) -> int:
    as_int = int(c)
    if as_int != c:
        raise RuntimeError("non-integer coefficient %s in an integer series" % (c,))
    return as_int


def cmd_blocks(args, out) -> int:
    rows = []
    for b in blocks_mod.blocks_of(args.p, args.n):
        rows.append(
            {
                "p": b.p,
                "n": b.n,
                "core": _core_str(b.core),
                "weight": b.weight,
                "defect_order_exp": b.defect_order_exp,
                "dim_center": blocks_mod.dim_center(b),
                "dim_hh1": blocks_mod.dim_hh1(b),
            }
        )
    headers = ["p", "n", "core", "weight", "defect_order_exp", "dim_center", "dim_hh1"]
    _emit("blocks", {"p": args.p, "n": args.n}, headers, rows, args.format, out)
    return 0


def _series_for(name: str, p, order: int, s) -> Series:
    if name == "P":
        return partition_gf(order)
    if name == "Z":
        return hh.Z_series(p, order)
    if name == "Y":
        return hh.hh1_block_series(p, order)
    if name == "HH1group":
        return hh.hh1_group_series(p, order)
    return section(pcore_count_gf(p, p * order + s), p, s)


def cmd_series(args, parser, out) -> int:
    if args.name != "P" and args.p is None:
        parser.error("argument --p: required for series %r" % args.name)
    if args.name == "Cs":
        if args.s is None:
            parser.error("argument --s: required for series 'Cs'")
        if not 0 <= args.s < args.p:
            parser.error("argument --s: %d out of range 0..%d" % (args.s, args.p - 1))
    elif args.s is not None:
        parser.error("argument --s: only meaningful for series 'Cs'")
    series = _series_for(args.name, args.p, args.order, args.s)
    rows = [
        {"exponent": n, "coefficient": _int_coeff(c)} for n, c in enumerate(series.coeffs)
    ]
    params = {"name": args.name, "order": args.order}
    if args.p is not None:
        params["p"] = args.p
    if args.s is not None:
        params["s"] = args.s
    _emit("series", params, ["exponent", "coefficient"], rows, args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    reports = []
    fault = args.inject_fault

    def run(report):
        reports.append(report)
        out.write("%s\n" % report)

    if args.which in ("thm2", "all"):
        run(hh.verify_theorem2(args.p, max(1, args.order // 2), inject_fault=fault))
    if args.which in ("thm3", "all"):
        run(hh.verify_theorem3(args.p, args.order, inject_fault=fault))
        out.write("fitted phi = %s\n" % hh.fit_phi(args.p, args.order))
    if args.which in ("eq12", "all"):
        for s in range(args.p):
            run(hh.verify_block_decomposition(args.p, s, args.order, inject_fault=fault))
    return 0 if all(r.holds for r in reports) else 1


def cmd_oracle(args, out) -> int:
    from .oracle import hh1_group_oracle

    formula = hh.hh1_group_series(args.p, args.n_max + 1)
    rows = []
    for n in range(args.n_max + 1):
        o = hh1_group_oracle(args.p, n)
        f = _int_coeff(formula[n])
        rows.append({"n": n, "oracle": o, "formula": f, "match": o == f})
    headers = ["n", "oracle", "formula", "match"]
    _emit("oracle", {"p": args.p, "n_max": args.n_max}, headers, rows, args.format, out)
    return 0 if all(r["match"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockhh",
        description="Exact dimension data of symmetric-group blocks in "
        "characteristic p, with machine-verified series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("table", "json", "csv"), default="table")

    p_blocks = sub.add_parser("blocks", help="one row per block of kS_n")
    p_blocks.add_argument("--p", type=_prime, required=True)
    p_blocks.add_argument("--n", type=_nonneg, required=True)
    p_blocks.add_argument("--format", **fmt)

    p_series = sub.add_parser("series", help="coefficient table of a named series")
    p_series.add_argument("--name", choices=SERIES_NAMES, required=True)
    p_series.add_argument("--p", type=_prime)
    p_series.add_argument("--order", type=_positive, default=None)
    p_series.add_argument("--s", type=_nonneg, default=None)
    p_series.add_argument("--format", **fmt)

    p_verify = sub.add_parser("verify", help="run the identity checks")
    p_verify.add_argument("--which", choices=("thm2", "thm3", "eq12", "all"), required=True)
    p_verify.add_argument("--p", type=_prime, required=True)
    p_verify.add_argument("--order", type=_positive, default=None)
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p_oracle = sub.add_parser("oracle", help="centralizer oracle vs series formula")
    p_oracle.add_argument("--p", type=_prime, required=True)
    p_oracle.add_argument("--n-max", type=_nonneg, required=True)
    p_oracle.add_argument("--format", **fmt)

    return parser


def main(argv: Iterable[str] | None = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    out = out if out is not None else sys.stdout
    if getattr(args, "order", None) is None and args.command in ("series", "verify"):
        args.order = default_order()
    try:
        if args.command == "blocks":
            return cmd_blocks(args, out)
        if args.command == "series":
            return cmd_series(args, parser, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_oracle(args, out)
    except ValueError as exc:
        print("blockhh: error: %s" % exc, file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
