"""Command-line interface.

Subcommands: bound, table, primitive, catalog, verify, threshold,
weisfeiler.  Global flags: --catalog <path>, --mode <m>, --format <f>,
--sig <d>, --window <n>; the JMB_CATALOG environment variable supplies
a catalog path when --catalog is absent (the flag wins).

Exit codes: 0 success, 1 verification failure or not-found, 2 usage
error.  All output is deterministic given the catalog and flags; CSV
and JSON carry exact values as decimal strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify as verify_mod
from .catalog import MODES, Catalog, builtin_catalog, is_prime, load_catalog
from .errors import EngineError, ThresholdNotFoundError
from .exactnum import sci_string
from .pair_search import MAX_DEGREE, BoundResult, best_pair, bound_table, threshold
from .tensor_search import primitive_bound

ENV_CATALOG = "JMB_CATALOG"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jmb",
        description="Exact index bounds for finite linear groups in positive characteristic.",
    )
    parser.add_argument("--catalog", help="catalog file path (overrides JMB_CATALOG)")
    parser.add_argument(
        "--mode",
        choices=MODES,
        default="paper-verbatim",
        help="builtin catalog mode (ignored when a catalog file is supplied)",
    )
    parser.add_argument(
        "--format",
        choices=("table", "csv", "json"),
        default="table",
        help="output format for tabular commands",
    )
    parser.add_argument("--sig", type=int, default=3, help="significant digits")
    parser.add_argument(
        "--window", type=int, default=150, help="scan window for threshold/catalog"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="optimal bound f(n, ell) for one degree")
    p.add_argument("n", type=int)
    p.add_argument("--char", type=int, required=True, metavar="ELL")
    p.add_argument("--certificate", action="store_true", help="print maximizing pairs")

    p = sub.add_parser("table", help="bound table over a degree range")
    p.add_argument("--char", type=int, required=True, metavar="ELL")
    p.add_argument("--from", dest="n_from", type=int, default=1)
    p.add_argument("--to", dest="n_to", type=int, default=70)

    p = sub.add_parser("primitive", help="tensor-layer bound for primitive groups")
    p.add_argument("n", type=int)
    p.add_argument("--char", type=int, required=True, metavar="ELL")

    p = sub.add_parser("catalog", help="dump effective constituents per degree")
    p.add_argument("--char", type=int, required=True, metavar="ELL")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        choices=("registry", "maxima", "golden", "all"),
        default="all",
    )

    p = sub.add_parser("threshold", help="least degree where the generic bound takes over")
    p.add_argument("--char", type=int, required=True, metavar="ELL")

    p = sub.add_parser("weisfeiler", help="compare against the smooth bound n^4*(n+2)!")
    p.add_argument("--to", dest="n_to", type=int, default=70)
    p.add_argument("--char", type=int, default=None, metavar="ELL")

    return parser


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _get_catalog(args) -> Catalog:
    path = args.catalog or os.environ.get(ENV_CATALOG)
    if path:
        return load_catalog(path)
    return builtin_catalog(args.mode)


def _flags_for(result: BoundResult) -> list[str]:
    flags = list(result.flags)
    known = verify_mod.KNOWN_TABLE_DISCREPANCIES.get((result.ell, result.n))
    if known:
        flags.append(f"discrepancy:{known[0]}")
    return flags


def _csv_field(text: str) -> str:
    if any(ch in text for ch in ',"\n+'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _row_payload(result: BoundResult, sig: int) -> dict:
    return {
        "n": result.n,
        "l": result.ell,
        "value": str(result.value),
        "sci": str(sci_string(result.value, sig)),
        "shapes": result.shapes(),
        "flags": _flags_for(result),
    }


def _emit_rows(rows: list[BoundResult], fmt: str, sig: int) -> None:
    payloads = [_row_payload(r, sig) for r in rows]
    if fmt == "json":
        print(json.dumps(payloads, indent=2))
    elif fmt == "csv":
        print("n,l,value,sci,shapes,flags")
        for p in payloads:
            fields = [
                str(p["n"]),
                str(p["l"]),
                p["value"],
                p["sci"],
                ";".join(p["shapes"]),
                ";".join(p["flags"]),
            ]
            print(",".join(_csv_field(f) for f in fields))
    else:
        for p in payloads:
            flags = f"  [{', '.join(p['flags'])}]" if p["flags"] else ""
            shapes = " | ".join(p["shapes"])
            print(f"n={p['n']:<4d} {p['sci']:>10s}  {shapes}{flags}")
            print(f"      = {p['value']}")


def _cmd_bound(args, catalog: Catalog) -> int:
    result = best_pair(args.n, args.char, catalog)
    payload = _row_payload(result, args.sig)
    if args.format == "json":
        payload["ties"] = result.tie_count
        if args.certificate:
            payload["certificates"] = [
                {
                    "shape": pair.shape(),
                    "expression": pair.expression(),
                    "blocks": [
                        {
                            "degree": b.entry.degree,
                            "multiplicity": b.multiplicity,
                            "index": str(b.entry.index),
                            "label": b.entry.label,
                        }
                        for b in pair.blocks
                    ],
                }
                for pair in result.argmax
            ]
        print(json.dumps(payload, indent=2))
        return 0
    print(f"f({result.n}, {result.ell}) = {result.value}")
    print(f"             ~ {sci_string(result.value, args.sig)}")
    for flag in payload["flags"]:
        print(f"flag: {flag}")
    if args.certificate:
        shown = len(result.argmax)
        print(f"maximizers ({shown} shown, {result.tie_count} total):")
        for pair in result.argmax:
            print(f"  {pair.shape()} = {pair.expression()}")
            for block in pair.blocks:
                print(
                    f"    P{block.entry.degree} x{block.multiplicity}: "
                    f"{block.entry.label}  index {block.entry.index}"
                )
    return 0


def _cmd_table(args, catalog: Catalog) -> int:
    rows = bound_table(args.char, args.n_from, args.n_to, catalog)
    _emit_rows(rows, args.format, args.sig)
    return 0


def _cmd_primitive(args, catalog: Catalog) -> int:
    result = primitive_bound(args.n, args.char, catalog)
    payload = {
        "n": result.n,
        "l": result.ell,
        "value": str(result.value),
        "sci": str(sci_string(result.value, args.sig)),
        "configs": [c.shape() for c in result.argmax],
        "flags": list(result.flags),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return 0
    print(f"primitive bound({result.n}, {result.ell}) = {result.value}")
    print(f"             ~ {payload['sci']}")
    print(f"maximizing decompositions: {', '.join(payload['configs'])}")
    for flag in result.flags:
        print(f"flag: {flag}")
    return 0


def _cmd_catalog(args, catalog: Catalog) -> int:
    print(f"# effective constituents, characteristic {args.char}, mode {catalog.mode}")
    for m in range(1, args.window + 1):
        entries = catalog.constituents(args.char, m)
        if not entries:
            continue
        entry = entries[0]
        print(f"m={m:<4d} index={entry.index}  label={entry.label}  kind={entry.kind}")
    return 0


def _cmd_verify(args, catalog: Catalog) -> int:
    reports = []
    if args.suite in ("registry", "all"):
        reports.append(verify_mod.run_registry(catalog))
    if args.suite in ("maxima", "all"):
        reports.append(verify_mod.verify_primitive_maxima(catalog))
    if args.suite in ("golden", "all"):
        reports.append(verify_mod.golden_tables(catalog))
    merged = verify_mod.merge_reports(args.suite, reports)
    if args.format == "json":
        print(merged.to_json())
    else:
        for report in reports:
            print(report.to_text())
            print()
        counts = merged.counts()
        print(
            f"total: {counts['pass']} pass, {counts['discrepancy']} discrepancy, "
            f"{counts['fail']} fail"
        )
    return 0 if merged.passed() else 1


def _cmd_threshold(args, catalog: Catalog) -> int:
    try:
        n0 = threshold(args.char, args.window, catalog)
    except ThresholdNotFoundError as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return 1
    print(f"threshold({args.char}) = {n0}  (window {args.window})")
    if n0 > 1:
        failing = best_pair(n0 - 1, args.char, catalog)
        print(
            f"last failing degree {failing.n}: f = {failing.value} "
            f"~ {sci_string(failing.value, args.sig)}  via {' | '.join(failing.shapes())}"
        )
    return 0


def _cmd_weisfeiler(args, catalog: Catalog) -> int:
    chars = (args.char,) if args.char else verify_mod.DEFAULT_COMPARISON_CHARS
    rows = verify_mod.weisfeiler(args.n_to, chars, catalog)
    if args.format == "json":
        payload = [
            {
                "n": r.n,
                "l": r.ell,
                "value": str(r.value),
                "smooth_bound": str(r.smooth_bound),
                "alpha": None if r.alpha is None else round(r.alpha, 4),
                "dominated": r.dominated,
            }
            for r in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        for r in rows:
            alpha = "     -" if r.alpha is None else f"{r.alpha:6.4f}"
            mark = "ok" if r.dominated else "EXCEEDED"
            print(
                f"n={r.n:<4d} l={r.ell:<3d} f~{sci_string(r.value)!s:>10s} "
                f"bound~{sci_string(r.smooth_bound)!s:>10s} alpha={alpha} {mark}"
            )
        worst = verify_mod.worst_alpha(rows)
        print(
            f"worst alpha: n={worst.n}, l={worst.ell}, alpha={worst.alpha:.4f}"
        )
    return 0 if all(r.dominated for r in rows) else 1


_COMMANDS = {
    "bound": _cmd_bound,
    "table": _cmd_table,
    "primitive": _cmd_primitive,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
    "threshold": _cmd_threshold,
    "weisfeiler": _cmd_weisfeiler,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "char", None) is not None and not is_prime(args.char):
        return _usage_error(f"--char must be prime, got {args.char}")
    if args.sig < 1:
        return _usage_error(f"--sig must be >= 1, got {args.sig}")
    if not 1 <= args.window <= MAX_DEGREE:
        return _usage_error(f"--window must lie in 1..{MAX_DEGREE}")
    try:
        catalog = _get_catalog(args)
        return _COMMANDS[args.command](args, catalog)
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
