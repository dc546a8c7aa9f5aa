"""Command-line surface.

Subcommands: classify, enumerate, find-primes, verify, unit, classgroup,
s1s2.  Output is a JSON report document (schema documented in
docs/report-schema.md) or CSV rows for sweeps with --csv.  Exit codes:
0 success, 1 usage error, 2 verification mismatch, 3 oracle range or
precision exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import NotSquarefree, squarefree_range
from .biquad import PrecisionExhausted
from .classify import (
    DEFAULT_ORACLE_LIMIT,
    NotFoundWithinBound,
    OracleRangeExceeded,
    SymbolSpec,
    find_prime_tuple,
    predict,
    verify_against_oracle,
)
from .forms import narrow_class_group, ordinary_class_group, two_sylow
from .quadfield import fundamental_unit, unit_norm
from .redei import narrow_two_elementary, s1_decompositions, s2_decompositions

SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's 2
        raise UsageError(message)


def _document(command: str, inputs: dict, results, mismatches=()) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "mismatches": list(mismatches),
    }


def _emit(doc: dict, out) -> None:
    json.dump(doc, out, indent=2, default=str)
    out.write("\n")


# --- row assembly for sweeps -----------------------------------------------

CSV_COLUMNS = [
    "d",
    "shape",
    "rank_K",
    "rank_Kprime",
    "rank_K1",
    "structure_K",
    "structure_Kprime",
    "structure_K1",
    "provenance",
    "oracle_status",
]


def _structure_str(claim) -> str:
    if claim is None:
        return ""
    return "+".join(f"Z/{f}" for f in claim.value.factors)


def _row_for(d: int, do_verify: bool, oracle_limit: int) -> dict:
    report = predict(d)
    provenance = []
    if report.rank_pattern is not None:
        provenance.append(f"rank pattern ({report.rank_pattern})")
    if report.structure_K is not None:
        provenance.append(report.structure_K.source)
    status = "skipped"
    mismatches = []
    findings = []
    if do_verify:
        try:
            comparison = verify_against_oracle(d, oracle_limit)
            status = "ok" if comparison.ok else "mismatch"
            mismatches = [c.to_json() for c in comparison.mismatches]
            findings = list(comparison.findings)
        except OracleRangeExceeded:
            status = "out-of-range"
    return {
        "findings": findings,
        "row": {
            "d": report.d,
            "shape": "" if report.shape is None else ",".join(report.shape.pattern),
            "rank_K": report.rank_K.value,
            "rank_Kprime": report.rank_Kprime.value,
            "rank_K1": report.rank_K1.value,
            "structure_K": _structure_str(report.structure_K),
            "structure_Kprime": _structure_str(report.structure_Kprime),
            "structure_K1": _structure_str(report.structure_K1),
            "provenance": "; ".join(provenance),
            "oracle_status": status,
        },
        "report": report.to_json(),
        "mismatches": mismatches,
    }


def _row_worker(args) -> dict:
    d, do_verify, oracle_limit = args
    return _row_for(d, do_verify, oracle_limit)


def _map_rows(ds, do_verify, oracle_limit, threads):
    work = [(d, do_verify, oracle_limit) for d in ds]
    if threads <= 1:
        return [_row_worker(w) for w in work]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_row_worker, work, chunksize=32))


# --- subcommands ------------------------------------------------------------


def _cmd_classify(args, out) -> int:
    report = predict(args.d)
    mismatches = []
    results = {"report": report.to_json()}
    code = 0
    if args.verify:
        comparison = verify_against_oracle(args.d, args.oracle_limit)
        results["oracle"] = comparison.to_json()
        mismatches = [c.to_json() for c in comparison.mismatches]
        if mismatches:
            code = 2
    _emit(
        _document("classify", {"d": args.d, "verify": args.verify}, results, mismatches),
        out,
    )
    return code


def _cmd_enumerate(args, out) -> int:
    if args.max <= args.min:
        raise UsageError("--max must exceed --min")
    ds = [
        fs.value
        for fs in squarefree_range(max(args.min, 3), args.max)
        if fs.value % 2 == 1
    ]
    rows = _map_rows(ds, args.verify, args.oracle_limit, args.threads)
    if args.shape:
        rows = [r for r in rows if r["row"]["shape"] == args.shape]
    mismatches = [m for r in rows for m in r["mismatches"]]
    if args.csv:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for r in rows:
            writer.writerow(r["row"])
    else:
        doc = _document(
            "enumerate",
            {
                "min": args.min,
                "max": args.max,
                "shape": args.shape,
                "verify": args.verify,
            },
            [r["row"] for r in rows],
            mismatches,
        )
        _emit(doc, out)
    return 2 if mismatches else 0


def _parse_symbols(text: str) -> dict:
    symbols = {}
    if not text:
        return symbols
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            indices, value = part.split("=")
            k, j = (int(x) for x in indices.split(","))
            symbols[(k, j)] = int(value)
        except ValueError as exc:
            raise UsageError(f"bad symbol constraint {part!r}") from exc
    return symbols


def _cmd_find_primes(args, out) -> int:
    residues = tuple(int(x) for x in args.mod8.split(","))
    try:
        spec = SymbolSpec.of(residues, _parse_symbols(args.symbols))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    primes = find_prime_tuple(spec, args.bound)
    doc = _document(
        "find-primes",
        {"mod8": list(residues), "symbols": args.symbols, "bound": args.bound},
        {"primes": primes, "verified": True},
    )
    _emit(doc, out)
    return 0


def _cmd_verify(args, out) -> int:
    ds = [
        fs.value
        for fs in squarefree_range(max(args.min, 3), args.max)
        if fs.value % 2 == 1
    ]
    rows = _map_rows(ds, True, args.oracle_limit, args.threads)
    mismatches = [
        {"d": r["row"]["d"], "checks": r["mismatches"]}
        for r in rows
        if r["mismatches"]
    ]
    checked = sum(1 for r in rows if r["row"]["oracle_status"] == "ok")
    doc = _document(
        "verify",
        {"min": args.min, "max": args.max, "oracle_limit": args.oracle_limit},
        {
            "fields": len(rows),
            "verified_ok": checked,
            "out_of_range": sum(
                1 for r in rows if r["row"]["oracle_status"] == "out-of-range"
            ),
            "findings": [
                {"d": r["row"]["d"], "findings": r["findings"]}
                for r in rows
                if r["findings"]
            ],
        },
        mismatches,
    )
    _emit(doc, out)
    return 2 if mismatches else 0


def _cmd_unit(args, out) -> int:
    fu = fundamental_unit(args.d)
    doc = _document(
        "unit",
        {"d": args.d},
        {
            "a": str(fu.value.a),
            "b": str(fu.value.b),
            "norm": fu.norm,
            "cf_period": fu.cf_period,
        },
    )
    _emit(doc, out)
    return 0


def _cmd_classgroup(args, out) -> int:
    if args.ordinary:
        D = args.D
        d = D if D % 4 == 1 else D // 4
        grp = ordinary_class_group(D, unit_norm(d))
    else:
        grp = narrow_class_group(args.D)
    doc = _document(
        "classgroup",
        {"D": args.D, "variant": grp.variant},
        {
            "order": grp.order,
            "structure": list(grp.structure),
            "two_sylow": list(two_sylow(grp).factors),
            "classes": [list(f) for f in grp.classes],
        },
    )
    _emit(doc, out)
    return 0


def _cmd_s1s2(args, out) -> int:
    s1 = s1_decompositions(args.D)
    s2 = s2_decompositions(args.D)
    doc = _document(
        "s1s2",
        {"D": args.D},
        {
            "S1": [list(dec.as_pair()) for dec in s1],
            "S2": [list(dec.as_pair()) for dec in s2],
            "count_S1": len(s1),
            "count_S2": len(s2),
            "narrow_two_elementary": narrow_two_elementary(args.D),
        },
    )
    _emit(doc, out)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="twoclass", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="prediction report for one odd square-free d")
    p.add_argument("d", type=int)
    p.add_argument("--verify", action="store_true", help="replay against the oracle")
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="sweep odd square-free d in a range")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--shape", help='pattern filter such as "p,p,q,q"')
    p.add_argument("--csv", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("find-primes", help="prime tuple with prescribed symbols")
    p.add_argument("--mod8", required=True, help="comma list of residues mod 8")
    p.add_argument(
        "--symbols", default="", help='semicolon list "k,j=1" or "k,j=-1" (j < k)'
    )
    p.add_argument("--bound", type=int, default=10**6)
    p.set_defaults(func=_cmd_find_primes)

    p = sub.add_parser("verify", help="oracle-verify predictions over a range")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=20000)
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("unit", help="fundamental unit of Q(sqrt(d))")
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_unit)

    p = sub.add_parser("classgroup", help="form class group of a discriminant")
    p.add_argument("D", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--narrow", action="store_true", default=True)
    group.add_argument("--ordinary", action="store_true")
    p.set_defaults(func=_cmd_classgroup)

    p = sub.add_parser("s1s2", help="Redei-Reichardt splitting sets of D")
    p.add_argument("D", type=int)
    p.set_defaults(func=_cmd_s1s2)

    return parser


def run(argv: list[str], out=None) -> int:
    """Execute a command line; returns the exit code, never raises."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (OracleRangeExceeded, PrecisionExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NotSquarefree, NotFoundWithinBound, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
