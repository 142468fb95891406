"""Command-line front end.

Subcommands: order, codegrees, table1, table2, verify, pairwise.  Exit
codes are a stable contract for CI: 0 = success/verified, 1 = verification
failure, 2 = usage or data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .dataset import (Dataset, DatasetError, default_dataset,
                      load_dataset_file, schur_claim_discrepancies)
from .groups import Family, order_of, parse_group_spec
from .verify import (stage_pairwise, table1_rows, table2_rows, verify_all,
                     verify_group, compare_to_reference_table1)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _add_common_flags(parser, top_level: bool):
    # On subparsers the defaults are suppressed so a flag given before the
    # subcommand is not clobbered by the subparser's default.
    kw = {} if top_level else {"default": argparse.SUPPRESS}
    parser.add_argument("--dataset", metavar="PATH",
                        help="dataset JSON file (default: embedded copy)",
                        **({"default": None} if top_level else kw))
    parser.add_argument("--format", choices=("text", "structured"),
                        help="output format",
                        **({"default": "text"} if top_level else kw))
    parser.add_argument("--jobs", type=int, metavar="N",
                        help="parallel workers for verify --all",
                        **({"default": 1} if top_level else kw))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sporadic-verify",
        description="Verify that sporadic simple groups are determined by "
                    "their codegree sets.")
    _add_common_flags(parser, top_level=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_common_flags(p, top_level=False)
        return p

    p = add_parser("order", help="order of a simple group")
    p.add_argument("group", help="ATLAS-style name, e.g. Sz(8), L3(4), M11")

    p = add_parser("codegrees", help="codegree set of a sporadic group")
    p.add_argument("group", help="sporadic group name")

    p = add_parser("table1", help="candidate quotients under a sporadic order")
    p.add_argument("group", help="sporadic group name (bound = its order)")

    add_parser("table2", help="GL(n,p) embedding rows across all groups")

    p = add_parser("verify", help="run the elimination stages")
    p.add_argument("group", nargs="?", help="sporadic group name")
    p.add_argument("--all", action="store_true", help="verify all 26 groups")

    add_parser("pairwise", help="pairwise codegree containment sweep")
    return parser


def _load(args) -> Dataset:
    if args.dataset:
        return load_dataset_file(args.dataset)
    return default_dataset()


def _emit(args, structured: dict, text_lines: list[str]):
    if args.format == "structured":
        print(json.dumps(structured, indent=1))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands

def cmd_order(args, ds: Dataset) -> int:
    gid = parse_group_spec(args.group)
    order = order_of(gid, ds.orders)
    lines = [f"{gid} = {order}"]
    structured = {"group": str(gid), "order": str(order)}
    if gid.family is Family.SPORADIC:
        fac = ds.record(gid.sporadic_name).order_factored
        lines[0] += f" = {fac}"
        structured["order_factored"] = [[p, e] for p, e in fac.factors]
    _emit(args, structured, lines)
    return EXIT_OK


def cmd_codegrees(args, ds: Dataset) -> int:
    rec = ds.record(args.group)
    values = list(rec.codegrees)
    _emit(args, {"group": rec.name, "codegrees": [str(c) for c in values]},
          [f"cod({rec.name}): {len(values)} values"] + [str(c) for c in values])
    return EXIT_OK


def _format_table1_row(row: dict) -> str:
    if row["family"] == "An":
        return f"An: {row['n_min']} <= n <= {row['n_max']}"
    label = row["family"] + (f" n={row['n']}" if row.get("n") is not None else "")
    if not row.get("qs"):
        return f"{label}: present"
    if row.get("exclusions"):
        excl = ", ".join(str(q) for q in row["exclusions"])
        return f"{label}: max q = {row['max_q']}, excluding {excl}"
    if len(row["qs"]) == row["qs"][-1] - row["qs"][0] + 1 or len(row["qs"]) > 4:
        return f"{label}: max q = {row['max_q']}"
    return f"{label}: q in {{{', '.join(str(q) for q in row['qs'])}}}"


def cmd_table1(args, ds: Dataset) -> int:
    rec = ds.record(args.group)
    rows = table1_rows(rec.order)
    lines = [f"simple groups with order dividing |{rec.name}| = {rec.order}"]
    lines += [_format_table1_row(r) for r in rows]
    structured = {"group": rec.name, "rows": rows}
    if rec.name == "M":
        notes = compare_to_reference_table1(rows)
        structured["reference_discrepancies"] = notes
        if notes:
            lines.append("discrepancies against the published table:")
            lines += [f"  {n}" for n in notes]
    _emit(args, structured, lines)
    return EXIT_OK


def cmd_table2(args, ds: Dataset) -> int:
    rows = table2_rows(ds)
    lines = ["group  p  n-range  min faithful degree"]
    for r in rows:
        n_range = (str(r["n_min"]) if r["n_min"] == r["n_max"]
                   else f"{r['n_min']}-{r['n_max']}")
        lines.append(f"{r['group']:<6} {r['p']}  {n_range:<8} {r['min_faithful']}")
    _emit(args, {"rows": rows}, lines)
    return EXIT_OK


def cmd_pairwise(args, ds: Dataset) -> int:
    report = stage_pairwise(ds)
    d = report.details
    lines = [f"pairwise containment: {'PASS' if report.passed else 'FAIL'} "
             f"({d['pairs_checked']} pairs checked)"]
    lines += [f"  cod({c['contained']}) is contained in cod({c['in']})"
              for c in d["counterexamples"]]
    _emit(args, report.to_dict(), lines)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _stage_summary(r: dict) -> str:
    d = r["details"]
    status = "PASS" if r["passed"] else "FAIL"
    if r["stage"] == "quotient":
        extra = (f"{len(d['candidates'])} candidates, "
                 f"max dividing count {d['max_dividing_count']}")
        survivors = [c["candidate"] for c in d["candidates"] if not c["eliminated"]]
        if survivors:
            extra += f"; NOT eliminated: {', '.join(survivors)}"
    elif r["stage"] == "schur":
        extra = d.get("insufficient_data") or f"multiplier {d['schur_multiplier']}"
    else:
        rows = d.get("embedding_rows", [])
        extra = (f"{len(d.get('cases', []))} (p, n) cases, "
                 f"{len(rows)} with an embedding")
        if d.get("insufficient_data"):
            extra = d["insufficient_data"]
    return f"{r['group']:<6} {r['stage']:<13} {status}  ({extra})"


def _verify_worker(job: tuple[str, Optional[str]]) -> list[dict]:
    name, dataset_path = job
    ds = load_dataset_file(dataset_path) if dataset_path else default_dataset()
    return [r.to_dict() for r in verify_group(name, ds)]


def cmd_verify(args, ds: Dataset) -> int:
    if bool(args.group) == bool(args.all):
        raise DatasetError("verify takes a group name or --all (not both)")
    if args.group:
        reports = [r.to_dict() for r in verify_group(args.group, ds)]
        passed = all(r["passed"] for r in reports)
        _emit(args, {"group": args.group, "stages": reports, "passed": passed},
              [_stage_summary(r) for r in reports])
        return EXIT_OK if passed else EXIT_VERIFY_FAILED

    if args.jobs > 1:
        jobs = [(name, args.dataset) for name in ds.records]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            per_group = dict(zip(ds.records, pool.map(_verify_worker, jobs)))
        pairwise = stage_pairwise(ds)
        result = {
            "groups": per_group,
            "pairwise": pairwise.to_dict(),
            "discrepancy_notes": schur_claim_discrepancies(ds),
            "theorem_verified": (pairwise.passed and all(
                r["passed"] for rs in per_group.values() for r in rs)),
        }
    else:
        result = verify_all(ds)

    lines = []
    for name, reports in result["groups"].items():
        lines += [_stage_summary(r) for r in reports]
    pw = result["pairwise"]
    lines.append(f"{'*':<6} {'pairwise':<13} "
                 f"{'PASS' if pw['passed'] else 'FAIL'}  "
                 f"({pw['details']['pairs_checked']} pairs checked)")
    for note in result["discrepancy_notes"]:
        lines.append(f"note: {note}")
    lines.append(f"theorem_verified: {str(result['theorem_verified']).lower()}")
    _emit(args, result, lines)
    return EXIT_OK if result["theorem_verified"] else EXIT_VERIFY_FAILED


def parse_structured_report(text: str) -> dict:
    """Parse and shape-check a structured verify report (round-trip aid)."""
    doc = json.loads(text)
    if "groups" in doc:
        for name, reports in doc["groups"].items():
            for r in reports:
                if not {"group", "stage", "passed", "details"} <= r.keys():
                    raise ValueError(f"malformed stage report for {name}")
        if not isinstance(doc.get("theorem_verified"), bool):
            raise ValueError("missing theorem_verified")
    return doc


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        ds = _load(args)
        handler = {
            "order": cmd_order, "codegrees": cmd_codegrees,
            "table1": cmd_table1, "table2": cmd_table2,
            "verify": cmd_verify, "pairwise": cmd_pairwise,
        }[args.command]
        return handler(args, ds)
    except (DatasetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
