"""Command-line front end: ``ptsolver solve|verify|sweep|dump-config``.

Exit codes: 0 success, 1 verification failed, 2 bad input document,
3 the closed form does not apply and ``--strict`` forbids the oracle fallback.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
import tempfile
from pathlib import Path

from .closed_form import solve_closed_form
from .docfile import dump_document, load_document, preset_names
from .errors import AssumptionViolated, DocumentError, InvalidModel
from .oracle import OracleConfig, maximize_utility, verify
from .sweep import run_sweep

log = logging.getLogger("ptsolver")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ASSUMPTION = 0, 1, 2, 3
CSV_DIGITS = 12

EPILOG = f"""\
DOC is a path to a document or the name of a bundled preset
({', '.join(preset_names())}).

Sweep CSVs have one header row (axis names, requested quantities, status)
and one row per grid point in row-major order.  Numbers are written with
{CSV_DIGITS} significant digits and LF line endings so that output is
byte-identical across runs and worker counts.
"""


def format_number(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return format(float(x), f".{CSV_DIGITS}g")


def table_to_csv(table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_number(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def write_atomic(path: Path, text: str) -> None:
    """Write to a sibling temp file and rename, so no partial file survives."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _oracle_config(doc, args) -> OracleConfig:
    cfg = doc.oracle
    if getattr(args, "grid_step", None) is not None:
        cfg = OracleConfig(args.grid_step, cfg.refine_iters, cfg.search_upper, cfg.use_candidates)
    return cfg


def _print_result(res, scenario, out):
    print(f"B_s* = {res.b_s_star:.10g}", file=out)
    print("outcomes:", file=out)
    for o in res.per_outcome:
        print(f"  alpha={o.alpha:<8.6g} B_l*={o.b_l_star:<14.10g} profit={o.profit:.10g}", file=out)
    print(f"utility = {res.utility:.12g}", file=out)
    print(f"expected profit = {res.expected_profit:.10g}", file=out)
    print(f"min possible profit = {res.min_possible_profit:.10g}", file=out)
    print(f"max possible profit = {res.max_possible_profit:.10g}", file=out)
    print(f"risk-free profit = {scenario.risk_free_profit:.10g}", file=out)
    print(f"provenance: {res.provenance}", file=out)


def _solve(doc, args, solver, out):
    cfg = _oracle_config(doc, args)
    args_model = (doc.scenario, doc.dist, doc.profile, doc.rp)
    if solver == "oracle":
        _print_result(maximize_utility(*args_model, cfg), doc.scenario, out)
        return EXIT_OK
    try:
        closed = solve_closed_form(*args_model)
    except AssumptionViolated as exc:
        if args.strict:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ASSUMPTION
        log.warning("closed form not applicable (%s); using the numeric oracle", exc)
        _print_result(maximize_utility(*args_model, cfg), doc.scenario, out)
        return EXIT_OK
    _print_result(closed, doc.scenario, out)
    if solver == "closed":
        return EXIT_OK
    oracle = maximize_utility(*args_model, cfg)
    step, _ = cfg.resolved(doc.scenario)
    tol = args.tol if args.tol is not None else 2 * step
    report = verify(closed, oracle, tol_bs=tol)
    print(f"oracle B_s* = {oracle.b_s_star:.10g}", file=out)
    print(f"verify: {report.summary()}", file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_solve(args):
    doc = load_document(args.doc)
    return _solve(doc, args, args.solver, sys.stdout)


def cmd_verify(args):
    doc = load_document(args.doc)
    return _solve(doc, args, "both", sys.stdout)


def cmd_sweep(args):
    doc = load_document(args.spec)
    if doc.sweep is None:
        raise DocumentError(f"{args.spec}: document has no [sweep] section")
    table = run_sweep(doc.sweep, workers=args.workers)
    out = Path(args.out)
    write_atomic(out, table_to_csv(table))
    if args.meta:
        write_atomic(out.with_name(out.name + ".meta.json"),
                     json.dumps(table.metadata, indent=2, sort_keys=True) + "\n")
    skipped = sum(1 for r in table.rows if r[-1] != "ok")
    log.info("wrote %d rows to %s (%d not ok)", len(table.rows), out, skipped)
    return EXIT_OK


def cmd_dump_config(args):
    sys.stdout.write(dump_document(load_document(args.doc)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptsolver", description="Sensing/leasing investment solver.",
        epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--grid-step", type=float, help="oracle grid step (default 1e-4 * demand)")
        p.add_argument("--tol", type=float, help="allowed |dB_s| when verifying (default 2 grid steps)")
        p.add_argument("--strict", action="store_true",
                       help="exit 3 instead of falling back to the oracle")

    p = sub.add_parser("solve", help="solve one document")
    p.add_argument("doc")
    p.add_argument("--solver", choices=("closed", "oracle", "both"), default="closed")
    solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="closed form vs oracle; exit 1 on disagreement")
    p.add_argument("doc")
    solver_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run a sweep document and write CSV",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("spec")
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--meta", action="store_true", help="also write <out>.meta.json")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("dump-config", help="print the canonical form of a document")
    p.add_argument("doc")
    p.set_defaults(func=cmd_dump_config)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidModel, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
