"""Command line: ``compile`` one Schubert form, or ``sweep`` a grid into a JSONL catalog."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

from .core import SchubertForm
from .errors import EXIT_CODES, INVALID_INPUT, PipelineError
from .pipeline import PipelineReport, compile_form, resolve_convention
from .svg import render_svg

LOG_ENV = "ELEVEN_KNOTS_LOG"

log = logging.getLogger("eleven_knots")


def configure_logging() -> None:
    level = os.environ.get(LOG_ENV, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _dumps(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def format_text(report: PipelineReport) -> str:
    """Human-readable summary of a report."""
    lines = [f"{report.form}  status: {report.status}"]
    if report.error:
        lines.append(f"  error: {report.error['message']}")
    if report.folded is not None:
        fm = report.folded
        lines.append(f"  folded measure: {fm.descriptor} {fm.weights[:5]}  n = {fm.n}")
        lines.append(f"  centers {fm.center_names}: {fm.centers}")
        lines.append(f"  basepoints (y1,y2,x1,y3,y4,x2): {fm.basepoints.as_tuple()}  L = {fm.basepoints.L}")
    if report.phi is not None:
        lines.append(f"  phi = {report.phi}")
        lines.append(f"  psi = {report.psi}")
    if report.bridge is not None:
        lines.append("  bridge sequence: (" + ",".join(map(str, report.bridge)) + ")")
    d = report.diagram
    if d is not None:
        lines.append(f"  alpha = {d.alpha}")
        if report.include_stages and d.stages:
            for i, s in enumerate(d.stages):
                lines.append(f"  beta_{i} = {s}")
        lines.append(f"  beta = {d.beta}")
    if report.oracle is not None:
        o = report.oracle
        lines.append(f"  oracle: {'pass' if o.passed else 'FAIL'}  homology {o.homology}")
    if report.alpha_beta is not None:
        lines.append(f"  |alpha n beta| = {report.alpha_beta}")
    if report.alexander is not None:
        lines.append(f"  Alexander polynomial: {report.alexander}")
    if report.inums is not None:
        lines.append(f"  intersection numbers (a,b,c,d): {report.inums.as_tuple()}")
    if report.hs is not None:
        lines.append(f"  {report.hs}  {report.rasmussen}  {report.cm}  (case {report.hs_case})")
    return "\n".join(lines) + "\n"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_compile(args: argparse.Namespace) -> int:
    try:
        form = SchubertForm.parse(args.schubert)
    except PipelineError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code
    conv = resolve_convention(args.calibrated)
    report = compile_form(form, conv, stages=args.stages)
    if args.emit == "json":
        text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    elif args.emit == "svg":
        if report.diagram is None:
            print(f"error: no diagram to draw ({report.status}): {report.error['message']}", file=sys.stderr)
            return report.exit_code
        text = render_svg(report)
    else:
        text = format_text(report)
    try:
        _write(text, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_CODES[INVALID_INPUT]
    if report.error:
        print(f"{report.status}: {report.error['message']}", file=sys.stderr)
    return report.exit_code


def sweep_record(report: PipelineReport) -> dict:
    """Catalog record: status, diagnostics and invariants, without the involution tables."""
    full = report.to_dict(tables=False)
    keep = ("schema_version", "schubert", "convention", "status", "error", "bridge_x2", "alpha_x2",
            "beta_x2", "alpha_beta", "alexander", "inums", "hs_case", "track", "hs", "rasmussen", "cm")
    rec = {k: full[k] for k in keep if k in full}
    if "folded" in full:
        rec["n"] = full["folded"]["n"]
    if "oracle" in full:
        rec["oracle_passed"] = full["oracle"]["passed"]
    return rec


def sweep_grid(r_max: int, s_max: int, t_max: int, rho_abs_max: int) -> Iterator[tuple[int, int, int, int]]:
    """Tuples in lexicographic order."""
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            for t in range(t_max + 1):
                for rho in range(-rho_abs_max, rho_abs_max + 1):
                    yield (r, s, t, rho)


def _sweep_line(job: tuple) -> str:
    tup, calibrated = job
    report = compile_form(SchubertForm(*tup), resolve_convention(calibrated))
    return _dumps(sweep_record(report)) + "\n"


def run_sweep(tuples: Sequence[tuple], jobs: int = 1, calibrated: bool = False) -> Iterator[str]:
    """Catalog lines in input order, computed serially or by a process pool."""
    work = [(t, calibrated) for t in tuples]
    if jobs <= 1:
        yield from map(_sweep_line, work)
        return
    chunk = max(1, len(work) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_sweep_line, work, chunksize=chunk)


def cmd_sweep(args: argparse.Namespace) -> int:
    bounds = (args.r_max, args.s_max, args.t_max, args.rho_abs_max)
    if min(bounds) < 0 or args.jobs < 1:
        print("error: bounds must be non-negative and --jobs at least 1", file=sys.stderr)
        return EXIT_CODES[INVALID_INPUT]
    try:
        fh = open(args.out, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_CODES[INVALID_INPUT]
    tuples = list(sweep_grid(*bounds))
    counts: dict[str, int] = {}
    with fh:
        for line in run_sweep(tuples, args.jobs, args.calibrated):
            fh.write(line)
            status = json.loads(line)["status"]
            counts[status] = counts.get(status, 0) + 1
    log.info("sweep of %d tuples: %s", len(tuples), counts)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eleven-knots",
                                     description="Compile Schubert forms of (1,1) knots into Heegaard diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compile", help="compile one Schubert form")
    c.add_argument("--schubert", required=True, metavar="r,s,t,rho")
    c.add_argument("--emit", choices=("json", "text", "svg"), default="text")
    c.add_argument("--out", metavar="PATH")
    c.add_argument("--stages", action="store_true", help="include every intermediate beta_i")
    c.add_argument("--calibrated", action="store_true", help="use the calibrated center convention")
    c.set_defaults(func=cmd_compile)

    s = sub.add_parser("sweep", help="compile a grid of forms into a JSONL catalog")
    s.add_argument("--r-max", type=int, required=True)
    s.add_argument("--s-max", type=int, required=True)
    s.add_argument("--t-max", type=int, required=True)
    s.add_argument("--rho-abs-max", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--calibrated", action="store_true")
    s.add_argument("--out", required=True, metavar="FILE")
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; keep --help at 0
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
