"""
Command handlers for the nctorus-curvature CLI
"""

import argparse
import csv
import io
import json
import logging
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ..core import ONE_FORM, SCALAR, get_metric
from ..core.notation import format_term, term_line
from ..curvature import abelianize_grid, compare, density
from ..models import ClassicalReport, ComparisonReport, RunConfig, VerificationReport
from ..rearrange import FEvaluator
from ..reduce_integrals import RadialIntegral, full_reduced_b2
from ..reference import classical_formulas
from ..reference.theorems import ONE_FORM_DENSITY, RICCI
from ..resolvent import compute_b2
from .verification import SUITES, run_suite

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], int]

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

DEFAULT_COMPARE_TOL = 1e-6


# run configuration ------------------------------------------------------


def parse_grid(text: str) -> Tuple[float, float, int]:
    """'start:stop:count', e.g. '-3:3:25'"""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"Invalid grid: {text}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"Invalid grid: {text}") from None


def load_points(path: str) -> List[Tuple[float, ...]]:
    """
    Read a JSON list of points, each an {"s": ..., "t": ...} object or an array.

    Raises:
        ValueError: If the file is missing or not a list of points
    """
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ValueError(f"Invalid point file {path}: {e}") from None
    if not isinstance(data, list):
        raise ValueError(f"Invalid point file {path}: expected a JSON list")
    points = []
    for item in data:
        if isinstance(item, dict):
            values = [item[key] for key in ("s", "t") if key in item]
        elif isinstance(item, list):
            values = item
        else:
            raise ValueError(f"Invalid point {item!r} in {path}")
        points.append(tuple(float(v) for v in values))
    return points


def run_config(args: argparse.Namespace, obj: Optional[str] = None) -> RunConfig:
    """Validated RunConfig from parsed arguments; obj overrides --object"""
    options = {
        key: getattr(args, key)
        for key in ("metric", "object", "output", "format", "seed", "suite", "eps", "stage")
        if getattr(args, key, None) is not None
    }
    if getattr(args, "grid", None):
        options["grid"] = parse_grid(args.grid)
    if getattr(args, "points", None):
        options["points"] = load_points(args.points)
    if obj is not None:
        options["object"] = obj
    return RunConfig(command=args.command, tolerance=getattr(args, "tol", None), **options)


# output -----------------------------------------------------------------


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _number(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.17g}"


def comparison_csv(report: ComparisonReport) -> str:
    rows = []
    for table in report.tables:
        entry = "" if table.entry is None else f"({table.entry[0]},{table.entry[1]})"
        for row in table.rows:
            rows.append(
                [
                    report.metric,
                    report.object,
                    entry,
                    table.prefix,
                    table.basis_word,
                    " ".join(_number(v) for v in row.point),
                    _number(row.engine),
                    _number(row.reference),
                    _number(row.abs_err),
                    _number(row.rel_err),
                ]
            )
    header = ["metric", "object", "entry", "prefix", "basis_word", "point"]
    return _csv(header + ["engine", "reference", "abs_err", "rel_err"], rows)


def verification_csv(report: VerificationReport) -> str:
    rows = [
        [report.suite, c.name, c.passed, _number(c.max_error), c.detail or ""]
        for c in report.checks
    ]
    return _csv(["suite", "name", "passed", "max_error", "detail"], rows)


def classical_csv(report: ClassicalReport) -> str:
    rows = [
        [report.metric, report.object, entry, text, report.expected.get(entry, "")]
        for entry, text in report.engine.items()
    ]
    return _csv(["metric", "object", "entry", "engine", "expected"], rows)


def write_output(text: str, output: Optional[str]) -> None:
    if output is None:
        print(text)
        return
    Path(output).write_text(text if text.endswith("\n") else text + "\n")
    logger.info(f"Wrote {output}")


def emit(report: BaseModel, cfg: RunConfig, to_csv: Callable[..., str]) -> None:
    text = report.model_dump_json(indent=2) if cfg.format == "json" else to_csv(report)
    write_output(text, cfg.output)


def guarded(name: str, action: Callable[[], int]) -> int:
    """Run a command body, mapping ValueError to the usage exit code"""
    try:
        return action()
    except ValueError as e:
        logger.error(f"Failed to run {name}: {e}")
        return EXIT_USAGE


# handlers ---------------------------------------------------------------


def _compare_command(args: argparse.Namespace, obj: str) -> int:
    cfg = run_config(args, obj)
    metric = get_metric(cfg.metric or "")
    report = compare(
        metric,
        cfg.object,
        grid=cfg.grid,
        tol=DEFAULT_COMPARE_TOL if cfg.tolerance is None else cfg.tolerance,
        points=cfg.points,
        f_eval=FEvaluator(),
    )
    emit(report, cfg, comparison_csv)
    return EXIT_PASS if report.passed else EXIT_MISMATCH


def cmd_scalar(args: argparse.Namespace) -> int:
    """Scalar curvature of a metric against its closed form"""
    return guarded("scalar", lambda: _compare_command(args, SCALAR))


def cmd_ricci(args: argparse.Namespace) -> int:
    """Ricci density of a metric against its closed form"""
    return guarded("ricci", lambda: _compare_command(args, RICCI))


def cmd_density(args: argparse.Namespace) -> int:
    """Any curvature object, the 1-form heat density by default"""
    return guarded("density", lambda: _compare_command(args, args.object or ONE_FORM_DENSITY))


def cmd_verify(args: argparse.Namespace) -> int:
    def body() -> int:
        cfg = run_config(args)
        report = run_suite(cfg.suite or "", tol=cfg.tolerance, seed=cfg.seed, eps=cfg.eps)
        emit(report, cfg, verification_csv)
        return EXIT_PASS if report.passed else EXIT_MISMATCH

    return guarded("verify", body)


def _entry_label(i: int, j: int, size: int) -> str:
    return "value" if size == 1 else f"({i + 1},{j + 1})"


def cmd_abelianize(args: argparse.Namespace) -> int:
    def body() -> int:
        cfg = run_config(args)
        metric = get_metric(cfg.metric or "")
        expected = classical_formulas(metric.metric_name, cfg.object)
        engine = abelianize_grid(density(metric, cfg.object), metric)
        size = len(engine)
        labels = [(i, j, _entry_label(i, j, size)) for i in range(size) for j in range(size)]
        report = ClassicalReport(
            metric=metric.metric_name,
            object=cfg.object,
            engine={label: str(engine[i][j]) for i, j, label in labels},
            expected={label: str(expected[i][j]) for i, j, label in labels},
            passed=all(engine[i][j] == expected[i][j] for i, j, _ in labels),
        )
        emit(report, cfg, classical_csv)
        return EXIT_PASS if report.passed else EXIT_MISMATCH

    return guarded("abelianize", body)


def _radial_line(r: RadialIntegral) -> str:
    return format_term(r.coeff, word=r.word, u_power=r.u_power, unicode=False)


def dump_lines(metric_name: str, kind: str, stage: str) -> List[str]:
    """b2 or its radial reduction in printed notation, one term per line"""
    metric = get_metric(metric_name)
    if stage == "b2":
        b2 = compute_b2(metric, kind)
        grid = [
            [[term_line(t) for t in b2[i, j].terms()] for j in range(b2.size)]
            for i in range(b2.size)
        ]
    else:
        grid = [
            [[_radial_line(r) for r in entry] for entry in row]
            for row in full_reduced_b2(metric, kind)
        ]
    lines = []
    for i, row in enumerate(grid):
        for j, entry in enumerate(row):
            if len(grid) > 1:
                lines.append(f"# entry ({i + 1},{j + 1})")
            lines.extend(entry or ["0"])
    return lines


def cmd_dump(args: argparse.Namespace) -> int:
    def body() -> int:
        cfg = run_config(args)
        if cfg.object == RICCI:
            raise ValueError("Invalid object for dump: ricci has no b2 of its own")
        kind = SCALAR if cfg.object == SCALAR else ONE_FORM
        write_output("\n".join(dump_lines(cfg.metric or "", kind, cfg.stage)), cfg.output)
        return EXIT_PASS

    return guarded("dump", body)


# registration -----------------------------------------------------------


def _output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", dest="output", help="Output path (default: stdout)")
    parser.add_argument("--format", choices=("json", "csv"), default="json")


def _comparison_parser(
    subparsers: argparse._SubParsersAction, name: str, handler: Handler, help_text: str
) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, help=help_text)
    parser.add_argument("--metric", required=True, help="conformal3, nonconformal3, conformal2")
    parser.add_argument("--grid", help="start:stop:count, written --grid=-3:3:25")
    parser.add_argument("--points", help="JSON file with a list of {s, t} points")
    parser.add_argument("--tol", type=float, help="Relative tolerance (default 1e-6)")
    parser.add_argument("--seed", type=int, default=7)
    _output_options(parser)
    parser.set_defaults(handler=handler)
    return parser


def register_commands(subparsers: argparse._SubParsersAction) -> None:
    """Register every subcommand with its handler"""
    _comparison_parser(subparsers, "scalar", cmd_scalar, "Scalar curvature against K and H")
    _comparison_parser(subparsers, "ricci", cmd_ricci, "Ricci density against its closed form")
    density_parser = _comparison_parser(
        subparsers, "density", cmd_density, "Any curvature object against its closed form"
    )
    density_parser.add_argument(
        "--object", choices=(SCALAR, ONE_FORM_DENSITY, RICCI), default=ONE_FORM_DENSITY
    )

    verify = subparsers.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--tol", type=float, help="Tolerance (default depends on the suite)")
    verify.add_argument("--seed", type=int, default=7)
    verify.add_argument("--eps", type=float, default=1e-4, help="Distance from the origin")
    _output_options(verify)
    verify.set_defaults(handler=cmd_verify)

    abelian = subparsers.add_parser("abelianize", help="Classical limit against known formulas")
    abelian.add_argument("--metric", required=True)
    abelian.add_argument("--object", choices=(SCALAR, RICCI), default=SCALAR)
    _output_options(abelian)
    abelian.set_defaults(handler=cmd_abelianize)

    dump = subparsers.add_parser("dump", help="Print b2 or its radial reduction")
    dump.add_argument("--metric", required=True)
    dump.add_argument("--object", choices=(SCALAR, ONE_FORM_DENSITY), default=SCALAR)
    dump.add_argument("--stage", choices=("b2", "radial"), default="b2")
    dump.add_argument("--out", dest="output", help="Output path (default: stdout)")
    dump.set_defaults(handler=cmd_dump)
