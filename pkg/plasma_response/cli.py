"""
Command-line front end.

Subcommands:
- eval: one point, all or one model, text table or JSON
- sweep: 1-D sweep over x or q, CSV to stdout or a file
- figure: preset sweeps of figures 1-5, optional matplotlib plot script
- validate: run a validation suite, exit 0 when it passes and 1 otherwise

Exit status 2 is reserved for invalid flags. Data goes to stdout, diagnostics
to stderr.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from pydantic import ValidationError

from plasma_response.config import settings
from plasma_response.exceptions import DomainError, require_positive
from plasma_response.logging_config import get_logger, setup_logging
from plasma_response.models import DimensionlessQuery, SweepSpec, domain_error_from
from plasma_response.pipeline import FIGURE_COLUMNS, FIGURE_NUMBERS, SweepPipeline, SweepResult, figure_specs
from plasma_response.render import ResultRenderer, plot_script
from plasma_response.response import eval_all
from plasma_response.scales import query_from_physical
from plasma_response.schemas import ResponseModel, Suite, SweepVariable
from plasma_response.validation import run_suite

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

MODEL_CHOICES = [model.value for model in ResponseModel] + ["all"]


def _selected_models(names: Optional[Sequence[str]]) -> List[ResponseModel]:
    if not names or "all" in names:
        return list(ResponseModel)
    return [model for model in ResponseModel if model.value in names]


def _sweep_error(exc: ValidationError) -> DomainError:
    """DomainError for a SweepSpec that failed its checks."""
    first = exc.errors()[0]
    if first.get("loc"):
        return domain_error_from(exc)
    return DomainError("sweep", str(first["msg"]).removeprefix("Value error, "))


# =============================================================================
# PARSER
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.APP_NAME, description=settings.APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    parser.add_argument("--workers", type=int, default=None,
                        help="worker threads for sweeps (default: $PLASMA_RESPONSE_WORKERS or 1)")
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="diagnostic verbosity")
    commands = parser.add_subparsers(dest="command", required=True)

    # eval
    p_eval = commands.add_parser("eval", help="evaluate one point")
    p_eval.add_argument("--q", type=float, help="k / k_F")
    p_eval.add_argument("--x", type=float, help="omega / (k_F v_F)")
    p_eval.add_argument("--y", type=float, help="nu / (k_F v_F)")
    p_eval.add_argument("--xp", type=float, default=None, help="omega_p / (k_F v_F); enables eps")
    p_eval.add_argument("--model", choices=MODEL_CHOICES, default="all")
    p_eval.add_argument("--json", action="store_true", help="JSON records instead of a table")
    p_eval.add_argument("--physical", action="store_true",
                        help="take --omega --nu --k --density (CGS) instead of --q --x --y")
    p_eval.add_argument("--omega", type=float, help="angular frequency, rad/s")
    p_eval.add_argument("--nu", type=float, help="collision frequency, 1/s")
    p_eval.add_argument("--k", type=float, help="wavenumber, 1/cm")
    p_eval.add_argument("--density", type=float, help="electron density, 1/cm^3")

    # sweep
    p_sweep = commands.add_parser("sweep", help="1-D sweep as CSV")
    p_sweep.add_argument("--var", choices=[v.value for v in SweepVariable], required=True)
    p_sweep.add_argument("--from", dest="start", type=float, required=True)
    p_sweep.add_argument("--to", dest="stop", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--log", action="store_true", help="geometric grid")
    p_sweep.add_argument("--q", type=float, default=None)
    p_sweep.add_argument("--x", type=float, default=None)
    p_sweep.add_argument("--y", type=float, default=None)
    p_sweep.add_argument("--xp", type=float, default=None)
    p_sweep.add_argument("--model", choices=MODEL_CHOICES, action="append", default=None,
                         help="repeatable; default all")
    p_sweep.add_argument("--output", default=None, help="CSV path (default stdout)")

    # figure
    p_figure = commands.add_parser("figure", help="figure preset sweeps as CSV")
    p_figure.add_argument("--n", type=int, required=True, help="figure number 1..5")
    p_figure.add_argument("--y", type=float, default=None, help="override the preset y")
    p_figure.add_argument("--points", type=int, default=None)
    p_figure.add_argument("--xp", type=float, default=None)
    p_figure.add_argument("--output", default=None, help="CSV path; one file per curve")
    p_figure.add_argument("--plot-script", default=None, help="write a matplotlib script reading the CSV")

    # validate
    p_validate = commands.add_parser("validate", help="run a validation suite")
    p_validate.add_argument("--suite", choices=[s.value for s in Suite], default=Suite.ALL.value)
    p_validate.add_argument("--tol", type=float, default=None, help="override the suite tolerance")
    p_validate.add_argument("--json", action="store_true")

    return parser


# =============================================================================
# COMMANDS
# =============================================================================

def cmd_eval(args: argparse.Namespace, stream: TextIO) -> int:
    """Evaluate the requested models at one point."""
    if args.physical:
        for flag in ("omega", "nu", "k", "density"):
            if getattr(args, flag) is None:
                raise DomainError(flag, f"--{flag} is required with --physical")
        query = query_from_physical(omega=args.omega, nu=args.nu, k=args.k, N=args.density)
    else:
        for flag in ("q", "x", "y"):
            if getattr(args, flag) is None:
                raise DomainError(flag, f"--{flag} is required")
        require_positive(q=args.q, x=args.x, y=args.y)
        query = DimensionlessQuery.build(q=args.q, x=args.x, y=args.y, x_p=args.xp)

    samples = eval_all(query, _selected_models([args.model]))
    renderer = ResultRenderer(stream)
    if args.json:
        renderer.write_json_records(samples)
    else:
        renderer.write_table(samples)
    return EXIT_OK if any(sample.ok for sample in samples) else EXIT_FAILED


def _sweep_spec_from_args(args: argparse.Namespace) -> SweepSpec:
    fixed = {name: value for name, value in
             (("q", args.q), ("x", args.x), ("y", args.y), ("x_p", args.xp)) if value is not None}
    try:
        return SweepSpec(
            variable=args.var,
            start=args.start,
            stop=args.stop,
            points=args.points,
            log_scale=args.log,
            fixed=fixed,
            models=_selected_models(args.model),
            output=args.output,
        )
    except ValidationError as e:
        raise _sweep_error(e) from e


def _write_csv(result: SweepResult, comments: List[str], output: Optional[str], stream: TextIO) -> None:
    if output is None:
        ResultRenderer(stream).write_csv(result, comments)
        return
    Path(output).parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8", newline="") as handle:
        ResultRenderer(handle).write_csv(result, comments)
    logger.info(f"CSV written to {output}")


def cmd_sweep(args: argparse.Namespace, stream: TextIO) -> int:
    """Run a sweep and write CSV; exit 1 only if every point failed."""
    spec = _sweep_spec_from_args(args)
    result = SweepPipeline(spec, workers=args.workers).run()
    _write_csv(result, ResultRenderer.sweep_comments("sweep", result), spec.output, stream)
    return EXIT_FAILED if result.all_failed else EXIT_OK


def _curve_path(output: str, label: str, multiple: bool) -> str:
    if not multiple:
        return output
    path = Path(output)
    tag = label.replace("=", "")
    return str(path.with_name(f"{path.stem}_{tag}{path.suffix}"))


def cmd_figure(args: argparse.Namespace, stream: TextIO) -> int:
    """
    Figure presets. With --output each curve goes to its own file; on stdout
    the curves are separated by two blank lines (gnuplot data blocks).
    """
    if args.n not in FIGURE_NUMBERS:
        raise DomainError("n", "--n must be one of 1, 2, 3, 4, 5")
    if args.plot_script and not args.output:
        raise DomainError("plot-script", "--plot-script requires --output")
    if args.y is not None:
        require_positive(y=args.y)

    try:
        curves = figure_specs(args.n, y=args.y, points=args.points, x_p=args.xp)
    except ValidationError as e:
        raise _sweep_error(e) from e

    multiple = len(curves) > 1
    paths, labels = [], []
    failed = 0
    for index, (label, spec) in enumerate(curves):
        result = SweepPipeline(spec, workers=args.workers).run()
        failed += int(result.all_failed)
        comments = ResultRenderer.sweep_comments(f"figure {args.n}", result, label)
        if args.output:
            path = _curve_path(args.output, label, multiple)
            _write_csv(result, comments, path, stream)
            paths.append(path)
            labels.append(label)
        else:
            if index:
                stream.write("\n\n")
            _write_csv(result, comments, None, stream)

    if args.plot_script:
        x_label = "q" if curves[0][1].variable == SweepVariable.Q else "x"
        script = plot_script(args.n, paths, labels, FIGURE_COLUMNS[args.n], x_label)
        Path(args.plot_script).parent.mkdir(parents=True, exist_ok=True)
        Path(args.plot_script).write_text(script, encoding="utf-8")
        logger.info(f"Plot script written to {args.plot_script}")

    return EXIT_FAILED if failed == len(curves) else EXIT_OK


def cmd_validate(args: argparse.Namespace, stream: TextIO) -> int:
    """Run a suite and render the report."""
    if args.tol is not None:
        require_positive(tol=args.tol)
    report = run_suite(Suite(args.suite), args.tol)
    renderer = ResultRenderer(stream)
    if args.json:
        renderer.write_report_json(report)
    else:
        renderer.write_report(report)
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "figure": cmd_figure,
    "validate": cmd_validate,
}


def main(argv: Optional[Sequence[str]] = None, stream: Optional[TextIO] = None) -> int:
    """
    Entry point.

    Args:
        argv: arguments without the program name (default sys.argv[1:])
        stream: data stream (default sys.stdout)

    Returns:
        int: 0 success, 1 failed validation or sweep, 2 invalid flags
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(args.log_level)
    stream = stream or sys.stdout

    try:
        settings.validate_config()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.workers is not None and args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args, stream)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
