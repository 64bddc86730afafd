#!/usr/bin/env python3
"""
@brief Command-line surface: shear, lift, verify and identify
@file cli.py

Exit codes:
- 0 success
- 1 a check failed, or a computation error
- 2 usage error or invalid parameter
- 3 file I/O failure

Logs go to stderr; stdout and output files carry only results, so
identical arguments give byte-identical output.

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from shearlift import __version__
from shearlift.analytic_families import ConformalFamily, Dilatation
from shearlift.config_validator import validate_config
from shearlift.errors import InvalidParameter, IoFailure, ShearLiftError
from shearlift.geometry_verify import (
    disk_samples,
    identify_surface,
    run_verification,
)
from shearlift.mesh import (
    DiskGrid,
    conformal_image,
    export_mesh,
    planar_image,
    planar_image_csv,
    sample_surface,
)
from shearlift.normalization import CASE_IDS, case_pipeline
from shearlift.quadrature import QuadratureConfig
from shearlift.reports import VerificationReport
from shearlift.shear_engine import ShearSpec
from shearlift_config import get_config, set_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

IDENTIFY_SAMPLES = 500
IDENTIFY_RADIUS = 0.9


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--family", choices=("fc", "fn"), default="fc", help="Conformal family"
    )
    common.add_argument("--c", type=float, default=0.0, help="Fc parameter in [-2, 2]")
    common.add_argument(
        "--a",
        type=float,
        default=None,
        help="Moebius dilatation parameter in [-1, 1] (fc only, default 0)",
    )
    common.add_argument(
        "--n",
        type=int,
        default=None,
        help="Fn index (default 2); with fc, selects the dilatation z^n",
    )
    common.add_argument(
        "--power", type=int, default=None, help="Use the dilatation z^power"
    )
    common.add_argument("--grid", default=None, help="Grid as CIRCLESxRAYS, e.g. 16x64")
    common.add_argument("--rmax", type=float, default=None, help="Outer grid radius")
    common.add_argument("--tol", type=float, default=None, help="Quadrature tolerance")
    common.add_argument(
        "--format", choices=("obj", "csv", "json"), default="obj", help="Mesh format"
    )
    common.add_argument("--out", default=None, help="Output path (stdout by default)")
    common.add_argument("--seed", type=int, default=None, help="Sampling seed")
    common.add_argument("--workers", type=int, default=None, help="Lifting threads")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Logging level for stderr",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    @brief Argument parser with the four subcommands
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="shearlift", description="Harmonic shears and their minimal-graph lifts"
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    shear = commands.add_parser(
        "shear", parents=[common], help="Planar image of circles and rays as CSV"
    )
    shear.add_argument(
        "--conformal",
        action="store_true",
        help="Trace the conformal map F instead of the shear",
    )
    commands.add_parser("lift", parents=[common], help="Lifted minimal surface mesh")
    commands.add_parser("verify", parents=[common], help="Run the verification suite")
    identify = commands.add_parser(
        "identify", parents=[common], help="Run the case pipelines"
    )
    identify.add_argument(
        "--case", type=int, choices=CASE_IDS, default=None, help="Single case id"
    )
    return parser


def family_from_args(args: argparse.Namespace) -> ConformalFamily:
    """
    @brief ConformalFamily from --family, --c and --n
    @throws InvalidParameter for out-of-range values
    """
    if args.family == "fn":
        return ConformalFamily.fn(2 if args.n is None else args.n)
    return ConformalFamily.fc(args.c)


def spec_from_args(args: argparse.Namespace) -> ShearSpec:
    """
    @brief ShearSpec from --family, --c, --a, --n and --power

    With fc, --n and --power both select the dilatation z^n and exclude --a.
    With fn, --n is the family index and the dilatation defaults to z^n.

    @throws InvalidParameter for out-of-range or conflicting values
    """
    family = family_from_args(args)
    if args.family == "fn":
        if args.a is not None:
            raise InvalidParameter("--a applies to --family fc only")
        power = family.n if args.power is None else args.power
        return ShearSpec(family=family, dilatation=Dilatation.power(power))

    if args.n is not None and args.power is not None and args.n != args.power:
        raise InvalidParameter(f"--n {args.n} and --power {args.power} disagree")
    power = args.power if args.power is not None else args.n
    if power is None:
        a = 0.0 if args.a is None else args.a
        return ShearSpec(family=family, dilatation=Dilatation.mobius(a))
    if args.a is not None:
        raise InvalidParameter("--a and a power dilatation are mutually exclusive")
    return ShearSpec(family=family, dilatation=Dilatation.power(power))


def _apply_overrides(args: argparse.Namespace) -> None:
    overrides: dict[str, object] = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.tol is not None:
        overrides["abs_tol"] = args.tol
        overrides["rel_tol"] = args.tol
    config = get_config().with_overrides(**overrides)
    results = validate_config(config)
    if not results["valid"]:
        raise InvalidParameter("; ".join(results["errors"]))
    for warning in results["warnings"]:
        logger.warning(warning)
    set_config(config)


def _grid_from_args(args: argparse.Namespace, default_radius: float) -> DiskGrid:
    settings = get_config().grid_settings
    radius = default_radius if args.rmax is None else args.rmax
    text = args.grid or f"{settings['n_circles']}x{settings['n_rays']}"
    return DiskGrid.parse(text, radius, settings["include_center"])


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {out}: {exc}") from exc


def run_shear(args: argparse.Namespace) -> int:
    grid = _grid_from_args(args, get_config().r_max)
    if args.conformal:
        polylines = conformal_image(family_from_args(args), grid)
    else:
        cfg = QuadratureConfig.from_config()
        polylines = planar_image(spec_from_args(args), grid, cfg)
    _emit(planar_image_csv(polylines), args.out)
    return EXIT_OK


def run_lift(args: argparse.Namespace) -> int:
    if args.out is None:
        raise InvalidParameter("lift needs --out")
    spec = spec_from_args(args)
    grid = _grid_from_args(args, get_config().lift_r_max)
    cfg = QuadratureConfig.from_config()
    mesh = sample_surface(spec, grid, cfg, workers=get_config().workers)
    export_mesh(mesh, args.format, args.out)
    return EXIT_OK


def _finish(report: VerificationReport, out: str | None) -> int:
    _emit(report.to_json() + "\n", out)
    for message in report.warnings:
        logger.warning(message)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def run_verify(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    grid = None
    if args.grid or args.rmax:
        grid = _grid_from_args(args, get_config().lift_r_max)
    return _finish(run_verification(spec, get_config(), grid), args.out)


def run_identify(args: argparse.Namespace) -> int:
    cases = CASE_IDS if args.case is None else (args.case,)
    samples = disk_samples(IDENTIFY_SAMPLES, IDENTIFY_RADIUS, get_config().seed)
    report = VerificationReport(subject="surface identification")
    for case_id in cases:
        report.add(identify_surface(case_id, case_pipeline(case_id), samples))
    return _finish(report, args.out)


HANDLERS = {
    "shear": run_shear,
    "lift": run_lift,
    "verify": run_verify,
    "identify": run_identify,
}


def cli_dispatch(argv: Sequence[str] | None = None) -> int:
    """
    @brief Parse arguments, run one subcommand and map errors to exit codes
    @param argv Arguments without the program name (sys.argv[1:] when None)
    @return Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        _apply_overrides(args)
        return HANDLERS[args.command](args)
    except InvalidParameter as exc:
        logger.error("invalid parameter: %s", exc)
        return EXIT_USAGE
    except IoFailure as exc:
        logger.error("I/O failure: %s", exc)
        return EXIT_IO
    except ShearLiftError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_CHECK_FAILED


def main() -> None:
    sys.exit(cli_dispatch())


__all__ = [
    "build_parser",
    "cli_dispatch",
    "family_from_args",
    "main",
    "spec_from_args",
]
