#!/usr/bin/env python3
"""
@brief Emit the planar images and surface meshes of the figure parameter sets
@file reproduce_figures.py

Planar images (CSV polylines on circles and rays):
- conformal maps F_c for c in {-2, 0, 1, 2} and F_n for n = 2, 3, 4
- shears f_{c,a} for c in {-2, 0, 2}, a in {-1, 0, 1}
- epicycloid shears f_n with omega = z^n, n = 2, 3, 4

Surface meshes (OBJ by default):
- F_c with omega = z^2 for c in {-2, 0, 1, 2}
- F_c with omega = z^n for c in {0, 1, 2}, n in {4, 6}
- F_2m with omega = z^(2m) for m = 2, 3, 4

@note This script follows Python 3.10+ standards and project guidelines
"""

import argparse
import logging
import sys
import warnings
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from shearlift.analytic_families import ConformalFamily, Dilatation
from shearlift.errors import DegenerateShear, ShearLiftError
from shearlift.mesh import (
    DiskGrid,
    conformal_image,
    export_mesh,
    planar_image,
    planar_image_csv,
    sample_surface,
)
from shearlift.shear_engine import ShearSpec
from shearlift_config import get_config

logger = logging.getLogger("reproduce_figures")


def conformal_families() -> dict[str, ConformalFamily]:
    families = {f"conformal_c{c:+d}": ConformalFamily.fc(c) for c in (-2, 0, 1, 2)}
    families.update({f"conformal_n{n}": ConformalFamily.fn(n) for n in (2, 3, 4)})
    return families


def planar_specs() -> dict[str, ShearSpec]:
    specs = {
        f"shear_c{c:+d}_a{a:+d}": ShearSpec(ConformalFamily.fc(c), Dilatation.mobius(a))
        for c in (-2, 0, 2)
        for a in (-1, 0, 1)
    }
    specs.update(
        {
            f"epicycloid_n{n}": ShearSpec(ConformalFamily.fn(n), Dilatation.power(n))
            for n in (2, 3, 4)
        }
    )
    return specs


def surface_specs() -> dict[str, ShearSpec]:
    specs = {
        f"lift_c{c:+d}_z2": ShearSpec(ConformalFamily.fc(c), Dilatation.mobius(0.0))
        for c in (-2, 0, 1, 2)
    }
    specs.update(
        {
            f"lift_c{c:+d}_z{n}": ShearSpec(ConformalFamily.fc(c), Dilatation.power(n))
            for c in (0, 1, 2)
            for n in (4, 6)
        }
    )
    for m in (2, 3, 4):
        family, dilatation = ConformalFamily.fn(2 * m), Dilatation.power(2 * m)
        specs[f"lift_fn{2 * m}_z{2 * m}"] = ShearSpec(family, dilatation)
    return specs


def emit_planar(out_dir: Path, grid: DiskGrid) -> None:
    for name, family in conformal_families().items():
        text = planar_image_csv(conformal_image(family, grid))
        (out_dir / f"{name}.csv").write_text(text, encoding="utf-8")
        logger.info("wrote %s", name)
    for name, spec in planar_specs().items():
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateShear)
            text = planar_image_csv(planar_image(spec, grid))
        (out_dir / f"{name}.csv").write_text(text, encoding="utf-8")
        logger.info("wrote %s", name)


def emit_surfaces(out_dir: Path, grid: DiskGrid, fmt: str, workers: int | None) -> None:
    for name, spec in surface_specs().items():
        mesh = sample_surface(spec, grid, workers=workers)
        export_mesh(mesh, fmt, out_dir / f"{name}.{fmt}")  # type: ignore[arg-type]
        logger.info("wrote %s (%d vertices)", name, len(mesh.vertices))


def main() -> None:
    """
    @brief Write every figure parameter set into one output directory
    """
    parser = argparse.ArgumentParser(
        description="Reproduce the figure planar images and meshes"
    )
    parser.add_argument("out_dir", type=Path, help="Output directory")
    parser.add_argument("--grid", default="16x64", help="Planar grid as CIRCLESxRAYS")
    parser.add_argument("--mesh-grid", default="24x96", help="Surface grid")
    parser.add_argument("--format", choices=("obj", "csv", "json"), default="obj")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument(
        "--skip-surfaces", action="store_true", help="Only emit planar images"
    )
    args = parser.parse_args()

    logging.basicConfig(
        level=logging.INFO, format="%(levelname)s %(name)s: %(message)s"
    )
    config = get_config()
    try:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        emit_planar(args.out_dir, DiskGrid.parse(args.grid, config.r_max))
        if not args.skip_surfaces:
            surface_grid = DiskGrid.parse(args.mesh_grid, config.lift_r_max)
            emit_surfaces(args.out_dir, surface_grid, args.format, args.workers)
    except (ShearLiftError, OSError) as exc:
        logger.error("figure reproduction failed: %s", exc)
        sys.exit(1)


if __name__ == "__main__":
    main()
