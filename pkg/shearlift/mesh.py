#!/usr/bin/env python3
"""
@brief Polar disk grids, lifted surface meshes and their file formats
@file mesh.py

Grids follow the figure convention of equally spaced concentric circles
and radial rays. Nodes are ordered ring-major (center first when
included), and that ordering fixes vertex indices in every export.

Planar images trace the same circles and rays under a shear f or under
the conformal map F alone.

Lifting runs over a thread pool in fixed-size chunks; results are
reassembled in chunk order, so vertices never depend on the worker count.

Formats:
- OBJ: "v x y z" lines, then "f ..." lines with 1-based indices
- CSV: header x1,x2,x3,re_z,im_z, one row per vertex
- JSON: {spec, grid, vertices, parameters, faces, provenance}

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Literal

import numpy as np
import numpy.typing as npt

from shearlift.analytic_families import (
    ComplexArray,
    ConformalFamily,
    conformal_map,
    sqrt_dilatation,
)
from shearlift.errors import InvalidParameter, IoFailure, QuadratureFailure
from shearlift.quadrature import QuadratureConfig
from shearlift.shear_engine import (
    HarmonicShear,
    ShearSpec,
    build_shear,
    shear_numeric,
)
from shearlift.we_lift import lift_numeric
from shearlift_config import get_config

logger = logging.getLogger(__name__)

ExportFormat = Literal["obj", "csv", "json"]
Face = tuple[int, ...]


@dataclass(frozen=True)
class DiskGrid:
    """
    @brief Concentric circles r_i = r_max i / n_circles crossed by n_rays rays
    """

    n_circles: int
    n_rays: int
    r_max: float
    include_center: bool = True

    def __post_init__(self) -> None:
        if self.n_circles < 1:
            raise InvalidParameter(f"n_circles must be >= 1, got {self.n_circles}")
        if self.n_rays < 3:
            raise InvalidParameter(f"n_rays must be >= 3, got {self.n_rays}")
        if not 0.0 < self.r_max < 1.0:
            raise InvalidParameter(f"r_max must lie in (0, 1), got {self.r_max}")

    @property
    def node_count(self) -> int:
        return self.n_circles * self.n_rays + (1 if self.include_center else 0)

    def index(self, ring: int, ray: int) -> int:
        """Node index of ring (1-based) and ray (0-based, taken mod n_rays)"""
        offset = 1 if self.include_center else 0
        return offset + (ring - 1) * self.n_rays + ray % self.n_rays

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def parse(cls, text: str, r_max: float, include_center: bool = True) -> DiskGrid:
        """
        @brief Build a grid from "CxR" (circles x rays)
        @throws InvalidParameter on malformed text
        """
        circles, sep, rays = text.lower().partition("x")
        if not sep or not circles.strip().isdigit() or not rays.strip().isdigit():
            raise InvalidParameter(f"grid must look like 16x64, got {text!r}")
        return cls(int(circles), int(rays), r_max, include_center)


def make_grid(grid: DiskGrid) -> ComplexArray:
    """
    @brief Grid nodes in ring-major order
    @param grid Grid description
    @return Complex array of grid.node_count points
    """
    rings = grid.r_max * np.arange(1, grid.n_circles + 1) / grid.n_circles
    angles = 2.0 * np.pi * np.arange(grid.n_rays) / grid.n_rays
    nodes = (rings[:, None] * np.exp(1j * angles)[None, :]).ravel()
    if grid.include_center:
        nodes = np.concatenate([np.zeros(1, dtype=np.complex128), nodes])
    return nodes


def grid_faces(grid: DiskGrid) -> list[Face]:
    """
    @brief Center fan triangles and quads between consecutive rings
    """
    faces: list[Face] = []
    if grid.include_center:
        faces.extend(
            (0, grid.index(1, j), grid.index(1, j + 1)) for j in range(grid.n_rays)
        )
    for ring in range(1, grid.n_circles):
        for j in range(grid.n_rays):
            faces.append(
                (
                    grid.index(ring, j),
                    grid.index(ring, j + 1),
                    grid.index(ring + 1, j + 1),
                    grid.index(ring + 1, j),
                )
            )
    return faces


@dataclass(eq=False)
class SurfaceMesh:
    """
    @brief Lifted grid: vertices (N, 3), source parameters (N,), faces
    """

    vertices: npt.NDArray[np.float64]
    parameters: ComplexArray
    faces: list[Face]
    grid: DiskGrid
    spec: ShearSpec
    provenance: str = "quadrature"

    def __post_init__(self) -> None:
        count = len(self.vertices)
        if len(self.parameters) != count:
            raise InvalidParameter("vertex and parameter counts differ")
        for face in self.faces:
            if max(face) >= count or min(face) < 0:
                raise InvalidParameter(f"face {face} references a missing vertex")

    def edges(self) -> set[tuple[int, int]]:
        found: set[tuple[int, int]] = set()
        for face in self.faces:
            for first, second in zip(face, face[1:] + face[:1], strict=True):
                found.add((min(first, second), max(first, second)))
        return found

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges()) + len(self.faces)

    def same_as(self, other: SurfaceMesh) -> bool:
        """Bit-exact comparison of geometry, topology and provenance"""
        return (
            np.array_equal(self.vertices, other.vertices)
            and np.array_equal(self.parameters, other.parameters)
            and self.faces == other.faces
            and self.grid == other.grid
            and self.spec == other.spec
            and self.provenance == other.provenance
        )


def _lift_chunk(
    shear: HarmonicShear, start: int, chunk: ComplexArray, cfg: QuadratureConfig
) -> npt.NDArray[np.float64]:
    try:
        return lift_numeric(shear, chunk, cfg).as_array()
    except QuadratureFailure as exc:
        raise QuadratureFailure(
            f"lifting nodes {start}..{start + chunk.size - 1} "
            f"(first z={complex(chunk[0])}) failed: {exc}"
        ) from exc


def sample_surface(
    spec: ShearSpec,
    grid: DiskGrid,
    cfg: QuadratureConfig | None = None,
    workers: int | None = None,
    chunk_size: int | None = None,
) -> SurfaceMesh:
    """
    @brief Lift every grid node and assemble the mesh
    @param spec Shear problem with a square dilatation
    @param grid Grid description
    @param cfg Quadrature configuration
    @param workers Thread count, defaults to the configured worker count
    @param chunk_size Nodes per task
    @return SurfaceMesh
    @throws NotASquare before any work when the dilatation is not a square
    @throws QuadratureFailure naming the failing node range
    """
    settings = get_config()
    sqrt_dilatation(spec.dilatation)
    cfg = QuadratureConfig.from_config() if cfg is None else cfg
    workers = settings.worker_count if workers is None else max(1, workers)
    chunk_size = settings.chunk_size if chunk_size is None else chunk_size
    if chunk_size < 1:
        raise InvalidParameter(f"chunk_size must be >= 1, got {chunk_size}")

    shear = shear_numeric(spec, cfg)
    nodes = make_grid(grid)
    starts = list(range(0, nodes.size, chunk_size))
    chunks = [nodes[start : start + chunk_size] for start in starts]
    logger.info(
        "lifting %d nodes of %s in %d chunks on %d workers",
        nodes.size,
        spec.label,
        len(chunks),
        workers,
    )
    with ThreadPoolExecutor(max_workers=workers) as executor:
        pieces = list(
            executor.map(
                lambda start, chunk: _lift_chunk(shear, start, chunk, cfg),
                starts,
                chunks,
            )
        )
    vertices = np.concatenate(pieces, axis=0) if pieces else np.zeros((0, 3))
    return SurfaceMesh(
        vertices=vertices,
        parameters=nodes,
        faces=grid_faces(grid),
        grid=grid,
        spec=spec,
        provenance=shear.provenance,
    )


def _grid_polylines(
    grid: DiskGrid, evaluate: Callable[[ComplexArray], ComplexArray], samples: int
) -> list[dict[str, Any]]:
    rings = grid.r_max * np.arange(1, grid.n_circles + 1) / grid.n_circles
    angles = 2.0 * np.pi * np.arange(grid.n_rays) / grid.n_rays
    theta = 2.0 * np.pi * np.arange(samples + 1) / samples
    radius = grid.r_max * np.linspace(0.0, 1.0, samples + 1)

    curves: list[tuple[str, int, ComplexArray]] = []
    curves.extend(("circle", i, r * np.exp(1j * theta)) for i, r in enumerate(rings))
    curves.extend(
        ("ray", j, radius * np.exp(1j * angle)) for j, angle in enumerate(angles)
    )
    points = np.concatenate([z for _, _, z in curves])
    image = evaluate(points)

    polylines: list[dict[str, Any]] = []
    offset = 0
    for kind, index, z in curves:
        f = image[offset : offset + z.size]
        polylines.append({"kind": kind, "index": index, "z": z, "f": f})
        offset += z.size
    return polylines


def planar_image(
    spec: ShearSpec,
    grid: DiskGrid,
    cfg: QuadratureConfig | None = None,
    samples: int = 256,
) -> list[dict[str, Any]]:
    """
    @brief Images of the grid circles and rays under f
    @param spec Shear problem (any dilatation)
    @param grid Grid giving circle radii and ray angles
    @param cfg Quadrature configuration for shears without a closed form
    @param samples Points per polyline
    @return Polylines as dicts with kind, index, z and f arrays
    """
    return _grid_polylines(grid, build_shear(spec, cfg), samples)


def conformal_image(
    family: ConformalFamily, grid: DiskGrid, samples: int = 256
) -> list[dict[str, Any]]:
    """Images of the grid circles and rays under the conformal map F itself"""
    return _grid_polylines(grid, conformal_map(family), samples)


def planar_image_csv(polylines: list[dict[str, Any]]) -> str:
    """Polylines as CSV rows: kind, index, point, re_z, im_z, u, v"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["kind", "index", "point", "re_z", "im_z", "u", "v"])
    for curve in polylines:
        pairs = zip(curve["z"].tolist(), curve["f"].tolist(), strict=True)
        for point, (z, f) in enumerate(pairs):
            values = [repr(z.real), repr(z.imag), repr(f.real), repr(f.imag)]
            writer.writerow([curve["kind"], curve["index"], point, *values])
    return buffer.getvalue()


def _write_obj(mesh: SurfaceMesh, handle: Any) -> None:
    handle.write(f"# {mesh.spec.label}\n")
    handle.write(f"# vertices: {len(mesh.vertices)}, faces: {len(mesh.faces)}\n")
    for x1, x2, x3 in mesh.vertices.tolist():
        handle.write(f"v {x1!r} {x2!r} {x3!r}\n")
    for face in mesh.faces:
        handle.write("f " + " ".join(str(index + 1) for index in face) + "\n")


def _write_csv(mesh: SurfaceMesh, handle: Any) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(["x1", "x2", "x3", "re_z", "im_z"])
    rows = zip(mesh.vertices.tolist(), mesh.parameters.tolist(), strict=True)
    for (x1, x2, x3), z in rows:
        writer.writerow([repr(x1), repr(x2), repr(x3), repr(z.real), repr(z.imag)])


def mesh_to_dict(mesh: SurfaceMesh) -> dict[str, Any]:
    return {
        "spec": mesh.spec.to_dict(),
        "grid": mesh.grid.to_dict(),
        "vertices": mesh.vertices.tolist(),
        "parameters": [[z.real, z.imag] for z in mesh.parameters.tolist()],
        "faces": [list(face) for face in mesh.faces],
        "provenance": mesh.provenance,
    }


def _write_json(mesh: SurfaceMesh, handle: Any) -> None:
    handle.write(json.dumps(mesh_to_dict(mesh), sort_keys=True) + "\n")


def export_mesh(mesh: SurfaceMesh, fmt: ExportFormat, path: str | Path) -> Path:
    """
    @brief Write a mesh as OBJ, CSV or JSON
    @param mesh Mesh to write
    @param fmt "obj", "csv" or "json"
    @param path Destination file
    @return Path written
    @throws IoFailure when the file cannot be written
    """
    writers = {"obj": _write_obj, "csv": _write_csv, "json": _write_json}
    if fmt not in writers:
        raise InvalidParameter(
            f"unknown export format {fmt!r}; expected one of {sorted(writers)}"
        )
    target = Path(path)
    try:
        with target.open("w", encoding="utf-8", newline="") as handle:
            writers[fmt](mesh, handle)
    except OSError as exc:
        raise IoFailure(f"cannot write {target}: {exc}") from exc
    logger.info("wrote %s mesh with %d vertices to %s", fmt, len(mesh.vertices), target)
    return target


def import_mesh(path: str | Path) -> SurfaceMesh:
    """
    @brief Read a mesh written by export_mesh in JSON format
    @throws IoFailure when the file cannot be read or parsed
    """
    source = Path(path)
    try:
        data = json.loads(source.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise IoFailure(f"cannot read mesh from {source}: {exc}") from exc
    try:
        parameters = np.array(
            [complex(re, im) for re, im in data["parameters"]], dtype=np.complex128
        )
        return SurfaceMesh(
            vertices=np.asarray(data["vertices"], dtype=np.float64).reshape(-1, 3),
            parameters=parameters,
            faces=[tuple(face) for face in data["faces"]],
            grid=DiskGrid(**data["grid"]),
            spec=ShearSpec.from_dict(data["spec"]),
            provenance=data["provenance"],
        )
    except (KeyError, TypeError) as exc:
        raise IoFailure(f"{source} is not a mesh document: {exc}") from exc


__all__ = [
    "DiskGrid",
    "ExportFormat",
    "SurfaceMesh",
    "conformal_image",
    "export_mesh",
    "grid_faces",
    "import_mesh",
    "make_grid",
    "mesh_to_dict",
    "planar_image",
    "planar_image_csv",
    "sample_surface",
]
