"""Exact construction of non-crossing alternating paths on red/blue point sets."""

from .errors import AltPathError, InputError, InternalError
from .geom import Color, ColoredPoint, ConvexRegion, DirectedLine, Point, pt
from .io import GenParams, emit_instance, generate, parse_instance, render_svg
from .partition import Partition, chain_partition, plane_partition, triangle_partition
from .paths import AltPath, Instance, closed_cycle, open_path, separated_path, solve, solve_closed
from .verify import ViolationReport, brute_force_path, verify_partition, verify_path

__all__ = [
    "AltPath",
    "AltPathError",
    "Color",
    "ColoredPoint",
    "ConvexRegion",
    "DirectedLine",
    "GenParams",
    "InputError",
    "Instance",
    "InternalError",
    "Partition",
    "Point",
    "ViolationReport",
    "brute_force_path",
    "chain_partition",
    "closed_cycle",
    "emit_instance",
    "generate",
    "open_path",
    "parse_instance",
    "plane_partition",
    "pt",
    "render_svg",
    "separated_path",
    "solve",
    "solve_closed",
    "triangle_partition",
    "verify_partition",
    "verify_path",
]
