"""Text formats, the seeded instance generator and SVG rendering.

Instance, path and partition files are JSON. Coordinates are written as
exact rational strings ("3", "-7/2"); on input decimals such as "0.25" and
plain JSON numbers are accepted and converted exactly. Point ids are the
positions in the ``red`` list followed by those in the ``blue`` list.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Any, Optional

from .errors import GenerationFailed, HypothesisViolated, ParseError, UnknownId
from .geom import (
    Color,
    ConvexRegion,
    Location,
    Point,
    collinear_with_any_pair,
    coord,
    format_coord,
    hull_vertices,
    region_contains,
    region_intersection,
)
from .partition import Partition
from .paths import AltPath, Instance, validate_instance

FORMAT_VERSION = 1


# ---------------------------------------------------------------------------
# parsing helpers


def _load(text: str) -> Any:
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None


def _coord_at(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, str, Decimal)):
        raise ParseError("coordinate must be a number or a rational string", where=where)
    try:
        return coord(str(value) if isinstance(value, Decimal) else value)
    except (ValueError, ZeroDivisionError, ArithmeticError):
        raise ParseError(f"bad coordinate {value!r}", where=where) from None


def _point_at(value, where: str) -> Point:
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError("point must be a two-element list", where=where)
    return Point(_coord_at(value[0], f"{where}[0]"), _coord_at(value[1], f"{where}[1]"))


def _int_at(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError("expected an integer", where=where)
    return value


def _list_at(doc: dict, key: str) -> list:
    if key not in doc:
        raise ParseError(f"missing field {key!r}", where="$")
    value = doc[key]
    if not isinstance(value, list):
        raise ParseError("expected a list", where=f"$.{key}")
    return value


def _check_version(doc) -> None:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", where="$")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported version {version!r}", where="$.version")


def _point_text(p: Point) -> str:
    return json.dumps([format_coord(p.x), format_coord(p.y)])


def _point_block(points) -> str:
    if not points:
        return "[]"
    return "[\n" + ",\n".join("    " + _point_text(p) for p in points) + "\n  ]"


# ---------------------------------------------------------------------------
# instances


def parse_instance(text: str) -> Instance:
    doc = _load(text)
    _check_version(doc)
    red = [_point_at(v, f"$.red[{i}]") for i, v in enumerate(_list_at(doc, "red"))]
    blue = [_point_at(v, f"$.blue[{i}]") for i, v in enumerate(_list_at(doc, "blue"))]
    polygon = [_int_at(v, f"$.polygon[{i}]") for i, v in enumerate(_list_at(doc, "polygon"))]
    seed = doc.get("seed")
    if seed is not None:
        seed = _int_at(seed, "$.seed")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object", where="$.metadata")
    inst = Instance.from_coords(red, blue, polygon, seed=seed, metadata=metadata)
    validate_instance(inst)
    return inst


def emit_instance(inst: Instance) -> str:
    parts = [
        f'  "version": {FORMAT_VERSION}',
        '  "red": ' + _point_block([p.point for p in inst.red]),
        '  "blue": ' + _point_block([p.point for p in inst.blue]),
        '  "polygon": ' + json.dumps(list(inst.polygon)),
    ]
    if inst.seed is not None:
        parts.append(f'  "seed": {inst.seed}')
    if inst.metadata:
        parts.append('  "metadata": ' + json.dumps(inst.metadata, sort_keys=True, default=str))
    return "{\n" + ",\n".join(parts) + "\n}\n"


# ---------------------------------------------------------------------------
# paths and partitions


def emit_path(path: AltPath) -> str:
    return json.dumps({"version": FORMAT_VERSION, "closed": path.closed, "order": list(path.order)}) + "\n"


def parse_path(text: str) -> AltPath:
    doc = _load(text)
    _check_version(doc)
    closed = doc.get("closed")
    if not isinstance(closed, bool):
        raise ParseError("closed must be true or false", where="$.closed")
    order = tuple(_int_at(v, f"$.order[{i}]") for i, v in enumerate(_list_at(doc, "order")))
    return AltPath(order, closed)


def emit_partition(part: Partition) -> str:
    regions = ",\n".join(
        "    [" + ", ".join(_point_text(v) for v in q.vertices) + "]" for q in part.regions
    )
    assignment = json.dumps([[pid, part.assignment[pid]] for pid in sorted(part.assignment)])
    return (
        "{\n"
        f'  "version": {FORMAT_VERSION},\n'
        '  "regions": [\n' + regions + "\n  ],\n"
        '  "assignment": ' + assignment + "\n}\n"
    )


def parse_partition(text: str) -> Partition:
    doc = _load(text)
    _check_version(doc)
    regions = []
    for i, loop in enumerate(_list_at(doc, "regions")):
        where = f"$.regions[{i}]"
        if not isinstance(loop, list):
            raise ParseError("region must be a list of points", where=where)
        verts = [_point_at(v, f"{where}[{k}]") for k, v in enumerate(loop)]
        try:
            regions.append(ConvexRegion(tuple(verts)))
        except ValueError as exc:
            raise ParseError(str(exc), where=where) from None
    assignment = {}
    for i, pair in enumerate(_list_at(doc, "assignment")):
        where = f"$.assignment[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("assignment entries are [id, region]", where=where)
        pid = _int_at(pair[0], f"{where}[0]")
        if pid in assignment:
            raise ParseError(f"point {pid} assigned twice", where=where)
        assignment[pid] = _int_at(pair[1], f"{where}[1]")
    return Partition(tuple(regions), assignment)


# ---------------------------------------------------------------------------
# generator


@dataclass(frozen=True)
class GenParams:
    s: int
    n_blue: int
    n_red_outside: int
    seed: int = 0
    coordinate_range: int = 1000

    def check(self) -> None:
        if self.s < 3:
            raise HypothesisViolated("polygon size must be at least 3")
        if self.n_red_outside < 0:
            raise HypothesisViolated("exterior red count must be non-negative")
        if self.n_blue - self.n_red_outside - self.s not in (-1, 0, 1):
            raise HypothesisViolated(
                "blue count minus exterior red count must equal the polygon size, give or take one"
            )
        if self.coordinate_range < 20:
            raise HypothesisViolated("coordinate range must be at least 20")


def generate(p: GenParams, budget: int = 200) -> Instance:
    """Seeded random instance: a red convex polygon, blues inside it, the other reds outside."""
    p.check()
    rng = random.Random(p.seed)
    for _ in range(budget):
        inst = _attempt(p, rng)
        if inst is not None:
            return inst
    raise GenerationFailed(f"no instance after {budget} attempts")


def _attempt(p: GenParams, rng: random.Random) -> Optional[Instance]:
    radius = p.coordinate_range // 2
    poly = _sample_polygon(p.s, radius, rng)
    if poly is None:
        return None
    region = ConvexRegion.from_loop(poly)
    placed = list(region.vertices)
    if any(collinear_with_any_pair(v, [w for w in placed if w != v]) for v in placed):
        return None
    blues = _sample_points(p.n_blue, rng, placed, region, Location.INTERIOR, radius)
    if blues is None:
        return None
    reds = _sample_points(p.n_red_outside, rng, placed, region, Location.OUTSIDE, p.coordinate_range)
    if reds is None:
        return None
    meta = {
        "generator": {
            "s": p.s,
            "n_blue": p.n_blue,
            "n_red_outside": p.n_red_outside,
            "coordinate_range": p.coordinate_range,
        }
    }
    inst = Instance.from_coords(
        list(region.vertices) + reds, blues, range(p.s), seed=p.seed, metadata=meta
    )
    validate_instance(inst)
    return inst


def _sample_polygon(s: int, radius: int, rng: random.Random, tries: int = 500):
    inner = 0.8 * radius * radius
    outer = radius * radius
    for _ in range(tries):
        pts = set()
        while len(pts) < s:
            x = rng.randint(-radius, radius)
            y = rng.randint(-radius, radius)
            if inner <= x * x + y * y <= outer:
                pts.add(Point(x, y))
        ring = hull_vertices(sorted(pts))
        if len(ring) == s:
            return ring
    return None


def _sample_points(count, rng, placed, region, where, half_width, tries_per_point=400):
    out = []
    for _ in range(count):
        for _ in range(tries_per_point):
            q = Point(rng.randint(-half_width, half_width), rng.randint(-half_width, half_width))
            if q in placed or region_contains(region, q) is not where:
                continue
            if collinear_with_any_pair(q, placed):
                continue
            placed.append(q)
            out.append(q)
            break
        else:
            return None
    return out


# ---------------------------------------------------------------------------
# SVG


_RED = "#c0392b"
_BLUE = "#2e5fa8"


def render_svg(
    inst: Instance,
    path: Optional[AltPath] = None,
    part: Optional[Partition] = None,
    size: int = 600,
) -> str:
    """SVG drawing: red disks, hollow blue circles, the polygon, the path and region outlines."""
    by_id = inst.by_id()
    if path is not None:
        for v in path.order:
            if v not in by_id:
                raise UnknownId(f"path names unknown point {v}")
    if part is not None:
        for pid in part.assignment:
            if pid not in by_id:
                raise UnknownId(f"partition names unknown point {pid}")

    pts = [p.point for p in inst.points]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    pad = Fraction(span) / 10
    lo_x, lo_y = min(xs) - pad, min(ys) - pad
    hi_x, hi_y = lo_x + span + 2 * pad, lo_y + span + 2 * pad
    view = ConvexRegion(
        (Point(coord(lo_x), coord(lo_y)), Point(coord(lo_x), coord(hi_y)),
         Point(coord(hi_x), coord(hi_y)), Point(coord(hi_x), coord(lo_y)))
    )
    unit = size / float(span + 2 * pad)

    def xy(p: Point) -> str:
        # y grows downward in SVG
        return f"{float(p.x - lo_x) * unit:.2f},{float(hi_y - p.y) * unit:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect class="background" x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    if part is not None:
        for i, q in enumerate(part.regions):
            shown = region_intersection(q, view)
            if shown is None:
                continue
            loop = " ".join(xy(v) for v in shown.vertices)
            out.append(
                f'<polygon class="region" data-index="{i}" points="{loop}" '
                'fill="none" stroke="#999999" stroke-dasharray="4 3" stroke-width="1"/>'
            )
    poly = " ".join(xy(p.point) for p in inst.polygon_points)
    out.append(f'<polygon class="polygon" points="{poly}" fill="none" stroke="{_RED}" stroke-width="1.5"/>')
    if path is not None:
        order = list(path.order)
        pairs = list(zip(order, order[1:]))
        if path.closed and len(order) > 2:
            pairs.append((order[-1], order[0]))
        for u, w in pairs:
            a, b = xy(by_id[u].point).split(","), xy(by_id[w].point).split(",")
            out.append(
                f'<line class="path" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                'stroke="black" stroke-width="1.2"/>'
            )
    for p in inst.points:
        cx, cy = xy(p.point).split(",")
        if p.color is Color.RED:
            style = f'fill="{_RED}" stroke="{_RED}"'
        else:
            style = f'fill="white" stroke="{_BLUE}" stroke-width="1.5"'
        out.append(f'<circle class="point {p.color.value}" data-id="{p.id}" cx="{cx}" cy="{cy}" r="4" {style}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
