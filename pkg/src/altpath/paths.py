"""Alternating Hamiltonian paths and cycles.

``separated_path`` handles two color classes split by a line through two
red hull vertices, peeling top alternating hull edges one at a time.
``closed_cycle`` partitions the plane around the red polygon and chains one
separated path per region; ``open_path`` reduces the unbalanced case to the
balanced one with one auxiliary point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    AugmentationFailed,
    ConstructionFailed,
    HypothesisViolated,
    InvalidInstance,
    NotSeparated,
    SingleColor,
)
from .geom import (
    Color,
    ColoredPoint,
    ConvexRegion,
    DirectedLine,
    Location,
    Point,
    add,
    collinear_with_any_pair,
    coord,
    cross,
    dot,
    general_position,
    hull_vertices,
    orient_value,
    region_contains,
    scale,
    sub,
)
from .partition import Partition, plane_partition


@dataclass(frozen=True)
class AltPath:
    order: tuple[int, ...]
    closed: bool = False

    def __len__(self):
        return len(self.order)


@dataclass(frozen=True)
class Instance:
    """Red points (polygon vertices among them) and blue points.

    Ids are the positions in ``red`` followed by those in ``blue``; the
    polygon lists indices into ``red`` in clockwise order.
    """

    red: tuple[ColoredPoint, ...]
    blue: tuple[ColoredPoint, ...]
    polygon: tuple[int, ...]
    seed: Optional[int] = None
    metadata: dict = field(default_factory=dict, hash=False, compare=False)

    @classmethod
    def from_coords(cls, red, blue, polygon, seed=None, metadata=None) -> "Instance":
        reds = tuple(ColoredPoint(i, _as_point(p), Color.RED) for i, p in enumerate(red))
        blues = tuple(ColoredPoint(len(reds) + i, _as_point(p), Color.BLUE) for i, p in enumerate(blue))
        return cls(reds, blues, tuple(polygon), seed, dict(metadata or {}))

    @property
    def points(self) -> list[ColoredPoint]:
        return list(self.red) + list(self.blue)

    @property
    def polygon_points(self) -> list[ColoredPoint]:
        return [self.red[i] for i in self.polygon]

    @property
    def outer_red(self) -> list[ColoredPoint]:
        on_poly = set(self.polygon)
        return [r for i, r in enumerate(self.red) if i not in on_poly]

    def by_id(self) -> dict[int, ColoredPoint]:
        return {p.id: p for p in self.points}


def _as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(coord(x), coord(y))


def validate_instance(inst: Instance) -> None:
    """Raise InvalidInstance naming the first broken hypothesis."""
    poly = inst.polygon
    if len(poly) < 3:
        raise InvalidInstance("polygon needs at least three vertices")
    if len(set(poly)) != len(poly):
        raise InvalidInstance("polygon indices repeat")
    if any(not 0 <= i < len(inst.red) for i in poly):
        raise InvalidInstance("polygon index out of range")
    ids = [p.id for p in inst.points]
    if len(set(ids)) != len(ids):
        raise InvalidInstance("point ids repeat")
    if any(p.color is not Color.RED for p in inst.red) or any(p.color is not Color.BLUE for p in inst.blue):
        raise InvalidInstance("color lists are mixed")
    verts = [p.point for p in inst.polygon_points]
    region = ConvexRegion.from_loop(verts)
    if region is None or len(region) != len(verts):
        raise InvalidInstance("polygon is not strictly convex")
    n = len(verts)
    for i in range(n):
        if orient_value(verts[i - 1], verts[i], verts[(i + 1) % n]) >= 0:
            raise InvalidInstance("polygon is not convex in clockwise order")
    for b in inst.blue:
        if region_contains(region, b.point) is not Location.INTERIOR:
            raise InvalidInstance(f"blue point {b.id} is not inside the polygon")
    for r in inst.outer_red:
        if region_contains(region, r.point) is not Location.OUTSIDE:
            raise InvalidInstance(f"red point {r.id} off the polygon is not outside it")
    triple = general_position([p.point for p in inst.points])
    if triple is not None:
        pts = inst.points
        raise InvalidInstance(
            "points {} are collinear (no three points may be)".format(tuple(pts[i].id for i in triple))
        )
    if abs(len(inst.red) - len(inst.blue)) > 1:
        raise InvalidInstance("red and blue counts differ by more than one")


# ---------------------------------------------------------------------------
# separated classes


def top_alternating_edge(X: Sequence[ColoredPoint], sep: DirectedLine) -> tuple[int, int]:
    """Hull edge of X joining the two colors that meets ``sep`` highest along its direction.

    Returns (red id, blue id).
    """
    colors = {p.color for p in X}
    if len(colors) < 2:
        raise SingleColor("need points of both colors")
    side = {}
    for p in X:
        v = orient_value(sep.a, sep.b, p.point)
        if v == 0:
            raise NotSeparated(f"point {p.id} lies on the separator")
        s = v > 0
        if side.setdefault(p.color, s) != s:
            raise NotSeparated("separator does not split the colors")
    by_point = {p.point: p for p in X}
    ring = hull_vertices([p.point for p in X])
    d = sep.direction
    best = None
    best_h = None
    n = len(ring)
    for i in range(n if n > 2 else 1):
        u, w = ring[i], ring[(i + 1) % n]
        cu, cw = by_point[u], by_point[w]
        if cu.color is cw.color:
            continue
        vu = orient_value(sep.a, sep.b, u)
        vw = orient_value(sep.a, sep.b, w)
        t = Fraction(vu) / (vu - vw)
        z = Point(u.x + (w.x - u.x) * t, u.y + (w.y - u.y) * t)
        h = dot(sub(z, sep.a), d)
        if best_h is not None and h == best_h:
            raise ConstructionFailed("two alternating hull edges meet the separator at one point")
        if best_h is None or h > best_h:
            best_h = h
            best = (cu, cw)
    if best is None:
        raise ConstructionFailed("no alternating hull edge")
    red = best[0] if best[0].color is Color.RED else best[1]
    blue = best[1] if red is best[0] else best[0]
    return red.id, blue.id


def separated_path(
    R: Sequence[ColoredPoint],
    B: Sequence[ColoredPoint],
    r1: int,
    r2: int,
) -> AltPath:
    """Open alternating Hamiltonian path from red ``r1`` to red ``r2``.

    Requires one more red than blue, the line r1 r2 separating the other reds
    from the blues, and r1, r2 on the convex hull.
    """
    if len(R) != len(B) + 1:
        raise HypothesisViolated(f"need exactly one more red than blue, got {len(R)} and {len(B)}")
    reds = {p.id: p for p in R}
    if r1 not in reds or r2 not in reds or r1 == r2:
        raise HypothesisViolated("end vertices must be two distinct red points")
    a, b = reds[r2].point, reds[r1].point
    blue_side = set()
    for p in B:
        v = orient_value(a, b, p.point)
        if v == 0:
            raise HypothesisViolated(f"blue point {p.id} lies on the separating line")
        blue_side.add(v > 0)
    for p in R:
        if p.id in (r1, r2):
            continue
        v = orient_value(a, b, p.point)
        if v == 0:
            raise HypothesisViolated(f"red point {p.id} lies on the separating line")
        blue_side.add(v < 0)
    if len(blue_side) > 1:
        raise HypothesisViolated("the line through the end vertices does not separate the colors")
    everything = list(R) + list(B)
    pts = [p.point for p in everything]
    if general_position(pts) is not None:
        raise HypothesisViolated("points are not in general position")
    ring = set(hull_vertices(pts))
    if a not in ring or b not in ring:
        raise HypothesisViolated("end vertices must be convex hull vertices")

    # shift the line r2->r1 halfway toward the nearest blue so nothing lies on it
    direction = sub(b, a)
    nearest = min(B, key=lambda p: abs(cross(direction, sub(p.point, a))))
    shift = scale(sub(nearest.point, a), Fraction(1, 2))
    base = add(a, shift)
    sep = DirectedLine(base, add(base, direction))

    order = [r1]
    remaining = [p for p in everything if p.id != r1]
    last = Color.RED
    while len(remaining) > 1:
        red_id, blue_id = top_alternating_edge(remaining, sep)
        nxt = blue_id if last is Color.RED else red_id
        order.append(nxt)
        remaining = [p for p in remaining if p.id != nxt]
        last = last.other
    order.append(remaining[0].id)
    if order[-1] != r2:
        raise ConstructionFailed(f"path ended at {order[-1]} instead of {r2}")
    return AltPath(tuple(order), closed=False)


# ---------------------------------------------------------------------------
# full instances


def solve_closed(inst: Instance) -> tuple[AltPath, Partition]:
    """Closed alternating Hamiltonian cycle together with the partition behind it."""
    validate_instance(inst)
    if len(inst.red) != len(inst.blue):
        raise HypothesisViolated("a closed cycle needs as many red as blue points")
    poly = inst.polygon_points
    s = len(poly)
    outer = inst.outer_red
    part = plane_partition([p.point for p in poly], list(inst.blue), outer)
    by_id = inst.by_id()
    cycle: list[int] = []
    for i in range(s):
        here = [by_id[pid] for pid in part.points_of(i)]
        ends = [poly[i], poly[(i + 1) % s]]
        R = ends + [p for p in here if p.color is Color.RED]
        B = [p for p in here if p.color is Color.BLUE]
        sub_path = separated_path(R, B, ends[0].id, ends[1].id)
        cycle.extend(sub_path.order[:-1])
    return AltPath(tuple(cycle), closed=True), part


def closed_cycle(inst: Instance) -> AltPath:
    return solve_closed(inst)[0]


def open_path(inst: Instance, seed: int = 0, budget: int = 1000) -> AltPath:
    """Open alternating Hamiltonian path when the color counts differ by one.

    One auxiliary point of the scarcer color is added (a blue inside the
    polygon or a red outside it), the balanced instance is closed into a
    cycle, and the auxiliary vertex is cut out again.
    """
    validate_instance(inst)
    if abs(len(inst.red) - len(inst.blue)) != 1:
        raise HypothesisViolated("an open path here needs color counts differing by one")
    aug, aux_id = augment(inst, seed=seed, budget=budget)
    cycle = closed_cycle(aug).order
    k = cycle.index(aux_id)
    order = cycle[k + 1 :] + cycle[:k]
    return AltPath(tuple(order), closed=False)


def augment(inst: Instance, seed: int = 0, budget: int = 1000) -> tuple[Instance, int]:
    """Balanced copy of ``inst`` with one random auxiliary point; returns it and the new id."""
    rng = random.Random(seed)
    poly = [p.point for p in inst.polygon_points]
    region = ConvexRegion.from_loop(poly)
    everything = [p.point for p in inst.points]
    new_id = max(p.id for p in inst.points) + 1
    add_blue = len(inst.red) > len(inst.blue)
    area_pts = poly if add_blue else everything
    lo_x = min(p.x for p in area_pts)
    hi_x = max(p.x for p in area_pts)
    lo_y = min(p.y for p in area_pts)
    hi_y = max(p.y for p in area_pts)
    if not add_blue:
        pad = max(hi_x - lo_x, hi_y - lo_y, 1)
        lo_x, hi_x, lo_y, hi_y = lo_x - pad, hi_x + pad, lo_y - pad, hi_y + pad
    den = 16
    for _ in range(budget):
        x = Fraction(rng.randint(int(lo_x * den) - 1, int(hi_x * den) + 1), den)
        y = Fraction(rng.randint(int(lo_y * den) - 1, int(hi_y * den) + 1), den)
        p = Point(coord(x), coord(y))
        where = region_contains(region, p)
        if add_blue and where is not Location.INTERIOR:
            continue
        if not add_blue and where is not Location.OUTSIDE:
            continue
        if collinear_with_any_pair(p, everything):
            continue
        if add_blue:
            extra = ColoredPoint(new_id, p, Color.BLUE)
            aug = Instance(inst.red, inst.blue + (extra,), inst.polygon, inst.seed, inst.metadata)
        else:
            extra = ColoredPoint(new_id, p, Color.RED)
            aug = Instance(inst.red + (extra,), inst.blue, inst.polygon, inst.seed, inst.metadata)
        return aug, new_id
    raise AugmentationFailed(f"no admissible auxiliary point after {budget} draws")


def solve(inst: Instance, seed: int = 0) -> tuple[AltPath, Optional[Partition]]:
    """Closed cycle for balanced instances, open path otherwise."""
    if len(inst.red) == len(inst.blue):
        return solve_closed(inst)
    return open_path(inst, seed=seed), None
