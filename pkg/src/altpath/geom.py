"""Exact planar geometry on rational coordinates.

Coordinates are exact rationals: plain ``int`` when integral, otherwise
``fractions.Fraction``.  The two compare and hash consistently, and keeping
integral values as ``int`` makes the common all-integer inputs cheap.
Nothing in this module touches floating point.
"""

from __future__ import annotations

import enum
from math import gcd
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

from .errors import DegenerateHull

Number = Union[int, Fraction]


def coord(value) -> Number:
    """Canonical exact coordinate from an int, Fraction or rational string.

    Strings may be ``"num/den"``, an integer, or a finite decimal such as
    ``"-2.375"``; decimals are converted exactly.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(Decimal(text))
        except (ValueError, ZeroDivisionError, InvalidOperation):
            raise ValueError(f"not a rational number: {value!r}") from None
    else:
        frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac.numerator)
    return frac


def format_coord(value: Number) -> str:
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def _norm(value) -> Number:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


class Point(NamedTuple):
    x: Number
    y: Number

    def __repr__(self):
        return f"Point({format_coord(self.x)}, {format_coord(self.y)})"


def pt(x, y) -> Point:
    return Point(coord(x), coord(y))


def sub(a: Point, b: Point) -> Point:
    return Point(_norm(a.x - b.x), _norm(a.y - b.y))


def add(a: Point, b: Point) -> Point:
    return Point(_norm(a.x + b.x), _norm(a.y + b.y))


def scale(a: Point, k) -> Point:
    return Point(_norm(a.x * k), _norm(a.y * k))


def cross(u: Point, v: Point) -> Number:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> Number:
    return u.x * v.x + u.y * v.y


def _sign(v) -> int:
    return (v > 0) - (v < 0)


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class ColoredPoint(NamedTuple):
    id: int
    point: Point
    color: Color


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Side(enum.IntEnum):
    RIGHT = -1
    ON = 0
    LEFT = 1


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class SegmentRelation(enum.Enum):
    DISJOINT = "disjoint"
    PROPER_CROSS = "proper_cross"
    SHARED_ENDPOINT = "shared_endpoint"
    TOUCH = "touch"


class DirectedLine(NamedTuple):
    a: Point
    b: Point

    @property
    def direction(self) -> Point:
        return sub(self.b, self.a)

    def reversed(self) -> "DirectedLine":
        return DirectedLine(self.b, self.a)


class Segment(NamedTuple):
    p: Point
    q: Point


def make_line(a: Point, b: Point) -> DirectedLine:
    if a == b:
        raise ValueError("a directed line needs two distinct points")
    return DirectedLine(a, b)


def orient_value(a: Point, b: Point, c: Point) -> Number:
    """Twice the signed area of triangle abc (positive when counterclockwise)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    return Orientation(_sign(orient_value(a, b, c)))


def side_of(line: DirectedLine, p: Point) -> Side:
    return Side(_sign(orient_value(line.a, line.b, p)))


def general_position(points: Sequence[Point]) -> Optional[tuple[int, int, int]]:
    """Return None when no three points are collinear, else the
    lexicographically smallest collinear index triple."""
    n = len(points)
    for i in range(n):
        a = points[i]
        for j in range(i + 1, n):
            b = points[j]
            dx = b.x - a.x
            dy = b.y - a.y
            for k in range(j + 1, n):
                c = points[k]
                if dx * (c.y - a.y) == dy * (c.x - a.x):
                    return (i, j, k)
    return None


def collinear_with_any_pair(p: Point, points: Sequence[Point]) -> bool:
    """True if p coincides with a point or lies on a line through two of them."""
    n = len(points)
    for i in range(n):
        a = points[i]
        if a == p:
            return True
        dx = p.x - a.x
        dy = p.y - a.y
        for j in range(i + 1, n):
            c = points[j]
            if dx * (c.y - a.y) == dy * (c.x - a.x):
                return True
    return False


# ---------------------------------------------------------------------------
# convex regions


def _strip_collinear(loop: list[Point]) -> list[Point]:
    """Drop repeated and collinear-middle vertices from a closed loop."""
    pts: list[Point] = []
    for p in loop:
        if not pts or pts[-1] != p:
            pts.append(p)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        out = []
        n = len(pts)
        for i in range(n):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % n]
            if orient_value(prev, cur, nxt) == 0:
                changed = True
                continue
            out.append(cur)
        if changed:
            pts = out
    return pts


def _signed_area2(vs: Sequence[Point]) -> Number:
    total = 0
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


@dataclass(frozen=True)
class ConvexRegion:
    """Bounded strictly convex polygon, vertices clockwise.

    Vertex lists are rotated to start at the lexicographically smallest
    vertex, so two regions covering the same set compare equal.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError("a region needs at least three vertices")
        n = len(vs)
        for i in range(n):
            if orient_value(vs[i - 1], vs[i], vs[(i + 1) % n]) >= 0:
                raise ValueError("vertices are not strictly convex and clockwise")
        k = min(range(n), key=lambda i: vs[i])
        if k:
            object.__setattr__(self, "vertices", tuple(vs[k:]) + tuple(vs[:k]))

    @classmethod
    def from_loop(cls, loop: Sequence[Point]) -> Optional["ConvexRegion"]:
        """Normalize a convex vertex loop of either orientation.

        Returns None when the loop has no area.  The loop must already be
        convex; only duplicates and straight-angle vertices are removed.
        """
        pts = _strip_collinear(list(loop))
        if len(pts) < 3:
            return None
        a2 = _signed_area2(pts)
        if a2 == 0:
            return None
        if a2 > 0:
            pts.reverse()
        return cls(tuple(pts))

    def edges(self):
        vs = self.vertices
        n = len(vs)
        for i in range(n):
            yield vs[i], vs[(i + 1) % n]

    def __len__(self):
        return len(self.vertices)


def convex_hull(points: Sequence[Point]) -> ConvexRegion:
    region = hull_or_none(points)
    if region is None:
        raise DegenerateHull("fewer than three non-collinear points")
    return region


def hull_or_none(points: Sequence[Point]) -> Optional[ConvexRegion]:
    pts = sorted(set(points))
    if len(pts) < 3:
        return None
    # monotone chain; keeps only strict turns
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orient_value(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient_value(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    if len(ring) < 3:
        return None
    ring.reverse()
    return ConvexRegion(tuple(ring))


def hull_vertices(points: Sequence[Point]) -> list[Point]:
    """Clockwise hull vertex list; handles one or two points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    region = hull_or_none(pts)
    if region is None:
        return [pts[0], pts[-1]]
    return list(region.vertices)


def segments_relation(s1: Segment, s2: Segment) -> SegmentRelation:
    p1, q1 = s1
    p2, q2 = s2
    shared = {p1, q1} & {p2, q2}
    if shared:
        if len(shared) == 2:
            return SegmentRelation.TOUCH
        (c,) = shared
        u = q1 if p1 == c else p1
        w = q2 if p2 == c else p2
        if orient_value(c, u, w) == 0 and dot(sub(u, c), sub(w, c)) > 0:
            return SegmentRelation.TOUCH
        return SegmentRelation.SHARED_ENDPOINT
    o1 = _sign(orient_value(p1, q1, p2))
    o2 = _sign(orient_value(p1, q1, q2))
    o3 = _sign(orient_value(p2, q2, p1))
    o4 = _sign(orient_value(p2, q2, q1))
    if o1 * o2 < 0 and o3 * o4 < 0:
        return SegmentRelation.PROPER_CROSS
    if (
        (o1 == 0 and _on_segment(p1, q1, p2))
        or (o2 == 0 and _on_segment(p1, q1, q2))
        or (o3 == 0 and _on_segment(p2, q2, p1))
        or (o4 == 0 and _on_segment(p2, q2, q1))
    ):
        return SegmentRelation.TOUCH
    return SegmentRelation.DISJOINT


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    """r is collinear with pq; test whether it lies on the closed segment."""
    return min(p.x, q.x) <= r.x <= max(p.x, q.x) and min(p.y, q.y) <= r.y <= max(p.y, q.y)


def line_intersection(l1: DirectedLine, l2: DirectedLine) -> Optional[Point]:
    d1 = l1.direction
    d2 = l2.direction
    den = cross(d1, d2)
    if den == 0:
        return None
    t = Fraction(cross(sub(l2.a, l1.a), d2)) / den
    return Point(_norm(l1.a.x + d1.x * t), _norm(l1.a.y + d1.y * t))


def _cut(p: Point, q: Point, vp: Number, vq: Number) -> Point:
    t = Fraction(vp) / (vp - vq)
    return Point(_norm(p.x + (q.x - p.x) * t), _norm(p.y + (q.y - p.y) * t))


def clip(region: ConvexRegion, line: DirectedLine, keep: Side) -> Optional[ConvexRegion]:
    """Intersection of the region with the closed half-plane on side ``keep``.

    Returns None when that intersection has no area.
    """
    if keep not in (Side.LEFT, Side.RIGHT):
        raise ValueError("keep must be LEFT or RIGHT")
    want = int(keep)
    a, b = line
    vals = [orient_value(a, b, v) * want for v in region.vertices]
    if all(v >= 0 for v in vals):
        return region
    if all(v <= 0 for v in vals):
        return None
    out: list[Point] = []
    vs = region.vertices
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        vp, vq = vals[i], vals[(i + 1) % n]
        if vp >= 0:
            out.append(p)
        if (vp > 0 and vq < 0) or (vp < 0 and vq > 0):
            out.append(_cut(p, q, vp, vq))
    return ConvexRegion.from_loop(out)


def region_contains(region: ConvexRegion, p: Point) -> Location:
    on = False
    for u, w in region.edges():
        v = orient_value(u, w, p)
        if v > 0:
            return Location.OUTSIDE
        if v == 0:
            on = True
    return Location.BOUNDARY if on else Location.INTERIOR


def region_intersection(r1: ConvexRegion, r2: ConvexRegion) -> Optional[ConvexRegion]:
    cur: Optional[ConvexRegion] = r1
    for u, w in r2.edges():
        cur = clip(cur, DirectedLine(u, w), Side.RIGHT)
        if cur is None:
            return None
    return cur


def region_area2(region: ConvexRegion) -> Number:
    return _norm(-_signed_area2(region.vertices))


def bounding_region(points: Sequence[Point]) -> ConvexRegion:
    """Axis-aligned box well clear of all points.

    Each side sits at distance at least three times the coordinate spread
    (floor 1) from every point, and no box corner lies on a line through two
    input points.
    """
    if not points:
        raise ValueError("bounding_region needs at least one point")
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    spread = max(hi_x - lo_x, hi_y - lo_y, 1)
    margin = 3 * spread
    distinct = sorted(set(points))

    def bad(x, y):
        return _corner_hits_pair(Point(_norm(x), _norm(y)), distinct)

    # push one side at a time: a corner sliding along an axis-parallel line
    # that misses every point is blocked only finitely often
    left, bottom = lo_x - margin, lo_y - margin
    right, top = hi_x + margin, hi_y + margin
    while bad(left, bottom):
        left -= 1
    while bad(right, bottom):
        right += 1
    while bad(left, top) or bad(right, top):
        top += 1
    corners = (
        Point(_norm(left), _norm(bottom)),
        Point(_norm(left), _norm(top)),
        Point(_norm(right), _norm(top)),
        Point(_norm(right), _norm(bottom)),
    )
    return ConvexRegion(corners)


def _corner_hits_pair(c: Point, points: Sequence[Point]) -> bool:
    seen = set()
    for p in points:
        dx, dy = p.x - c.x, p.y - c.y
        key = Fraction(dy) / dx if dx != 0 else "vertical"
        if key in seen:
            return True
        seen.add(key)
    return False


def ray_exit(region: ConvexRegion, origin: Point, direction: Point) -> Point:
    """Farthest point of the region along a ray from a point of the region."""
    best_t = None
    for u, w in region.edges():
        e = sub(w, u)
        den = cross(direction, e)
        if den == 0:
            continue
        rel = sub(u, origin)
        t = Fraction(cross(rel, e)) / den
        s = Fraction(cross(rel, direction)) / den
        if t > 0 and 0 <= s <= 1 and (best_t is None or t > best_t):
            best_t = t
    if best_t is None:
        raise ValueError("ray does not leave the region")
    return Point(_norm(origin.x + direction.x * best_t), _norm(origin.y + direction.y * best_t))


def direction_between(u: Point, v: Point) -> Point:
    """A rational direction strictly inside the angle from u to v (< 180 degrees).

    Sum of the two directions after L1 normalisation; the exact Euclidean
    bisector is generally irrational.
    """
    nu = abs(u.x) + abs(u.y)
    nv = abs(v.x) + abs(v.y)
    d = Point(_norm(Fraction(u.x) / nu + Fraction(v.x) / nv), _norm(Fraction(u.y) / nu + Fraction(v.y) / nv))
    # rescale to keep the numbers small
    return _primitive(d)


def _primitive(d: Point) -> Point:
    fx, fy = Fraction(d.x), Fraction(d.y)
    den = fx.denominator * fy.denominator
    ix, iy = int(fx * den), int(fy * den)
    g = gcd(ix, iy) or 1
    return Point(ix // g, iy // g)


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    return Point(_norm(Fraction(sum(p.x for p in points)) / n), _norm(Fraction(sum(p.y for p in points)) / n))
