"""Equitable convex partitions of bicolored point sets.

Three layers, bottom up:

* :func:`triangle_partition` splits a convex region into three wedges around
  a triangle so that each wedge reaches a prescribed blue-minus-red count.
  The apex is found by exhaustive search over the arrangement of lines
  joining triangle vertices to colored points.
* :func:`chain_partition` splits a region around a convex chain whose two
  ends sit on the region boundary, one unit of discrepancy per chain edge.
* :func:`plane_partition` does the same for a closed convex polygon and the
  whole plane (realised as a large bounding box).

Points on a shared boundary are resolved by an explicit assignment map
that travels with every partition; nothing downstream re-derives it from
geometry.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import (
    ApexAtVertex,
    BracketingViolated,
    ConditionsViolated,
    ConstructionFailed,
    HypothesisViolated,
    InvalidChain,
    NoApexFound,
    PointOnLine,
    SweepInfeasible,
)
from .geom import (
    Color,
    ColoredPoint,
    ConvexRegion,
    DirectedLine,
    Location,
    Point,
    Side,
    add,
    bounding_region,
    clip,
    cross,
    direction_between,
    general_position,
    hull_or_none,
    orient_value,
    ray_exit,
    region_area2,
    region_contains,
    region_intersection,
    sub,
)


@dataclass(frozen=True)
class Partition:
    """Convex regions plus the point-id -> region-index assignment."""

    regions: tuple[ConvexRegion, ...]
    assignment: dict[int, int] = field(hash=False)

    def points_of(self, index: int) -> list[int]:
        return sorted(pid for pid, r in self.assignment.items() if r == index)


@dataclass(frozen=True)
class WedgeFrame:
    apex: Point
    triangle: tuple[Point, Point, Point]
    ambient: ConvexRegion


@dataclass(frozen=True)
class ConditionViolation:
    kind: str  # "sum" or "interval"
    interval: tuple[int, ...] = ()
    lhs: int = 0
    rhs: int = 0

    def __str__(self):
        if self.kind == "sum":
            return f"targets sum to {self.lhs} but |B| - |R| = {self.rhs}"
        return f"interval {self.interval}: sum {self.lhs} < {self.rhs}"


class Partitionability(enum.Enum):
    LEFT_ONLY = "left"
    RIGHT_ONLY = "right"
    BOTH = "both"


# ---------------------------------------------------------------------------
# counting helpers


def discrepancy(points: Iterable[ColoredPoint]) -> int:
    """Blue count minus red count."""
    return sum(1 if p.color is Color.BLUE else -1 for p in points)


def _split(points: Sequence[ColoredPoint], line: DirectedLine):
    """Partition points into (right, left); a point on the line is an error."""
    a, b = line
    right, left = [], []
    for p in points:
        v = orient_value(a, b, p.point)
        if v < 0:
            right.append(p)
        elif v > 0:
            left.append(p)
        else:
            raise PointOnLine(f"point {p.id} lies on the split line")
    return right, left


def _right_disc(points: Sequence[ColoredPoint], line: DirectedLine) -> int:
    right, _ = _split(points, line)
    return discrepancy(right)


def _count_colors(points: Sequence[ColoredPoint], color: Color) -> int:
    return sum(1 for p in points if p.color is color)


def outer_halfplane(poly: ConvexRegion, edge_index: int) -> tuple[DirectedLine, Side]:
    """Closed half-plane beyond one polygon edge, away from the interior."""
    vs = poly.vertices
    n = len(vs)
    if not 0 <= edge_index < n:
        raise IndexError(edge_index)
    # clockwise vertices keep the interior on the right of every edge
    return DirectedLine(vs[edge_index], vs[(edge_index + 1) % n]), Side.LEFT


def _in_outer(p: Point, u: Point, w: Point) -> bool:
    return orient_value(u, w, p) >= 0


def check_conditions(
    Q: ConvexRegion,
    P_vertices: Sequence[Point],
    R: Sequence[ColoredPoint],
    B: Sequence[ColoredPoint],
    t: Sequence[int],
) -> Optional[ConditionViolation]:
    """Necessary conditions for a target vector; None means they all hold.

    Edge ``i`` joins ``P_vertices[i]`` to ``P_vertices[i+1]``; intervals are
    reported with these 0-based edge indices.  Reds outside ``Q`` are ignored.
    """
    s = len(P_vertices)
    if len(t) != s:
        raise ValueError("one target per polygon edge")
    reds = [r.point for r in R if region_contains(Q, r.point) is not Location.OUTSIDE]
    if sum(t) != len(B) - len(reds):
        return ConditionViolation("sum", lhs=sum(t), rhs=len(B) - len(reds))
    outer = [[_in_outer(p, P_vertices[i], P_vertices[(i + 1) % s]) for i in range(s)] for p in reds]
    for length in range(1, s + 1):
        starts = range(s) if length < s else range(1)
        for start in starts:
            idx = tuple((start + k) % s for k in range(length))
            covered = sum(1 for row in outer if any(row[i] for i in idx))
            total = sum(t[i] for i in idx)
            if total < -covered:
                return ConditionViolation("interval", idx, total, -covered)
    return None


def classify_diagonal(
    p_i: Point,
    anchor: Point,
    i: int,
    s: int,
    pts: Sequence[ColoredPoint],
    Q: Optional[ConvexRegion] = None,
) -> Partitionability:
    """Left/right partitionability of the diagonal from chain vertex ``i`` to the anchor."""
    if not 2 <= i <= s:
        raise ValueError("chain index out of range")
    if Q is not None:
        pts = [p for p in pts if region_contains(Q, p.point) is not Location.OUTSIDE]
    d = _right_disc(pts, DirectedLine(p_i, anchor))
    if d < i - 1:
        return Partitionability.LEFT_ONLY
    if d > i - 1:
        return Partitionability.RIGHT_ONLY
    return Partitionability.BOTH


# ---------------------------------------------------------------------------
# three wedges around a triangle


def wedge_regions(frame: WedgeFrame) -> tuple[Optional[ConvexRegion], ...]:
    """Split the ambient region by the rays from the apex through the triangle vertices.

    Region ``i`` is bounded by the rays through vertex ``i`` and ``i+1`` and
    contains that triangle edge.  An apex on an edge gives that edge's
    outer half-plane.  An entry is None when the wedge misses the ambient
    region.
    """
    y = frame.apex
    tri = frame.triangle
    if y in tri:
        raise ApexAtVertex("apex coincides with a triangle vertex")
    if orient_value(*tri) >= 0:
        raise ValueError("triangle must be clockwise")
    for i in range(3):
        if orient_value(tri[i], tri[(i + 1) % 3], y) > 0:
            raise ValueError("apex outside the triangle")
    out = []
    for i in range(3):
        part = clip(frame.ambient, DirectedLine(y, tri[i]), Side.RIGHT)
        if part is not None:
            part = clip(part, DirectedLine(y, tri[(i + 1) % 3]), Side.LEFT)
        out.append(part)
    return tuple(out)


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


def _hom_line(u, v):
    """Integer line through u and v; value at (X, Y, W) has the sign of orient(u, v, z)."""
    dx, dy = v[0] - u[0], v[1] - u[1]
    return (-dy, dx, dy * u[0] - dx * u[1])


class _ApexSearch:
    """Candidate apexes on the arrangement of vertex-to-point lines.

    Coordinates are scaled to integers and apexes kept homogeneous, so every
    test is a sign of an integer dot product.
    """

    def __init__(self, tri, pts: Sequence[ColoredPoint]):
        den = 1
        for p in list(tri) + [q.point for q in pts]:
            for c in p:
                d = Fraction(c).denominator
                den = den * d // gcd(den, d)
        self.den = den
        self.tri = [(int(p.x * den), int(p.y * den)) for p in tri]
        self.pts = pts
        self.ipts = [(int(q.point.x * den), int(q.point.y * den)) for q in pts]
        self.weight = [1 if q.color is Color.BLUE else -1 for q in pts]
        self.pt_lines = [[_hom_line(self.tri[i], q) for i in range(3)] for q in self.ipts]
        self.edge_lines = [_hom_line(self.tri[i], self.tri[(i + 1) % 3]) for i in range(3)]

    def inside(self, y) -> bool:
        X, Y, W = y
        for a, b, c in self.edge_lines:
            if a * X + b * Y + c * W > 0:
                return False
        return True

    def candidates(self):
        seen = set()
        T = self.tri
        g = (T[0][0] + T[1][0] + T[2][0], T[0][1] + T[1][1] + T[2][1], 3)
        seen.add(_canon(g))
        yield g
        lines = []
        for i in range(3):
            lines.append((self.edge_lines[i], frozenset((i, (i + 1) % 3))))
        for k in range(len(self.ipts)):
            for i in range(3):
                lines.append((self.pt_lines[k][i], frozenset((i,))))
        vertices = {_canon((t[0], t[1], 1)) for t in T}
        for (l1, t1), (l2, t2) in itertools.combinations(lines, 2):
            if t1 & t2:
                continue
            a1, b1, c1 = l1
            a2, b2, c2 = l2
            W = a1 * b2 - a2 * b1
            if W == 0:
                continue
            X = b1 * c2 - b2 * c1
            Y = c1 * a2 - c2 * a1
            y = _canon((X, Y, W))
            if y in seen or y in vertices:
                continue
            seen.add(y)
            if self.inside(y):
                yield y

    def classify(self, y):
        """Per point: a fixed wedge index or a tuple of admissible wedges."""
        X, Y, W = y
        fixed = [0, 0, 0]
        flexible = []
        T = self.tri
        for k, lines in enumerate(self.pt_lines):
            s = [_sgn(a * X + b * Y + c * W) for a, b, c in lines]
            w = self.weight[k]
            zeros = [i for i in range(3) if s[i] == 0]
            if not zeros:
                for i in range(3):
                    if s[i] < 0 and s[(i + 1) % 3] > 0:
                        fixed[i] += w
                        break
                else:
                    raise ConstructionFailed("point in no wedge")
            elif len(zeros) == 3:
                flexible.append((k, (0, 1, 2)))
            else:
                i = zeros[0]
                qx, qy = self.ipts[k]
                px, py = T[i]
                if (qx * W - X) * (px * W - X) + (qy * W - Y) * (py * W - Y) > 0:
                    flexible.append((k, ((i - 1) % 3, i)))
                else:
                    fixed[(i + 1) % 3] += w
        return fixed, flexible

    def solve(self, y, targets):
        fixed, flexible = self.classify(y)
        need = [targets[i] - fixed[i] for i in range(3)]
        if not flexible:
            return {} if need == [0, 0, 0] else None
        if sum(abs(v) for v in need) > len(flexible) * 2:
            return None
        for choice in itertools.product(*(opts for _, opts in flexible)):
            got = [0, 0, 0]
            for (k, _), r in zip(flexible, choice):
                got[r] += self.weight[k]
            if got == need:
                return {k: r for (k, _), r in zip(flexible, choice)}
        return None

    def point(self, y) -> Point:
        X, Y, W = y
        d = W * self.den
        return _mk_point(Fraction(X, d), Fraction(Y, d))


def _mk_point(x: Fraction, y: Fraction) -> Point:
    return Point(int(x) if x.denominator == 1 else x, int(y) if y.denominator == 1 else y)


def _canon(y):
    X, Y, W = y
    if W < 0:
        X, Y, W = -X, -Y, -W
    g = gcd(gcd(X, Y), W)
    return (X // g, Y // g, W // g)


def triangle_partition(
    Q: ConvexRegion,
    p1: Point,
    p2: Point,
    p3: Point,
    B: Sequence[ColoredPoint],
    R: Sequence[ColoredPoint],
    t: Sequence[int],
) -> Partition:
    """Three wedges around clockwise triangle p1 p2 p3 with prescribed discrepancies.

    Wedge ``i`` has triangle edge ``i`` (p1p2, p2p3, p3p1) as a diagonal and
    blue-minus-red count ``t[i]`` under the returned assignment.
    """
    tri = (p1, p2, p3)
    if orient_value(p1, p2, p3) >= 0:
        raise HypothesisViolated("triangle must be clockwise and non-degenerate")
    if len(t) != 3:
        raise ValueError("three targets expected")
    bad = check_conditions(Q, list(tri), R, B, t)
    if bad is not None:
        raise ConditionsViolated(str(bad))
    for b in B:
        if any(orient_value(tri[i], tri[(i + 1) % 3], b.point) >= 0 for i in range(3)):
            raise HypothesisViolated(f"blue point {b.id} is not strictly inside the triangle")
    pts = list(B) + list(R)
    search = _ApexSearch(tri, pts)
    for y in search.candidates():
        flex = search.solve(y, t)
        if flex is None:
            continue
        apex = search.point(y)
        regions = wedge_regions(WedgeFrame(apex, tri, Q))
        if any(r is None for r in regions):
            continue
        fixed, flexible = search.classify(y)
        assignment = {}
        flex_ids = {k for k, _ in flexible}
        for k, q in enumerate(pts):
            if k in flex_ids:
                assignment[q.id] = flex[k]
            else:
                assignment[q.id] = _wedge_of(search, k, y)
        return Partition(tuple(regions), assignment)
    raise NoApexFound(
        "no apex reaches targets {} for triangle {} with points {}".format(
            tuple(t), tri, [(q.id, q.point, q.color.value) for q in pts]
        )
    )


def _wedge_of(search: _ApexSearch, k: int, y) -> int:
    X, Y, W = y
    s = [_sgn(a * X + b * Y + c * W) for a, b, c in search.pt_lines[k]]
    if 0 in s:
        i = s.index(0)
        return (i + 1) % 3
    for i in range(3):
        if s[i] < 0 and s[(i + 1) % 3] > 0:
            return i
    raise ConstructionFailed("point in no wedge")


# ---------------------------------------------------------------------------
# angular sweeps


def _clockwise_cmp(u: Point, v: Point) -> int:
    c = cross(u, v)
    return -1 if c < 0 else (1 if c > 0 else 0)


def _strictly_between(u0: Point, u1: Point, v: Point) -> bool:
    """v lies strictly inside the clockwise cone from u0 to u1 (< 180 degrees)."""
    return cross(u0, v) < 0 and cross(v, u1) < 0


def rotate_split(
    Q: ConvexRegion,
    pivot: Point,
    arc_from: Point,
    arc_to: Point,
    pts: Sequence[ColoredPoint],
    target: int,
) -> tuple[Point, DirectedLine]:
    """Rotate a line about ``pivot`` clockwise from ``arc_from`` toward ``arc_to``.

    Returns the first boundary point ``x`` of ``Q`` strictly inside the swept
    arc such that the points strictly right of pivot->x have discrepancy
    ``target``, together with that line.  Split directions always fall
    strictly between consecutive event directions, so no point lies on the
    returned line.
    """
    u0 = sub(arc_from, pivot)
    u1 = sub(arc_to, pivot)
    if cross(u0, u1) >= 0:
        raise SweepInfeasible("arc must turn clockwise by less than a half-turn")
    events = []
    for q in pts:
        v = sub(q.point, pivot)
        if _strictly_between(u0, u1, v):
            events.append(v)
        elif _strictly_between(u0, u1, Point(-v.x, -v.y)):
            events.append(Point(-v.x, -v.y))
    events.sort(key=cmp_to_key(_clockwise_cmp))
    stops = [u0] + events + [u1]
    values = []
    for k in range(len(stops) - 1):
        d = direction_between(stops[k], stops[k + 1])
        line = DirectedLine(pivot, add(pivot, d))
        value = _right_disc(pts, line)
        values.append(value)
        if value == target:
            x = ray_exit(Q, pivot, d)
            return x, DirectedLine(pivot, x)
    raise SweepInfeasible(f"no sweep position reaches {target}; values {values}")


def find_halfline(
    p1: Point,
    wedge_right: DirectedLine,
    wedge_left: DirectedLine,
    R: Sequence[ColoredPoint],
    target: int,
) -> DirectedLine:
    """Directed line from p1 through the wedge right of ``wedge_right`` and
    left of ``wedge_left`` such that the reds right of both ``wedge_right``
    and the result number exactly ``-target``.

    Both wedge lines must end at ``p1``.
    """
    start = sub(p1, wedge_right.a)  # direction of the wedge's first ray
    stop = sub(p1, wedge_left.a)
    base = 0
    inside = []
    for r in R:
        sr = orient_value(wedge_right.a, wedge_right.b, r.point)
        sl = orient_value(wedge_left.a, wedge_left.b, r.point)
        if sr == 0 or sl == 0:
            raise PointOnLine(f"red point {r.id} lies on a wedge line")
        if sr < 0 and sl < 0:
            base += 1
        elif sr < 0 and sl > 0:
            inside.append(sub(r.point, p1))
    want = -target - base
    if not 1 <= want <= len(inside):
        raise BracketingViolated(
            f"target {target} outside bracket [{-(base + len(inside))}, {-base - 1}]"
        )
    inside.sort(key=cmp_to_key(_clockwise_cmp))
    stops = [start] + inside + [stop]
    # reds clockwise-after the split stay on its right
    k = len(inside) - want
    d = direction_between(stops[k], stops[k + 1])
    return DirectedLine(p1, add(p1, d))


# ---------------------------------------------------------------------------
# chain and plane partitions

_Pieces = list  # list of (ConvexRegion, list[ColoredPoint])


def _as_partition(pieces) -> Partition:
    regions = tuple(r for r, _ in pieces)
    assignment = {}
    for idx, (_, pts) in enumerate(pieces):
        for p in pts:
            assignment[p.id] = idx
    return Partition(regions, assignment)


def chain_partition(
    Q: ConvexRegion,
    a: Point,
    chain: Sequence[Point],
    B: Sequence[ColoredPoint],
    R: Sequence[ColoredPoint],
) -> Partition:
    """Partition Q into one region per chain edge, each with discrepancy 1."""
    return _as_partition(_chain(Q, a, list(chain), list(B) + list(R)))


def _check_chain(Q, a, chain, pts):
    s = len(chain) - 1
    if s < 1:
        raise InvalidChain("chain needs at least two vertices")
    if discrepancy(pts) != s:
        raise InvalidChain(f"discrepancy {discrepancy(pts)} does not match {s} chain edges")
    for p, name in ((a, "anchor"), (chain[0], "first chain vertex"), (chain[-1], "last chain vertex")):
        if region_contains(Q, p) is not Location.BOUNDARY:
            raise InvalidChain(f"{name} is not on the region boundary")


def _chain(Q: ConvexRegion, a: Point, chain: list, pts: list) -> _Pieces:
    _check_chain(Q, a, chain, pts)
    s = len(chain) - 1
    if s == 1:
        return [(Q, pts)]

    def right_disc(i):  # chain vertex i is 1-based
        return _right_disc(pts, DirectedLine(chain[i - 1], a))

    if a != chain[0] and right_disc(2) >= 1:
        _, line = rotate_split(Q, chain[1], a, chain[0], pts, 1)
        first, rest = _split(pts, line)
        q1 = clip(Q, line, Side.RIGHT)
        remainder = clip(Q, line, Side.LEFT)
        return [(q1, first)] + _chain(remainder, a, chain[1:], rest)
    if a != chain[-1] and right_disc(s) <= s - 1:
        _, line = rotate_split(Q, chain[s - 1], chain[s], a, pts, s - 1)
        rest, last = _split(pts, line)
        qs = clip(Q, line, Side.LEFT)
        remainder = clip(Q, line, Side.RIGHT)
        return _chain(remainder, a, chain[:-1], rest) + [(qs, last)]
    for j in range(2, s):
        if right_disc(j) <= j - 1 and right_disc(j + 1) >= j:
            break
    else:
        raise ConstructionFailed("no left/right-partitionable pair along the chain")
    pj, pj1 = chain[j - 1], chain[j]
    blues = [p for p in pts if p.color is Color.BLUE]
    reds = [p for p in pts if p.color is Color.RED]
    inner, before, after = _blues_around_triangle(blues, a, pj, pj1)
    targets = (j - 1 - len(before), 1, s - j - len(after))
    o1, o2, o3 = _triangle_pieces(Q, (a, pj, pj1), inner, reds, targets)
    o1 = (o1[0], o1[1] + before)
    o3 = (o3[0], o3[1] + after)
    _check_inside(o1)
    _check_inside(o3)
    return _chain(o1[0], a, chain[:j], o1[1]) + [o2] + _chain(o3[0], a, chain[j:], o3[1])


def _blues_around_triangle(blues, apex_vertex, u, w):
    """Split blues into those inside triangle (apex_vertex, u, w), those right
    of u->apex_vertex, and those left of w->apex_vertex."""
    inner, before, after = [], [], []
    for b in blues:
        if orient_value(u, apex_vertex, b.point) < 0:
            before.append(b)
        elif orient_value(w, apex_vertex, b.point) > 0:
            after.append(b)
        else:
            inner.append(b)
    return inner, before, after


def _triangle_pieces(Q, tri, blues, reds, targets):
    part = triangle_partition(Q, tri[0], tri[1], tri[2], blues, reds, targets)
    by_id = {p.id: p for p in list(blues) + list(reds)}
    buckets = [[], [], []]
    for pid, r in part.assignment.items():
        buckets[r].append(by_id[pid])
    return [(part.regions[i], buckets[i]) for i in range(3)]


def _check_inside(piece):
    region, pts = piece
    for p in pts:
        if region_contains(region, p.point) is Location.OUTSIDE:
            raise ConstructionFailed(f"point {p.id} falls outside its region")


def _validate_plane_input(P, B, R):
    s = len(P)
    if s < 3:
        raise HypothesisViolated("polygon needs at least three vertices")
    if s != len(B) - len(R):
        raise HypothesisViolated(f"polygon size {s} differs from |B| - |R| = {len(B) - len(R)}")
    poly = ConvexRegion.from_loop(P)
    if poly is None or len(poly) != s or orient_value(P[0], P[1], P[2]) >= 0:
        raise HypothesisViolated("polygon must be strictly convex and clockwise")
    for b in B:
        if region_contains(poly, b.point) is not Location.INTERIOR:
            raise HypothesisViolated(f"blue point {b.id} is not inside the polygon")
    for r in R:
        if region_contains(poly, r.point) is not Location.OUTSIDE:
            raise HypothesisViolated(f"red point {r.id} is not outside the polygon")
    allpts = list(P) + [p.point for p in B] + [p.point for p in R]
    triple = general_position(allpts)
    if triple is not None:
        raise HypothesisViolated(f"points {triple} (polygon vertices first) are collinear")


def plane_partition(
    P_vertices: Sequence[Point],
    B: Sequence[ColoredPoint],
    R: Sequence[ColoredPoint],
    ambient: Optional[ConvexRegion] = None,
) -> Partition:
    """Partition the plane (a box around everything) into one convex region
    per polygon edge, each with exactly one more blue than red point."""
    P = list(P_vertices)
    _validate_plane_input(P, B, R)
    if ambient is None:
        ambient = bounding_region(P + [p.point for p in B] + [p.point for p in R])
    return _as_partition(_plane(ambient, P, list(B), list(R)))


def _plane(box: ConvexRegion, P: list, B: list, R: list) -> _Pieces:
    s = len(P)
    if s == 3:
        return _triangle_pieces(box, tuple(P), B, R, (1, 1, 1))
    pts = B + R
    p1 = P[0]

    def right_disc(i, among=pts):  # polygon vertex i is 1-based
        return _right_disc(among, DirectedLine(P[i - 1], p1))

    for j in range(2, s):
        if right_disc(j) <= j - 1 and right_disc(j + 1) >= j:
            break
    else:
        raise ConstructionFailed("no left/right-partitionable pair in the polygon")
    pj, pj1 = P[j - 1], P[j]
    inner, before, after = _blues_around_triangle(B, p1, pj, pj1)
    n1 = j - 1 - len(before)
    n3 = s - j - len(after)
    if check_conditions(box, [p1, pj, pj1], R, inner, (n1, 1, n3)) is None:
        o1, o2, o3 = _triangle_pieces(box, (p1, pj, pj1), inner, R, (n1, 1, n3))
        o1 = (o1[0], o1[1] + before)
        o3 = (o3[0], o3[1] + after)
        _check_inside(o1)
        _check_inside(o3)
        return _chain(o1[0], p1, P[:j], o1[1]) + [o2] + _chain(o3[0], p1, P[j:] + [p1], o3[1])

    # first split off a convex cone at p1 holding edges p1 .. pj
    line_j = DirectedLine(pj, p1)
    l = find_halfline(p1, line_j, DirectedLine(pj1, p1), R, n1)
    star_pts, rest_pts = [], []
    for p in pts:
        if orient_value(pj, p1, p.point) < 0 and orient_value(l.a, l.b, p.point) < 0:
            star_pts.append(p)
        else:
            rest_pts.append(p)
    q_star = clip(clip(box, line_j, Side.RIGHT), l, Side.RIGHT)
    pieces = _chain(q_star, p1, P[:j], star_pts)

    # the non-convex remainder, split around triangle p1 pk pk+1
    for k in range(j + 1, s):
        if right_disc(k, rest_pts) <= k - j and right_disc(k + 1, rest_pts) >= k + 1 - j:
            break
    else:
        raise ConstructionFailed("no left/right-partitionable pair in the remainder")
    pk, pk1 = P[k - 1], P[k]
    rest_blue = [p for p in rest_pts if p.color is Color.BLUE]
    rest_red = [p for p in rest_pts if p.color is Color.RED]
    inner, before, after = _blues_around_triangle(rest_blue, p1, pk, pk1)
    targets = (k - j - len(before), 1, s - k - len(after))
    o1, o2, o3 = _triangle_pieces(box, (p1, pk, pk1), inner, rest_red, targets)
    o1 = (_outside_cone(o1[0], line_j, l), o1[1] + before)
    o2 = (_outside_cone(o2[0], line_j, l), o2[1])
    o3 = (_outside_cone(o3[0], line_j, l), o3[1] + after)
    for piece in (o1, o2, o3):
        _check_inside(piece)
    pieces += _chain(o1[0], p1, P[j - 1 : k], o1[1])
    pieces.append(o2)
    pieces += _chain(o3[0], p1, P[k:] + [p1], o3[1])
    return pieces


def _outside_cone(region: ConvexRegion, l1: DirectedLine, l2: DirectedLine) -> ConvexRegion:
    """region minus the open cone right of both lines; must come out convex."""
    left1 = clip(region, l1, Side.LEFT)
    left2 = clip(region, l2, Side.LEFT)
    if left1 is None or left2 is None:
        result = left1 or left2
        if result is None:
            raise ConstructionFailed("region lies inside the removed cone")
        return result
    if left1 == region or left2 == region:
        return region
    both = region_intersection(left1, left2)
    overlap = region_area2(both) if both is not None else 0
    hull = hull_or_none(list(left1.vertices) + list(left2.vertices))
    if hull is None or region_area2(hull) != region_area2(left1) + region_area2(left2) - overlap:
        raise ConstructionFailed("remainder piece is not convex")
    return hull
