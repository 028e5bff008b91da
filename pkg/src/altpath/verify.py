"""Independent checks for paths and partitions, plus an exhaustive solver for tiny inputs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetExceeded
from .geom import (
    Color,
    ColoredPoint,
    ConvexRegion,
    Location,
    Point,
    Segment,
    SegmentRelation,
    orient_value,
    region_area2,
    region_contains,
    region_intersection,
    segments_relation,
)
from .partition import Partition
from .paths import AltPath

BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class ViolationReport:
    """First problem found. ``where`` holds the offending ids or indices."""

    kind: str
    where: tuple = ()
    details: str = ""

    def __str__(self):
        loc = ", ".join(str(w) for w in self.where)
        text = f"{self.kind}({loc})" if loc else self.kind
        return f"{text}: {self.details}" if self.details else text


def verify_path(points: Sequence[ColoredPoint], path: AltPath) -> Optional[ViolationReport]:
    """None when ``path`` is a non-crossing alternating Hamiltonian path (or cycle) of ``points``."""
    by_id = {p.id: p for p in points}
    order = list(path.order)
    seen = set()
    for v in order:
        if v not in by_id:
            return ViolationReport("NotHamiltonian", (v,), "unknown id")
        if v in seen:
            return ViolationReport("NotHamiltonian", (v,), "vertex repeated")
        seen.add(v)
    missing = sorted(set(by_id) - seen)
    if missing:
        return ViolationReport("NotHamiltonian", tuple(missing), "vertices not visited")

    m = len(order)
    pairs = list(zip(order, order[1:]))
    if path.closed and m > 1:
        pairs.append((order[-1], order[0]))
    for i, (u, w) in enumerate(pairs):
        if by_id[u].color is by_id[w].color:
            return ViolationReport("NotAlternating", (i,), f"edge {u}-{w} joins two {by_id[u].color.value} points")

    segs = [Segment(by_id[u].point, by_id[w].point) for u, w in pairs]
    k = len(segs)
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (path.closed and i == 0 and j == k - 1)
            rel = segments_relation(segs[i], segs[j])
            ok = SegmentRelation.SHARED_ENDPOINT if adjacent else SegmentRelation.DISJOINT
            if rel is not ok:
                return ViolationReport("Crossing", (i, j), f"edges {pairs[i]} and {pairs[j]}")
    return None


def _strictly_convex_cw(vs: Sequence[Point]) -> bool:
    n = len(vs)
    if n < 3:
        return False
    return all(orient_value(vs[i - 1], vs[i], vs[(i + 1) % n]) < 0 for i in range(n))


def verify_partition(
    ambient: ConvexRegion,
    polygon: Sequence[Point],
    R: Sequence[ColoredPoint],
    B: Sequence[ColoredPoint],
    part: Partition,
    want: Sequence[int],
) -> Optional[ViolationReport]:
    """None when ``part`` tiles ``ambient`` into convex pieces with the requested discrepancies.

    Region i must carry the edge polygon[i] polygon[i+1] on its boundary and
    hold blue minus red equal to ``want[i]`` among ``R`` and ``B``.  ``polygon``
    may also be an open chain with one more vertex than there are regions.
    """
    regions = part.regions
    if len(regions) != len(want):
        return ViolationReport("CoverageGap", (), f"{len(regions)} regions for {len(want)} targets")
    for i, q in enumerate(regions):
        if not _strictly_convex_cw(q.vertices):
            return ViolationReport("NotConvex", (i,))
        if any(region_contains(ambient, v) is Location.OUTSIDE for v in q.vertices):
            return ViolationReport("CoverageGap", (i,), "region leaves the ambient region")
    total = sum(region_area2(q) for q in regions)
    if total != region_area2(ambient):
        return ViolationReport("CoverageGap", (), f"areas sum to {total}, ambient has {region_area2(ambient)}")
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            if region_intersection(regions[i], regions[j]) is not None:
                return ViolationReport("Overlap", (i, j))
    s = len(polygon)
    # a closed polygon has one edge per vertex, an open chain one fewer
    if s in (len(want), len(want) + 1):
        for i, q in enumerate(regions):
            for v in (polygon[i], polygon[(i + 1) % s]):
                if region_contains(q, v) is not Location.BOUNDARY:
                    return ViolationReport("BadDiagonal", (i,), f"{tuple(v)} is not on the region boundary")

    points = list(R) + list(B)
    ids = {p.id for p in points}
    for pid in part.assignment:
        if pid not in ids:
            return ViolationReport("CoverageGap", (pid,), "assignment names an unknown point")
    balance = [0] * len(regions)
    for p in points:
        idx = part.assignment.get(p.id)
        if idx is None or not 0 <= idx < len(regions):
            return ViolationReport("CoverageGap", (p.id,), "point not assigned to a region")
        if region_contains(regions[idx], p.point) is Location.OUTSIDE:
            return ViolationReport("CoverageGap", (p.id,), f"point lies outside region {idx}")
        balance[idx] += 1 if p.color is Color.BLUE else -1
    for i, (got, need) in enumerate(zip(balance, want)):
        if got != need:
            return ViolationReport("BadDiscrepancy", (i,), f"blue minus red is {got}, expected {need}")
    return None


def brute_force_path(
    R: Sequence[ColoredPoint],
    B: Sequence[ColoredPoint],
    closed: bool,
    endpoints: Optional[tuple[int, int]] = None,
) -> Optional[AltPath]:
    """Exhaustive search for a non-crossing alternating Hamiltonian path or cycle.

    Returns None when none exists. Limited to twelve points.
    """
    points = list(R) + list(B)
    n = len(points)
    if n > BRUTE_FORCE_LIMIT:
        raise BudgetExceeded(f"exhaustive search is limited to {BRUTE_FORCE_LIMIT} points, got {n}")
    if n == 0:
        return None
    if closed and (len(R) != len(B) or n < 4):
        return None
    if not closed and abs(len(R) - len(B)) > 1:
        return None
    by_id = {p.id: p for p in points}
    if endpoints is not None and (endpoints[0] not in by_id or endpoints[1] not in by_id):
        return None

    order: list[int] = []
    segs: list[Segment] = []
    used: set[int] = set()

    def fits(seg: Segment, skip_first: bool) -> bool:
        last = len(segs) - 1
        for i, other in enumerate(segs):
            rel = segments_relation(seg, other)
            if i == last or (skip_first and i == 0):
                if rel is not SegmentRelation.SHARED_ENDPOINT:
                    return False
            elif rel is not SegmentRelation.DISJOINT:
                return False
        return True

    def grow() -> bool:
        cur = by_id[order[-1]]
        if len(order) == n:
            if endpoints is not None and order[-1] != endpoints[1]:
                return False
            if closed:
                return fits(Segment(cur.point, by_id[order[0]].point), skip_first=True)
            return True
        for q in points:
            if q.id in used or q.color is cur.color:
                continue
            if endpoints is not None and q.id == endpoints[1] and len(order) < n - 1:
                continue
            seg = Segment(cur.point, q.point)
            if not fits(seg, skip_first=False):
                continue
            order.append(q.id)
            used.add(q.id)
            segs.append(seg)
            if grow():
                return True
            segs.pop()
            used.discard(q.id)
            order.pop()
        return False

    if endpoints is not None:
        starts = [by_id[endpoints[0]]]
    elif closed:
        starts = [min(R, key=lambda p: p.id)]
    else:
        majority = Color.RED if len(R) > len(B) else Color.BLUE if len(B) > len(R) else None
        starts = [p for p in points if majority is None or p.color is majority]
    for start in starts:
        order[:] = [start.id]
        used.clear()
        used.add(start.id)
        segs.clear()
        if grow():
            return AltPath(tuple(order), closed=closed)
    return None
