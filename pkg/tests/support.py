"""Instance builders and independent oracles shared by the test modules."""

import random
from fractions import Fraction
from itertools import combinations

from altpath.geom import (
    Color,
    ColoredPoint,
    ConvexRegion,
    Location,
    Point,
    bounding_region,
    collinear_with_any_pair,
    hull_vertices,
    orient_value,
    pt,
    region_contains,
)
from altpath.io import GenParams, generate
from altpath.partition import check_conditions


def det_sign(a, b, c):
    """Orientation sign straight from the 3x3 determinant with Fraction entries."""
    m = [[Fraction(1), Fraction(a[0]), Fraction(a[1])],
         [Fraction(1), Fraction(b[0]), Fraction(b[1])],
         [Fraction(1), Fraction(c[0]), Fraction(c[1])]]
    d = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return (d > 0) - (d < 0)


def shoelace2(vs):
    """Absolute twice-area of a simple polygon."""
    total = Fraction(0)
    for i in range(len(vs)):
        x1, y1 = vs[i]
        x2, y2 = vs[(i + 1) % len(vs)]
        total += Fraction(x1) * y2 - Fraction(x2) * y1
    return abs(total)


def hull_by_extreme_edges(points):
    """Hull vertex set by brute force: endpoints of edges with all points on one closed side."""
    pts = list(set(points))
    if len(pts) < 3:
        return set(pts)
    keep = set()
    for a, b in combinations(pts, 2):
        signs = {det_sign(a, b, c) for c in pts if c != a and c != b}
        if signs <= {1, 0} or signs <= {-1, 0}:
            # a and b must be the extremes of the points on their line
            beyond = [c for c in pts if c not in (a, b) and det_sign(a, b, c) == 0
                      and not (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                               and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))]
            if not beyond:
                keep.update((a, b))
    return keep


def instance(seed, s, n_blue, n_red_out, coordinate_range=1000):
    return generate(GenParams(s, n_blue, n_red_out, seed, coordinate_range))


def closed_params(seed):
    """Polygon size and color counts for one closed-case trial."""
    rng = random.Random(seed)
    s = rng.randint(3, 8)
    n_blue = rng.randint(s, 20)
    return s, n_blue, n_blue - s


def open_params(seed):
    rng = random.Random(seed)
    s = rng.randint(3, 8)
    n_red_out = rng.randint(0, 10)
    if rng.random() < 0.5:
        return s, s + n_red_out + 1, n_red_out
    return s, s + n_red_out - 1, n_red_out


def separated_instance(seed, n_blue, spread=60):
    """Reds and blues on opposite sides of the line through two red hull vertices.

    Returns (R, B, r1, r2) with |R| = |B| + 1.
    """
    rng = random.Random(seed)
    while True:
        r1 = Point(rng.randint(-spread, spread), rng.randint(-spread, spread))
        r2 = Point(rng.randint(-spread, spread), rng.randint(-spread, spread))
        if r1 == r2:
            continue
        placed = [r1, r2]
        reds, blues = [], []
        ok = True
        for want_left, count, bucket in ((True, n_blue - 1, reds), (False, n_blue, blues)):
            for _ in range(count):
                for _ in range(500):
                    q = Point(rng.randint(-spread, spread), rng.randint(-spread, spread))
                    side = det_sign(r2, r1, q)
                    if side == 0 or (side > 0) != want_left or q in placed:
                        continue
                    if collinear_with_any_pair(q, placed):
                        continue
                    placed.append(q)
                    bucket.append(q)
                    break
                else:
                    ok = False
        if not ok:
            continue
        ring = set(hull_vertices(placed))
        if r1 not in ring or r2 not in ring:
            continue
        R = [ColoredPoint(i, p, Color.RED) for i, p in enumerate([r1, r2] + reds)]
        B = [ColoredPoint(len(R) + i, p, Color.BLUE) for i, p in enumerate(blues)]
        return R, B, 0, 1


def colored(reds, blues):
    R = [ColoredPoint(i, Point(*p), Color.RED) for i, p in enumerate(reds)]
    B = [ColoredPoint(len(R) + i, Point(*p), Color.BLUE) for i, p in enumerate(blues)]
    return R, B


def random_triangle_case(seed):
    """Random clockwise triangle, blues inside, reds outside, and targets meeting the conditions."""
    rng = random.Random(seed)
    while True:
        corners = [pt(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(3)]
        if orient_value(*corners) == 0:
            continue
        tri = ConvexRegion.from_loop(corners)
        placed = list(tri.vertices)
        B, R = [], []
        for _ in range(rng.randint(0, 6)):
            for _ in range(200):
                q = pt(rng.randint(-30, 30), rng.randint(-30, 30))
                if q not in placed and region_contains(tri, q) is Location.INTERIOR and not collinear_with_any_pair(q, placed):
                    placed.append(q)
                    B.append(ColoredPoint(len(placed), q, Color.BLUE))
                    break
        for _ in range(rng.randint(0, 4)):
            for _ in range(200):
                q = pt(rng.randint(-45, 45), rng.randint(-45, 45))
                if q not in placed and region_contains(tri, q) is Location.OUTSIDE and not collinear_with_any_pair(q, placed):
                    placed.append(q)
                    R.append(ColoredPoint(len(placed), q, Color.RED))
                    break
        box = bounding_region(placed)
        total = len(B) - len(R)
        for _ in range(50):
            t1 = rng.randint(-len(R) - 1, len(B) + 1)
            t2 = rng.randint(-len(R) - 1, len(B) + 1)
            t = (t1, t2, total - t1 - t2)
            if check_conditions(box, list(tri.vertices), R, B, t) is None:
                return box, tri.vertices, B, R, t
