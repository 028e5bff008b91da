# %% [markdown]
# # Why the geometry is exact
#
# Every coordinate is an int or a Fraction. Here three points are built on
# one line and the last one is nudged by 2**-60. Floating point loses the
# nudge; the exact predicate keeps it.

# %%
from fractions import Fraction

from altpath.geom import Point, orientation

a = Point(Fraction(1, 3), Fraction(2, 7))
b = Point(Fraction(10, 3), Fraction(9, 7))
lam = Fraction(12345, 77)
c = Point(a.x + lam * (b.x - a.x), a.y + lam * (b.y - a.y) + Fraction(1, 2**60))


def float_orientation(p, q, r):
    px, py, qx, qy, rx, ry = map(float, (*p, *q, *r))
    d = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    return (d > 0) - (d < 0)


print("exact:", orientation(a, b, c).name)
print("float:", {1: "COUNTERCLOCKWISE", -1: "CLOCKWISE", 0: "COLLINEAR"}[float_orientation(a, b, c)])
