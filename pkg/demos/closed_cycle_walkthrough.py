# %% [markdown]
# # A closed alternating cycle, step by step
#
# Twelve red points: six form a convex polygon and six sit outside it.
# Twelve blue points lie inside the polygon. We split the plane into one
# convex region per polygon edge, each holding one more blue than red, and
# then thread an alternating path through every region.

# %%
from pathlib import Path

from altpath import GenParams, generate, render_svg, verify_partition, verify_path
from altpath.geom import bounding_region
from altpath.paths import solve_closed

inst = generate(GenParams(s=6, n_blue=12, n_red_outside=6, seed=6))
print(f"{len(inst.red)} red, {len(inst.blue)} blue, polygon of {len(inst.polygon)}")

# %% [markdown]
# ## The partition
#
# Region i carries polygon edge i on its boundary. Counting blue minus red
# among the points assigned to it always gives 1.

# %%
cycle, part = solve_closed(inst)
by_id = inst.by_id()
for i, region in enumerate(part.regions):
    members = [by_id[pid] for pid in part.points_of(i)]
    n_blue = sum(p.color.value == "blue" for p in members)
    print(f"region {i}: {len(region)} corners, {n_blue} blue, {len(members) - n_blue} red")

box = bounding_region([p.point for p in inst.points])
poly = [p.point for p in inst.polygon_points]
print("partition check:", verify_partition(box, poly, inst.outer_red, list(inst.blue), part, [1] * 6) or "Ok")

# %% [markdown]
# ## The cycle
#
# Inside each region the points are separated by the polygon edge, so a
# path between the edge's two endpoints can be peeled off hull edge by hull
# edge. Gluing the six sub-paths at the polygon vertices closes the cycle.

# %%
print("cycle:", " ".join(str(v) for v in cycle.order))
print("path check:", verify_path(inst.points, cycle) or "Ok")

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
(out / "closed_cycle.svg").write_text(render_svg(inst, cycle, part))
print("wrote", out / "closed_cycle.svg")
