# %% [markdown]
# # Open paths and the exhaustive oracle
#
# With one color in surplus the cycle cannot close. The solver adds one
# temporary point of the scarce color, closes a cycle, and removes the
# temporary vertex again. On tiny inputs we can compare with a brute-force
# search over all alternating orders.

# %%
from altpath import GenParams, brute_force_path, generate, open_path, verify_path

inst = generate(GenParams(s=3, n_blue=4, n_red_outside=0, seed=11, coordinate_range=100))
print("red:", [tuple(map(str, p.point)) for p in inst.red])
print("blue:", [tuple(map(str, p.point)) for p in inst.blue])

# %%
path = open_path(inst, seed=0)
print("solver:", path.order, verify_path(inst.points, path) or "Ok")

found = brute_force_path(list(inst.red), list(inst.blue), closed=False)
print("oracle:", found.order, verify_path(inst.points, found) or "Ok")

# %% [markdown]
# Different seeds move the temporary point and can give a different, equally
# valid path.

# %%
for seed in range(3):
    print(seed, open_path(inst, seed=seed).order)
