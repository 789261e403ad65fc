# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # The cone of 2 x k plane partitions
#
# A 2 x k plane partition is a pair of partitions mu <= lam with at most k
# parts. Its lattice points fill a rational cone whose extremal rays are the
# indicator vectors of nonempty up-sets of the 2 x k grid.

# %%
import math

from ppgf.conegeom import catalan, decompose, is_irreducible, linear_extensions, rays_Uk, triangulation

# %%
for i, r in enumerate(rays_Uk(2)):
    print(f"{i:02}", r)

# %% [markdown]
# There are binom(k+2, 2) - 1 rays, and they are exactly the Hilbert basis.

# %%
for k in range(2, 8):
    print(k, len(rays_Uk(k)), math.comb(k + 2, 2) - 1)

p = (3, 2, 2, 1)
print(p, "->", decompose(p, 2), "irreducible:", is_irreducible(p, 2))

# %% [markdown]
# Each linear extension of the grid poset gives one unimodular cone of the
# canonical triangulation, so the cone count is a Catalan number.

# %%
for k in range(2, 9):
    print(k, len(linear_extensions(k)), catalan(k))

for cone in triangulation(3):
    print(cone.rays, "marked:", cone.halfopen_marks)
