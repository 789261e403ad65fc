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
# # Numerators from truncated series
#
# Multiplying a truncated series of Q~_k by D_k and cutting at a fixed
# degree recovers the numerator once the series is long enough.

# %%
from ppgf.ratgf import gf_series, truncated_product
from ppgf.recursion import compute_Qtilde, denominator_Dk, numerator

# %%
target = numerator(2, tilde=True)
for n in range(1, 11):
    approx = truncated_product(gf_series(compute_Qtilde(2), n), denominator_Dk(2), 6)
    print(n, approx == target, approx if len(approx) < 8 else f"{len(approx)} terms")

# %% [markdown]
# Grading by the size of lam alone (ignoring mu) shifts when stabilization
# happens, but not the limit.

# %%
for n in range(1, 11):
    s = gf_series(compute_Qtilde(2), n - 1, degree=lambda e: e[0] + e[1])
    print(n, truncated_product(s, denominator_Dk(2), 6) == target)
