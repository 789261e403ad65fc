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
# # One y variable
#
# Setting y_j = y for all j gives the bigraded function of the original
# recursion. The denominator becomes a product of (1 - y^j p_m).

# %%
from ppgf.ratgf import gf_series
from ppgf.recursion import compute_Q, denominator_Dk, specialize_single_y

# %%
for k in range(1, 5):
    print(k, specialize_single_y(denominator_Dk(k), k))

# %%
q2 = specialize_single_y(compute_Q(2), 2)
series = gf_series(q2, 6)
for e, c in series.terms():
    if e[:2] == (2, 1):
        print(f"lam = (2, 1), |mu| = {e[2]}: {c}")
