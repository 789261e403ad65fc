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
# # Multigraded rational recursion
#
# Q_k counts pairs mu <= lam with lam of length exactly k, weighted by
# x^lam y^mu. Its denominator divides D_k, the product of (1 - p_a q_c)
# over 0 <= c <= a <= k.

# %%
from ppgf.enumeration import oracle_series
from ppgf.ratgf import gf_series
from ppgf.recursion import compute_Q, compute_Qtilde, denominator_Dk, numerator

# %%
print(compute_Q(1))
print(numerator(2))
print(len(numerator(3)), "terms in the k = 3 numerator")

# %% [markdown]
# Summing Q_0 .. Q_k drops the length condition. The result is small.

# %%
print(numerator(2, tilde=True))
print(numerator(3, tilde=True))
print(denominator_Dk(2))

# %% [markdown]
# Series expansion agrees with brute-force enumeration.

# %%
for k in (1, 2, 3):
    print(k, gf_series(compute_Qtilde(k), 8) == oracle_series(k, 8))
