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
# # Partition analysis with Omega
#
# Tag every inequality of the 2 x 2 box with an elimination variable, then
# keep only the nonnegative part in each of them.

# %%
from ppgf.omega import ap_step, omega_eliminate, omega_nonnegative_part, p21, p22_stages, p22_via_omega
from ppgf.ratgf import gf_clear_to
from ppgf.recursion import denominator_Dk, numerator

# %%
for stage in p22_stages():
    print(stage.elim, len(stage.terms), "terms")

p22 = p22_via_omega()
print(p22.value)
print(p22.renamed())

# %% [markdown]
# The elimination is checked against its definition on truncated series.

# %%
form = p22_stages()[0]
out = omega_eliminate(form, "mu11")
print(omega_nonnegative_part(form.series(6), form, "mu11") == out.series(6))

# %% [markdown]
# Adding one column at a time gives p_{2,n+1} from p_{2,n}.

# %%
box = p21()
for k in (2, 3, 4):
    box = ap_step(box)
    print(k, gf_clear_to(box.renamed(), denominator_Dk(k)) == numerator(k, tilde=True))
