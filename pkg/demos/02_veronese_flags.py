# %% [markdown]
# # Veronese flags
#
# The Veronese curve of CP^n and its harmonic sequence are the basic building
# blocks.  The osculating flag records the Gram determinants |F_i|^2, from
# which the degrees and the induced metrics follow exactly.

# %%
from minsphere.curves import VectorCurve, cpn_metric, osculating_flag, veronese
from minsphere.geometry import degree_relation_check, gauss_curvature
from minsphere.polyring import ONE, Z

for n in (2, 3, 4):
    flag = osculating_flag(veronese(n, 0))
    ks = [gauss_curvature(cpn_metric(flag, i)) for i in range(n + 1)]
    print(f"n={n}  degrees={flag.degrees}  K=" + ", ".join(str(k) for k in ks))

# %% [markdown]
# The degrees satisfy the second difference relation with value -2 on every
# unramified flag.

# %%
flag = osculating_flag(veronese(4, 0))
for r in degree_relation_check(flag):
    print(r)

# %% [markdown]
# The line (1, z^2) is ramified at the origin, and the relation picks it up.

# %%
ramified = osculating_flag(VectorCurve([ONE, Z * Z]))
print(ramified.degrees, degree_relation_check(ramified))
