# %% [markdown]
# # Building curves from polynomial seeds
#
# Any polynomial F0 with nonzero bilinear square integrates to a curve
# F1 = (2H, 1 - <H,H>, i(1 + <H,H>)) on the quadric whose self-contact
# vanishes to first order.  Such curves are the raw material for mixed pairs.

# %%
from minsphere import construct as C
from minsphere.curves import VectorCurve, isotropy_conditions, quadric_residual
from minsphere.polyring import ONE, Z

for seed in ([ONE], [ONE, Z], [Z, ONE + Z * Z]):
    f1 = C.mixed_pair_seed(VectorCurve(seed))
    print("F1 =", f1)
    print("   quadric residual:", quadric_residual(f1), " contact:", isotropy_conditions(f1, 2))

# %% [markdown]
# Isotropic seeds are rejected, since their F1 would degenerate.

# %%
from minsphere.errors import IsotropicSeed
from minsphere.scalar import I

try:
    C.mixed_pair_seed(VectorCurve.constant([1, I]))
except IsotropicSeed as exc:
    print("rejected:", exc)
