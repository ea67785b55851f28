# %% [markdown]
# # Unitary data and W patterns
#
# Each pair above is a unitary image U V of a Veronese curve.  The symmetric
# unitary W = U^T U controls the bilinear contact of U V with itself, and the
# admissible W fall into a few linear patterns.

# %%
from minsphere import construct as C
from minsphere.curves import veronese
from minsphere.scalar import sqrt

u = C.u_cubic()
print("U unitary:", C.is_unitary(u))
print("sqrt(2) U V_0 is the cubic:", veronese(3, 0).padded(6).apply(u).scale(sqrt(2)) == C.curve_cubic())
print("W = U^T U:", C.mat_mul(C.transpose(u), u) == C.w_cubic())

# %%
for tag in C.PATTERNS:
    rep = C.w_pattern_check(C.w_cubic(), tag)
    print(f"{tag:10s} pass={rep.passed}  violated: {[v.constraint for v in rep.violations()]}")

# %% [markdown]
# The fundamental identities V_i^T W V_0 vanish exactly up to the contact
# order of the curve.

# %%
for name, u, m in [("cubic", C.u_cubic(), 3), ("conic", C.u_conic(), 2), ("isotropic", C.u0_completed(), 2)]:
    res = [C.fundamental_identity_check(u, m, i) for i in range(3)]
    print(name, ["0" if r.is_zero() else str(r) for r in res])
