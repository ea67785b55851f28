# %% [markdown]
# # Minimal two-spheres from real mixed pairs
#
# A holomorphic curve f on the quadric sum f_k^2 = 0 spans, together with its
# conjugate, a real 2-plane.  That plane defines a harmonic map of the sphere
# into G(2,6;R), whose metric, curvature and second fundamental form we
# compute exactly.

# %%
from minsphere import construct as C
from minsphere.geometry import (
    gauss_curvature,
    harmonicity_residual,
    mixed_pair_sff_closed_form,
    pair_geometry,
    sff_norm,
)

for name, make in [("cubic", C.curve_cubic), ("conic", C.curve_conic),
                   ("isotropic conic", C.curve_isotropic_conic),
                   ("middle Veronese", C.curve_veronese_middle)]:
    phi = C.assemble_real_pair(make())
    t = pair_geometry(phi)
    print(f"{name:16s} lambda2 = {t.lambda2}")
    print(f"{'':16s} K = {gauss_curvature(t.lambda2)},  |B|^2 = {sff_norm(t)}")
    print(f"{'':16s} harmonic: {harmonicity_residual(t).is_zero()}")

# %% [markdown]
# For the cubic the norm of B is not constant, so the sphere has constant
# curvature without being homogeneous.  The closed form in terms of the
# normalised harmonic sequence agrees with the direct computation.

# %%
b = sff_norm(pair_geometry(C.assemble_real_pair(C.curve_cubic())))
print("constant?", b.is_constant())
print("closed form agrees:", mixed_pair_sff_closed_form(C.curve_cubic()) == b)
print("samples:", [round(float(abs(b.eval(r))), 4) for r in (0, 0.5, 1, 2, 10)])

# %% [markdown]
# Sum pairs take two orthogonal curves instead.  The middle curve of the
# quartic Veronese sequence, placed in real position, paired with a constant
# vector gives curvature 1/3.

# %%
t = pair_geometry(C.assemble_sum_pair(C.curve_quartic_middle(), C.c0()))
print("K =", gauss_curvature(t.lambda2), " |B|^2 =", sff_norm(t))
