# %% [markdown]
# # Exact arithmetic
#
# Every quantity in minsphere is exact.  Scalars are sums of rational multiples
# of square roots with Gaussian rational coefficients, and functions on the
# sphere are polynomials in z and zbar, or quotients of them.

# %%
from minsphere.polyring import ONE, Z, ZBAR, RationalFn, log_laplacian
from minsphere.scalar import I, sqrt

r = sqrt(2) + sqrt(3) * I
print("r          =", r)
print("1 / r      =", r.inverse())
print("r * (1/r)  =", r * r.inverse())
print("sqrt(8)    =", sqrt(8))

# %% [markdown]
# Polynomials carry a conjugation that swaps z and zbar, and rational
# functions are compared by cross multiplication, so no canonical form is
# needed to decide equality.

# %%
p = ONE + Z * ZBAR
f = RationalFn(p * p, p)
print("(1+x)^2/(1+x) == 1+x:", f == RationalFn(p))
print("d_z log(1+x):", RationalFn(p.d_z(), p))

# %% [markdown]
# The Fubini-Study density of the round sphere comes out of
# ``d_z d_zbar log``:

# %%
print("d d-bar log (1+x) =", log_laplacian(p))

# %% [markdown]
# Numeric samples are available for plotting or spot checks.

# %%
print("value at z = 1+i:", log_laplacian(p).eval(1 + 1j))
