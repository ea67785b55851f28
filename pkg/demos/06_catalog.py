# %% [markdown]
# # The fixture catalog
#
# The bundled catalog records every curve, unitary and expected invariant
# with a short citation.  ``verify_fixture`` recomputes everything exactly;
# the ``minsphere verify`` command does the same from the shell.

# %%
from minsphere.cli import main
from minsphere.fixtures import load_catalog
from minsphere.verify import verify_fixture

for fx in load_catalog():
    rep = verify_fixture(fx)
    print(f"{fx.id:22s} {'PASS' if rep.passed else 'FAIL'}  ({len(rep.checks)} checks)")

# %%
print(verify_fixture(load_catalog()[0]).text())

# %%
main(["verify", "conic-pair"])
