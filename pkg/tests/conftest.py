import sys
from fractions import Fraction

from gmpy2 import mpq
from hypothesis import settings, strategies as st

from minsphere.curves import VectorCurve
from minsphere.polyring import BiPoly
from minsphere.scalar import RadicalScalar

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

RADICANDS = [1, 2, 3, 5, 6, 10]

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(
    lambda f: mpq(f.numerator, f.denominator)
)


@st.composite
def scalars(draw, radicands=RADICANDS, max_terms=3):
    ms = draw(st.lists(st.sampled_from(radicands), max_size=max_terms, unique=True))
    return RadicalScalar({m: (draw(small_q), draw(small_q)) for m in ms})


nonzero_scalars = scalars().filter(bool)


@st.composite
def bipolys(draw, max_deg=3, max_terms=4, holomorphic=False, coeffs=None):
    coeffs = scalars(radicands=[1, 2], max_terms=2) if coeffs is None else coeffs
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        a = draw(st.integers(0, max_deg))
        b = 0 if holomorphic else draw(st.integers(0, max_deg))
        terms[(a, b)] = draw(coeffs)
    return BiPoly(terms)


@st.composite
def holomorphic_curves(draw, dim=st.integers(1, 3), max_deg=2):
    n = draw(dim)
    gauss = st.builds(lambda a, b: RadicalScalar.gaussian(a, b), st.integers(-3, 3), st.integers(-3, 3))
    comps = [draw(bipolys(max_deg=max_deg, max_terms=3, holomorphic=True, coeffs=gauss)) for _ in range(n)]
    return VectorCurve(comps)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
