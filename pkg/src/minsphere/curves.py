"""Polynomial curves S^2 -> CP^{n-1} given by projective representatives.

A :class:`VectorCurve` is a tuple of :class:`BiPoly` components.  Harmonic
sequences are built with :func:`harmonic_next`, osculating curves are measured
through Gram determinants of derivatives, and their degrees are read off as
z-degrees of those determinants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, NotHolomorphic
from .polyring import BiPoly, RationalFn, factor_hints, log_laplacian
from .scalar import RadicalScalar

Section = Tuple[RationalFn, ...]


class VectorCurve:
    __slots__ = ("components",)

    def __init__(self, components: Iterable):
        comps = tuple(c if isinstance(c, BiPoly) else BiPoly.const(c) for c in components)
        if len(comps) < 1:
            raise ValueError("a curve needs at least one component")
        self.components = comps

    @classmethod
    def constant(cls, values) -> "VectorCurve":
        return cls(BiPoly.const(v) for v in values)

    @property
    def dim(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, k):
        return self.components[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorCurve):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_holomorphic(self) -> bool:
        return all(c.is_holomorphic() for c in self.components)

    def degree_z(self) -> int:
        return max(c.degree_z() for c in self.components)

    def __add__(self, other: "VectorCurve") -> "VectorCurve":
        _check_dims(self, other)
        return VectorCurve(a + b for a, b in zip(self, other))

    def __sub__(self, other: "VectorCurve") -> "VectorCurve":
        _check_dims(self, other)
        return VectorCurve(a - b for a, b in zip(self, other))

    def __neg__(self) -> "VectorCurve":
        return VectorCurve(-a for a in self)

    def scale(self, c) -> "VectorCurve":
        """Multiply every component by a scalar or a BiPoly."""
        if isinstance(c, BiPoly):
            return VectorCurve(a * c for a in self)
        return VectorCurve(a.scale(c) for a in self)

    def d_z(self) -> "VectorCurve":
        return VectorCurve(a.d_z() for a in self)

    def d_zbar(self) -> "VectorCurve":
        return VectorCurve(a.d_zbar() for a in self)

    def conj_swap(self) -> "VectorCurve":
        """The conjugate curve ``fbar`` (componentwise ``conj_swap``)."""
        return VectorCurve(a.conj_swap() for a in self)

    def padded(self, n: int) -> "VectorCurve":
        if n < self.dim:
            raise ValueError(f"cannot pad a {self.dim}-curve to {n}")
        return VectorCurve(self.components + (BiPoly(),) * (n - self.dim))

    def apply(self, matrix: Sequence[Sequence]) -> "VectorCurve":
        """Left-multiply by a constant matrix of scalars."""
        if any(len(row) != self.dim for row in matrix):
            raise DimensionMismatch("matrix columns do not match curve dimension")
        out = []
        for row in matrix:
            acc = BiPoly()
            for c, comp in zip(row, self.components):
                if c:
                    acc = acc + comp.scale(c)
            out.append(acc)
        return VectorCurve(out)

    def eval(self, z0):
        import numpy as np

        return np.stack([np.asarray(c.eval(z0)) for c in self.components], axis=-1)

    def to_json(self) -> dict:
        return {"dim": self.dim, "components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data) -> "VectorCurve":
        comps = [BiPoly.from_json(c) for c in data["components"]]
        if "dim" in data and int(data["dim"]) != len(comps):
            raise ValueError(f"dim {data['dim']} does not match {len(comps)} components")
        return cls(comps)

    def __repr__(self) -> str:
        return "VectorCurve(" + ", ".join(str(c) for c in self.components) + ")"


def _check_dims(f, g) -> None:
    if len(f) != len(g):
        raise DimensionMismatch(f"dimension mismatch: {len(f)} vs {len(g)}")


# -- Veronese curves ---------------------------------------------------

def veronese(n: int, i: int) -> VectorCurve:
    """The i-th Veronese curve in CP^n, with the ``(1+z zbar)^-i`` factor cleared."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"Veronese index out of range: n={n}, i={i}")
    comps = []
    for j in range(n + 1):
        root = RadicalScalar.sqrt(comb(n, j)) * factorial(i)
        terms = {}
        for k in range(0, n + 1):
            c = comb(j, i - k) if 0 <= i - k <= j else 0
            c *= comb(n - j, k)
            if not c:
                continue
            # z^(j-i) (z zbar)^k; polynomial because c != 0 forces k >= i - j
            terms[(j - i + k, k)] = root * ((-1) ** k * c)
        comps.append(BiPoly(terms))
    return VectorCurve(comps)


# -- pairings ------------------------------------------------------------

def hermitian_pairing(f: VectorCurve, g: VectorCurve) -> BiPoly:
    """``sum_k f_k * conj(g_k)``."""
    _check_dims(f, g)
    acc = BiPoly()
    for a, b in zip(f, g):
        if a and b:
            acc = acc + a * b.conj_swap()
    return acc


def bilinear_pairing(f: VectorCurve, g: VectorCurve) -> BiPoly:
    """``sum_k f_k * g_k`` with no conjugation."""
    _check_dims(f, g)
    acc = BiPoly()
    for a, b in zip(f, g):
        if a and b:
            acc = acc + a * b
    return acc


def norm2(f: VectorCurve) -> BiPoly:
    return hermitian_pairing(f, f)


def quadric_residual(f: VectorCurve) -> BiPoly:
    """Zero exactly when [f] lies in the quadric sum Z_k^2 = 0."""
    return bilinear_pairing(f, f)


# -- harmonic sequences ----------------------------------------------------

def harmonic_next(f: VectorCurve) -> VectorCurve:
    """Polynomial representative ``|f|^2 df - <df, f> f`` of the next member."""
    if f.is_zero():
        raise ValueError("harmonic_next of the zero curve")
    df = f.d_z()
    return df.scale(norm2(f)) - f.scale(hermitian_pairing(df, f))


def harmonic_sequence(f: VectorCurve, k: int) -> List[VectorCurve]:
    """Representatives of f, its next member, ... (``k`` steps); stops at zero."""
    seq = [f]
    for _ in range(k):
        if seq[-1].is_zero():
            break
        seq.append(_strip_common_monomial(harmonic_next(seq[-1])))
    return seq


def _strip_common_monomial(f: VectorCurve) -> VectorCurve:
    nz = [c for c in f if c]
    if not nz:
        return f
    ea = min(c.min_exponents()[0] for c in nz)
    eb = min(c.min_exponents()[1] for c in nz)
    if not ea and not eb:
        return f
    return VectorCurve(c.shift(-ea, -eb) for c in f)


# -- rational sections ------------------------------------------------------

def section_norm2(s: Sequence[RationalFn], factors: Sequence[BiPoly] = ()) -> RationalFn:
    acc = RationalFn(BiPoly())
    for c in s:
        if not c.is_zero():
            acc = acc + c * c.conj_swap()
    return acc.reduce(factors)


def section_pairing(s: Sequence[RationalFn], t: Sequence[RationalFn]) -> RationalFn:
    acc = RationalFn(BiPoly())
    for a, b in zip(s, t):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b.conj_swap()
    return acc


def as_section(f: VectorCurve) -> Section:
    return tuple(RationalFn(c) for c in f)


def normalized_sequence(f0: VectorCurve, k: int, factors: Sequence[BiPoly] = ()) -> List[Section]:
    """Sections f_0 = f0, f_{i+1} = d f_i - (<d f_i, f_i>/|f_i|^2) f_i.

    ``factors`` are polynomials used to cancel common factors between steps;
    they never change values.
    """
    if not f0.is_holomorphic():
        raise NotHolomorphic("normalized_sequence needs a holomorphic base curve")
    seq = [as_section(f0)]
    for _ in range(k):
        f = seq[-1]
        if all(c.is_zero() for c in f):
            break
        df = tuple(c.d_z().reduce(factors) for c in f)
        n2 = section_norm2(f, factors)
        coef = (section_pairing(df, f) / n2).reduce(factors)
        seq.append(tuple((a - coef * b).reduce(factors) for a, b in zip(df, f)))
    return seq


# -- osculating flags ------------------------------------------------------------

def gram_matrix(f0: VectorCurve, i: int) -> List[List[BiPoly]]:
    derivs = [f0]
    for _ in range(i):
        derivs.append(derivs[-1].d_z())
    return [[hermitian_pairing(a, b) for b in derivs] for a in derivs]


def leading_minors(m: List[List[BiPoly]]) -> List[BiPoly]:
    """All leading principal minors via fraction-free (Bareiss) elimination."""
    n = len(m)
    a = [row[:] for row in m]
    minors = []
    prev = BiPoly.const(1)
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot.is_zero():
            minors.extend(BiPoly() for _ in range(n - k - 1))
            break
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                t = pivot * a[r][c] - a[r][k] * a[k][c]
                q = t.exact_div(prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                a[r][c] = q
        prev = pivot
    return minors


def _require_holomorphic(f0: VectorCurve) -> None:
    if not f0.is_holomorphic():
        raise NotHolomorphic("base curve depends on zbar")


def gram_det(f0: VectorCurve, i: int) -> BiPoly:
    """``|F_i|^2 = |f0 ^ df0 ^ ... ^ d^i f0|^2`` as a Gram determinant."""
    _require_holomorphic(f0)
    return leading_minors(gram_matrix(f0, i))[i]


@dataclass
class OsculatingFlag:
    base: VectorCurve
    gram_dets: List[BiPoly]
    l_coeffs: List[RationalFn] = field(default_factory=list)
    degrees: List[int] = field(default_factory=list)

    @property
    def top(self) -> int:
        """Index of the last nonzero osculating curve."""
        return len(self.gram_dets) - 1


def osculating_flag(f0: VectorCurve, k: Optional[int] = None) -> OsculatingFlag:
    """Gram determinants, l-coefficients and degrees of the osculating curves.

    Without ``k`` the flag runs until the curve's span is exhausted.
    """
    _require_holomorphic(f0)
    if f0.is_zero():
        raise ValueError("zero curve has no osculating flag")
    kmax = f0.dim - 1 if k is None else min(k, f0.dim - 1)
    minors = leading_minors(gram_matrix(f0, kmax))
    dets = []
    for m in minors:
        if m.is_zero():
            break
        dets.append(m)
    ls = [log_laplacian(d).reduce(factor_hints([d])) for d in dets]
    degs = [d.degree_z() for d in dets]
    return OsculatingFlag(f0, dets, ls, degs)


def l_coefficient(flag: OsculatingFlag, i: int) -> RationalFn:
    if i < 0 or i > flag.top:
        return RationalFn(BiPoly())
    return flag.l_coeffs[i]


def holomorphic_degree(flag: OsculatingFlag, i: int) -> int:
    if i < 0 or i > flag.top:
        return 0
    return flag.degrees[i]


def cpn_metric(flag: OsculatingFlag, i: int) -> RationalFn:
    """Metric coefficient ``l_{i-1} + l_i`` of the i-th member in CP^n."""
    hints = factor_hints(flag.gram_dets)
    return (l_coefficient(flag, i - 1) + l_coefficient(flag, i)).reduce(hints)


def wedge(f: VectorCurve, g: VectorCurve) -> VectorCurve:
    """2x2 minors ``f_a g_b - f_b g_a`` for ``a < b`` in lexicographic order."""
    _check_dims(f, g)
    return VectorCurve(f[a] * g[b] - f[b] * g[a] for a, b in combinations(range(f.dim), 2))


def isotropy_conditions(f0: VectorCurve, k: int) -> List[bool]:
    """``[<d^(i) f0, conj f0> == 0 for i in 0..k]`` along the harmonic sequence."""
    _require_holomorphic(f0)
    seq = harmonic_sequence(f0, k)
    out = []
    for i in range(k + 1):
        g = seq[i] if i < len(seq) else VectorCurve([BiPoly()] * f0.dim)
        out.append(bilinear_pairing(g, f0).is_zero())
    return out
