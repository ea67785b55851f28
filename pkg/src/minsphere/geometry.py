"""Frame-free Grassmannian geometry through orthogonal projectors.

A map into a Grassmannian is represented by its Hermitian projector ``phi``.
From ``s = 2*phi - I`` we get ``A_z = s*d_z(s)/2``, the metric coefficient
``lambda2 = -tr(A_z A_zbar)``, the Gauss curvature and the norm of the second
fundamental form.  Matrices keep one shared polynomial denominator so that
products and derivatives never build nested fractions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .curves import (
    OsculatingFlag,
    VectorCurve,
    bilinear_pairing,
    hermitian_pairing,
    isotropy_conditions,
    normalized_sequence,
    norm2,
    harmonic_next,
    osculating_flag,
    section_norm2,
)
from .errors import DimensionMismatch, IsotropicSeed, NonOrthogonalFrames, ZeroMetric
from .polyring import ONE, BiPoly, RationalFn, factor_hints, log_laplacian
from .scalar import RadicalScalar


class PolyMatrix:
    """Square matrix ``entries / den`` with BiPoly entries and one BiPoly denominator."""

    __slots__ = ("rows", "den")

    def __init__(self, rows: Sequence[Sequence[BiPoly]], den: BiPoly = ONE):
        self.rows = [list(r) for r in rows]
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise DimensionMismatch("matrix must be square")
        if den.is_zero():
            raise ZeroDivisionError("zero matrix denominator")
        self.den = den

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[ONE if i == j else BiPoly() for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "PolyMatrix":
        return cls([[BiPoly() for _ in range(n)] for _ in range(n)])

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[RationalFn]]) -> "PolyMatrix":
        """Bring a grid of RationalFns over one denominator (product of distinct dens)."""
        dens: List[BiPoly] = []
        for row in entries:
            for e in row:
                e = RationalFn.of(e)
                if not e.den.is_constant() and e.den not in dens:
                    dens.append(e.den)
        den = ONE
        for d in dens:
            den = den * d
        rows = []
        for row in entries:
            out = []
            for e in row:
                e = RationalFn.of(e)
                q = den.exact_div(e.den)
                out.append(e.num * q)
            rows.append(out)
        return cls(rows, den)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> RationalFn:
        return RationalFn(self.rows[i][j], self.den)

    def entries(self) -> List[List[RationalFn]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def _check(self, other: "PolyMatrix") -> None:
        if other.dim != self.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim} differ")

    def _aligned(self, other: "PolyMatrix"):
        if self.den == other.den:
            return self.rows, other.rows, self.den
        a = [[e * other.den for e in r] for r in self.rows]
        b = [[e * self.den for e in r] for r in other.rows]
        return a, b, self.den * other.den

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        a, b, d = self._aligned(other)
        return PolyMatrix([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)], d)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        a, b, d = self._aligned(other)
        return PolyMatrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)], d)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix([[-e for e in r] for r in self.rows], self.den)

    def __mul__(self, other) -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            if isinstance(other, RationalFn):
                return PolyMatrix(
                    [[e * other.num for e in r] for r in self.rows], self.den * other.den
                )
            return PolyMatrix([[e * other for e in r] for r in self.rows], self.den)
        self._check(other)
        n = self.dim
        cols = [[other.rows[k][j] for k in range(n)] for j in range(n)]
        rows = []
        for r in self.rows:
            out = []
            for c in cols:
                acc = BiPoly()
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                out.append(acc)
            rows.append(out)
        return PolyMatrix(rows, self.den * other.den)

    __rmul__ = __mul__

    def d_z(self) -> "PolyMatrix":
        if self.den.is_constant():
            return PolyMatrix([[e.d_z() for e in r] for r in self.rows], self.den)
        dd = self.den.d_z()
        return PolyMatrix(
            [[e.d_z() * self.den - e * dd for e in r] for r in self.rows], self.den * self.den
        )

    def d_zbar(self) -> "PolyMatrix":
        if self.den.is_constant():
            return PolyMatrix([[e.d_zbar() for e in r] for r in self.rows], self.den)
        dd = self.den.d_zbar()
        return PolyMatrix(
            [[e.d_zbar() * self.den - e * dd for e in r] for r in self.rows], self.den * self.den
        )

    def conj_swap(self) -> "PolyMatrix":
        """Entrywise conjugation (the real structure on matrices)."""
        return PolyMatrix([[e.conj_swap() for e in r] for r in self.rows], self.den.conj_swap())

    def adjoint(self) -> "PolyMatrix":
        """Conjugate transpose."""
        n = self.dim
        return PolyMatrix(
            [[self.rows[j][i].conj_swap() for j in range(n)] for i in range(n)],
            self.den.conj_swap(),
        )

    def trace(self) -> RationalFn:
        acc = BiPoly()
        for i, r in enumerate(self.rows):
            acc = acc + r[i]
        return RationalFn(acc, self.den)

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def reduce(self, factors: Sequence[BiPoly] = ()) -> "PolyMatrix":
        """Divide every entry and the denominator by each factor while possible."""
        rows, den = self.rows, self.den
        if all(e.is_zero() for r in rows for e in r):
            return PolyMatrix(rows, ONE)
        for h in factors:
            if h.is_constant():
                continue
            while True:
                qd = den.exact_div(h)
                if qd is None:
                    break
                new = []
                for r in rows:
                    nr = []
                    for e in r:
                        q = e.exact_div(h)
                        if q is None:
                            break
                        nr.append(q)
                    else:
                        new.append(nr)
                        continue
                    break
                else:
                    rows, den = new, qd
                    continue
                break
        _, lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            rows = [[e.scale(inv) for e in r] for r in rows]
            den = den.scale(inv)
        return PolyMatrix(rows, den)

    def eval(self, z0):
        import numpy as np

        d = self.den.eval(z0)
        return np.array([[e.eval(z0) / d for e in r] for r in self.rows])

    def to_json(self) -> list:
        return [[self.entry(i, j).to_json() for j in range(self.dim)] for i in range(self.dim)]

    @classmethod
    def from_json(cls, data) -> "PolyMatrix":
        return cls.from_entries([[RationalFn.from_json(e) for e in row] for row in data])

    def __repr__(self) -> str:
        return f"PolyMatrix(dim={self.dim}, den={self.den})"


class ProjectionMap(PolyMatrix):
    """Hermitian orthogonal projector; ``rank`` is the number of frames it was built from."""

    __slots__ = ("rank",)

    def __init__(self, rows, den=ONE, rank: Optional[int] = None):
        super().__init__(rows, den)
        self.rank = rank

    def is_idempotent(self) -> bool:
        return PolyMatrix(self.rows, self.den) * self == self

    def is_hermitian(self) -> bool:
        return self.adjoint() == self

    def trace_value(self) -> Optional[RadicalScalar]:
        return self.trace().is_constant()

    def is_real(self) -> bool:
        """Fixed by entrywise conjugation, i.e. a point of the real Grassmannian."""
        return self.conj_swap() == self

    def invariant_report(self) -> dict:
        tr = self.trace_value()
        return {
            "idempotent": self.is_idempotent(),
            "hermitian": self.is_hermitian(),
            "trace_is_rank": tr is not None and (self.rank is None or tr == self.rank),
            "real": self.is_real(),
        }


def projector(frames: Sequence[VectorCurve]) -> ProjectionMap:
    """``sum f f^* / |f|^2`` over mutually orthogonal, nonzero frames."""
    frames = list(frames)
    if not frames:
        raise ValueError("projector needs at least one frame")
    n = frames[0].dim
    for f in frames:
        if f.dim != n:
            raise DimensionMismatch(f"frames of dims {n} and {f.dim}")
        if f.is_zero():
            raise ValueError("zero frame")
    for a in range(len(frames)):
        for b in range(a + 1, len(frames)):
            p = hermitian_pairing(frames[a], frames[b])
            if not p.is_zero():
                raise NonOrthogonalFrames((a, b), p)
    norms = [norm2(f) for f in frames]
    distinct: List[BiPoly] = []
    for N in norms:
        if N not in distinct:
            distinct.append(N)
    den = ONE
    for N in distinct:
        den = den * N
    rows = [[BiPoly() for _ in range(n)] for _ in range(n)]
    for f, N in zip(frames, norms):
        w = den.exact_div(N)
        fb = [c.conj_swap() for c in f]
        for i in range(n):
            if not f[i]:
                continue
            fi = f[i] * w
            for j in range(n):
                if fb[j]:
                    rows[i][j] = rows[i][j] + fi * fb[j]
    m = PolyMatrix(rows, den).reduce(factor_hints(distinct))
    return ProjectionMap(m.rows, m.den, rank=len(frames))


def reflection(phi: PolyMatrix) -> PolyMatrix:
    """``s = 2 phi - I``."""
    n = phi.dim
    rows = [
        [e.scale(2) - (phi.den if i == j else BiPoly()) for j, e in enumerate(r)]
        for i, r in enumerate(phi.rows)
    ]
    return PolyMatrix(rows, phi.den)


@dataclass
class TangentData:
    a_z: PolyMatrix
    a_zbar: PolyMatrix
    lambda2: RationalFn
    hints: List[BiPoly] = field(default_factory=list)


def _hints_for(*polys: BiPoly) -> List[BiPoly]:
    return factor_hints(p for p in polys if not p.is_constant())


def tangent_data(s: PolyMatrix) -> TangentData:
    """``A_z = s d_z(s) / 2`` (using ``s^-1 = s``), its partner and ``lambda2``."""
    hints = _hints_for(s.den)
    half = RadicalScalar.of(1) / 2
    a_z = (s * s.d_z()).reduce(hints) * half
    a_zbar = (s * s.d_zbar()).reduce(hints) * half
    prod = (a_z * a_zbar).reduce(hints)
    lam = (-prod.trace()).reduce(hints)
    return TangentData(a_z, a_zbar, lam, hints)


def pair_geometry(phi: PolyMatrix) -> TangentData:
    return tangent_data(reflection(phi))


def _require_metric(lambda2: RationalFn) -> None:
    if lambda2.is_zero():
        raise ZeroMetric("induced metric vanishes identically")


def gauss_curvature(lambda2: RationalFn) -> RationalFn:
    """``K = -(2 / lambda2) d_z d_zbar log lambda2``."""
    _require_metric(lambda2)
    hints = _hints_for(lambda2.num, lambda2.den)
    ll = log_laplacian(lambda2).reduce(hints)
    return (ll * (-2) / lambda2).reduce(hints)


def sff_norm(t: TangentData) -> RationalFn:
    """``4 tr(P P^*)`` with ``P = d_z(A_z / lambda2)``."""
    lam = t.lambda2
    _require_metric(lam)
    hints = _hints_for(lam.num, lam.den, t.a_z.den, *t.hints)
    q = PolyMatrix(t.a_z.rows, t.a_z.den * lam.num) * RationalFn(lam.den)
    q = q.reduce(hints)
    p = q.d_z().reduce(hints)
    acc = BiPoly()
    for r in p.rows:
        for e in r:
            if e:
                acc = acc + e * e.conj_swap()
    return RationalFn(acc.scale(4), p.den * p.den.conj_swap()).reduce(hints)


def harmonicity_residual(t: TangentData) -> PolyMatrix:
    """``d_zbar(A_z) - [A_z, A_zbar]``; zero exactly for harmonic maps."""
    lhs = t.a_z.d_zbar()
    comm = t.a_z * t.a_zbar - t.a_zbar * t.a_z
    return (lhs - comm).reduce(t.hints)


def cpn_minimality_residual(f: VectorCurve) -> List[RationalFn]:
    """Harmonic-map residual of the line ``[f]`` in projective space.

    With ``g`` the unnormalised next member of the harmonic sequence and
    ``N = |f|^2`` the returned section is

        (N d_zbar g - <d_zbar g, f> f - (d_zbar N + <d_zbar f, f>) g) / N^2

    which does not depend on the chosen representative (up to a scalar factor)
    and vanishes identically exactly when ``[f]`` is harmonic.
    """
    if f.is_zero():
        raise ValueError("zero curve")
    N = norm2(f)
    g = harmonic_next(f)
    dg = g.d_zbar()
    c1 = hermitian_pairing(dg, f)
    c2 = N.d_zbar() + hermitian_pairing(f.d_zbar(), f)
    hints = _hints_for(N)
    out = []
    for k in range(f.dim):
        num = N * dg[k] - c1 * f[k] - c2 * g[k]
        out.append(RationalFn(num, N * N).reduce(hints))
    return out


def mixed_pair_sff_closed_form(f0) -> RationalFn:
    """``2 d1/d0 - 2 |<f0, conj f2>|^2 / |f1|^4`` for a holomorphic ``f0`` with
    vanishing bilinear self-contact up to order one."""
    flag = f0 if isinstance(f0, OsculatingFlag) else osculating_flag(f0, 2)
    base = flag.base
    b = isotropy_conditions(base, 1)
    if not all(b):
        raise IsotropicSeed(f"isotropy precondition fails: {b}")
    d0, d1 = flag.degrees[0], flag.degrees[1]
    hints = factor_hints(flag.gram_dets[:3])
    secs = normalized_sequence(base, 2, hints)
    s0, s1, s2 = secs[0], secs[1], secs[2]
    contact = RationalFn(BiPoly())
    for a, c in zip(s0, s2):
        contact = contact + a * c
    contact = contact.reduce(hints)
    n1 = section_norm2(s1, hints)
    second = (contact * contact.conj_swap() / (n1 * n1)).reduce(hints)
    first = RadicalScalar.of(2 * d1) / d0
    return (RationalFn.of(first) - second * 2).reduce(hints)


@dataclass
class RelationCheck:
    index: int
    value: int
    expected: int
    passed: bool


def degree_relation_check(flag: OsculatingFlag) -> List[RelationCheck]:
    """``d_{i-1} - 2 d_i + d_{i+1} == -2`` for ``0 <= i < top`` (``d_{-1} = 0``)."""
    deg = list(flag.degrees)
    top = flag.top
    out = []
    for i in range(top):
        prev = deg[i - 1] if i > 0 else 0
        nxt = deg[i + 1] if i + 1 < len(deg) else 0
        v = prev - 2 * deg[i] + nxt
        out.append(RelationCheck(i, v, -2, v == -2))
    return out
