"""Constructions of real mixed pairs and their unitary data.

The builder takes a polynomial seed ``F0``, integrates it to ``H`` and forms
``F1 = (2H, 1 - <H,H>, i(1 + <H,H>))``, a holomorphic curve whose bilinear
self-contact vanishes to first order.  Unitary matrices ``U`` carry Veronese
curves onto such curves; their symmetric squares ``W = U^T U`` fall into a few
linear patterns that are checked here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .curves import (
    VectorCurve,
    bilinear_pairing,
    hermitian_pairing,
    norm2,
    quadric_residual,
    veronese,
)
from .errors import (
    DimensionMismatch,
    IsotropicSeed,
    NonOrthogonalFrames,
    NotHolomorphic,
    NotSymmetric,
    NotUnitary,
    PreconditionError,
)
from .geometry import ProjectionMap, projector
from .polyring import BiPoly, RationalFn, factor_hints
from .scalar import I, RadicalScalar, sqrt

Matrix = List[List[RadicalScalar]]


# -- constant matrices -------------------------------------------------------

def as_matrix(rows) -> Matrix:
    out = [[RadicalScalar.of(c) for c in r] for r in rows]
    if any(len(r) != len(out[0]) for r in out):
        raise DimensionMismatch("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return [[RadicalScalar.of(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def adjoint(a: Matrix) -> Matrix:
    return [[c.conjugate() for c in col] for col in zip(*a)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = list(zip(*b))
    out = []
    for r in a:
        row = []
        for c in cols:
            acc = RadicalScalar()
            for x, y in zip(r, c):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def is_unitary(u: Matrix) -> bool:
    n = len(u)
    return all(len(r) == n for r in u) and mat_mul(u, adjoint(u)) == identity(n)


def matrix_to_json(a: Matrix) -> list:
    return [[c.to_json() for c in r] for r in a]


def matrix_from_json(data) -> Matrix:
    return as_matrix([[RadicalScalar.from_json(c) for c in r] for r in data])


class SymmetricUnitary:
    """A constant matrix ``W`` with ``W^T == W`` and ``W W^* == I``."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        w = as_matrix(rows)
        n = len(w)
        if any(len(r) != n for r in w):
            raise DimensionMismatch("W must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if w[i][j] != w[j][i]:
                    raise NotSymmetric(f"w[{i}][{j}] != w[{j}][{i}]")
        if not is_unitary(w):
            raise NotUnitary("W W^* is not the identity")
        self.entries = w

    @classmethod
    def from_unitary(cls, u) -> "SymmetricUnitary":
        u = as_matrix(u)
        if not is_unitary(u):
            raise NotUnitary("U U^* is not the identity")
        return cls(mat_mul(transpose(u), u))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> RadicalScalar:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, SymmetricUnitary):
            return self.entries == other.entries
        return NotImplemented

    __hash__ = None

    def to_json(self) -> list:
        return matrix_to_json(self.entries)

    def __repr__(self) -> str:
        return f"SymmetricUnitary(dim={self.dim})"


# -- W patterns -----------------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    """``sum coeffs[(i, j)] * w_ij == 0``, or ``!= 0`` when ``nonzero`` is set."""

    coeffs: Tuple[Tuple[Tuple[int, int], RadicalScalar], ...]
    nonzero: bool = False

    def value(self, w: SymmetricUnitary) -> RadicalScalar:
        acc = RadicalScalar()
        for (i, j), c in self.coeffs:
            acc = acc + c * w[i, j]
        return acc

    def holds(self, w: SymmetricUnitary) -> bool:
        return bool(self.value(w)) == self.nonzero

    def entries(self) -> List[str]:
        return [f"w{i}{j}" for (i, j), _ in self.coeffs]

    def __str__(self) -> str:
        parts = []
        for (i, j), c in self.coeffs:
            parts.append(f"w{i}{j}" if c == 1 else f"({c})*w{i}{j}")
        return " + ".join(parts) + (" != 0" if self.nonzero else " == 0")


def _eq(*terms) -> Constraint:
    # terms are (coefficient, i, j)
    return Constraint(tuple(((i, j), RadicalScalar.of(c)) for c, i, j in terms))


def _zero(i: int, j: int) -> Constraint:
    return _eq((1, i, j))


@dataclass(frozen=True)
class WPattern:
    tag: str
    description: str
    constraints: Tuple[Constraint, ...]


_TWO_ROOT3_THIRDS = sqrt(3) * mpq(2, 3)

# twisted cubic: bilinear contact of orders zero and one vanishes
CUBIC = WPattern(
    "cubic",
    "W for a real mixed pair over the twisted cubic",
    (
        _zero(0, 0),
        _zero(0, 1),
        _eq((1, 1, 1), (_TWO_ROOT3_THIRDS, 0, 2)),
        _eq((1, 1, 2), (mpq(1, 3), 0, 3)),
        _eq((1, 2, 2), (_TWO_ROOT3_THIRDS, 1, 3)),
        _zero(2, 3),
        _zero(3, 3),
    ),
)

# conic: same conditions, plus a nonzero second-order contact
CONIC = WPattern(
    "conic",
    "W for a real mixed pair over the conic",
    (
        _zero(0, 0),
        _zero(0, 1),
        _eq((1, 1, 1), (1, 0, 2)),
        _zero(1, 2),
        _zero(2, 2),
        Constraint((((0, 2), RadicalScalar.of(1)),), nonzero=True),
    ),
)

# conic lying in a totally isotropic 3-plane: the leading 3x3 block vanishes
ZERO_BLOCK = WPattern(
    "zero-block",
    "W whose leading 3x3 block is zero",
    tuple(_zero(i, j) for i in range(3) for j in range(i, 3)),
)

PATTERNS: Dict[str, WPattern] = {p.tag: p for p in (CUBIC, CONIC, ZERO_BLOCK)}


@dataclass
class ConstraintResult:
    constraint: str
    entries: List[str]
    value: RadicalScalar
    passed: bool
    expected: str = "== 0"


@dataclass
class PatternReport:
    tag: str
    results: List[ConstraintResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def violations(self) -> List[ConstraintResult]:
        return [r for r in self.results if not r.passed]


def w_pattern_check(w, pattern) -> PatternReport:
    if not isinstance(w, SymmetricUnitary):
        w = SymmetricUnitary(w)
    if isinstance(pattern, str):
        if pattern not in PATTERNS:
            raise KeyError(f"unknown W pattern {pattern!r}; known: {sorted(PATTERNS)}")
        pattern = PATTERNS[pattern]
    if w.dim != 6:
        raise DimensionMismatch("W patterns are stated for 6x6 matrices")
    rep = PatternReport(pattern.tag)
    for c in pattern.constraints:
        rep.results.append(ConstraintResult(
            str(c), c.entries(), c.value(w), c.holds(w), "!= 0" if c.nonzero else "== 0"
        ))
    return rep


def fundamental_identity_check(u, m: int, i: int) -> BiPoly:
    """``V_i^T W V_0`` with ``W = U^T U`` and Veronese curves of ``CP^m`` padded to dim U."""
    u = as_matrix(u)
    if not is_unitary(u):
        raise NotUnitary("U U^* is not the identity")
    return fundamental_identity_from_w(mat_mul(transpose(u), u), m, i)


def fundamental_identity_from_w(w, m: int, i: int) -> BiPoly:
    """``V_i^T W V_0`` for a constant matrix ``W``."""
    if isinstance(w, SymmetricUnitary):
        w = w.entries
    n = len(w)
    if m + 1 > n:
        raise DimensionMismatch(f"Veronese curve of CP^{m} does not fit in dim {n}")
    v0 = veronese(m, 0).padded(n)
    vi = veronese(m, i).padded(n)
    return bilinear_pairing(vi, v0.apply(w))


# -- mixed pair seeds ----------------------------------------------------------

def antiderivative(f0: VectorCurve) -> VectorCurve:
    """Componentwise primitive in z vanishing at z = 0."""
    if not f0.is_holomorphic():
        raise NotHolomorphic("antiderivative needs a curve free of zbar")
    comps = []
    for c in f0:
        comps.append(BiPoly({(a + 1, 0): v * mpq(1, a + 1) for (a, _), v in c.items()}))
    return VectorCurve(comps)


def mixed_pair_seed(f0: VectorCurve) -> VectorCurve:
    """``(2H, 1 - <H,H>, i(1 + <H,H>))`` with ``dH/dz = f0`` and ``H(0) = 0``."""
    if not f0.is_holomorphic():
        raise NotHolomorphic("seed must be holomorphic")
    if bilinear_pairing(f0, f0).is_zero():
        raise IsotropicSeed("seed is isotropic: <F0, conj F0> vanishes")
    h = antiderivative(f0)
    s = bilinear_pairing(h, h)
    one = BiPoly.const(1)
    return VectorCurve(list(h.scale(2)) + [one - s, (one + s).scale(I)])


def coefficient_ode_residual(x, f0: VectorCurve) -> RationalFn:
    """``d_z x + x d_z log |f0|^2``."""
    if f0.is_zero():
        raise ValueError("zero curve")
    x = RationalFn.of(x)
    n = norm2(f0)
    hints = factor_hints([n, x.den])
    return (x.d_z() + x * RationalFn(n.d_z(), n)).reduce(hints)


# -- pair assembly -----------------------------------------------------------------

def assemble_real_pair(f: VectorCurve) -> ProjectionMap:
    """Projector onto ``span(conj f, f)``; needs ``f`` on the quadric."""
    q = quadric_residual(f)
    if not q.is_zero():
        raise PreconditionError(f"curve is not on the quadric: sum f_k^2 = {q}")
    return projector([f.conj_swap(), f])


def assemble_sum_pair(f: VectorCurve, g: VectorCurve) -> ProjectionMap:
    """Projector onto ``span(f, g)`` for pointwise orthogonal ``f`` and ``g``."""
    p = hermitian_pairing(f, g)
    if not p.is_zero():
        raise NonOrthogonalFrames((0, 1), p)
    return projector([f, g])


# -- explicit data -------------------------------------------------------------------

_R2, _R3 = sqrt(2), sqrt(3)
_H = _R2.inverse()  # 1/sqrt(2)
_Z, _ZB = BiPoly.z(), BiPoly.zbar()
_X = _Z * _ZB
_ONE = BiPoly.const(1)


def _q(p: int, q: int = 1) -> RadicalScalar:
    return RadicalScalar.of(mpq(p, q))


def u_cubic() -> Matrix:
    """Unitary carrying the twisted cubic into the quadric (K = 2/3 pair)."""
    h, i = _H, I
    a = _H * _q(1, 3)  # 1/(3 sqrt 2)
    return as_matrix([
        [h, 0, 0, h, 0, 0],
        [i * h, 0, 0, -i * h, 0, 0],
        [0, h, -a, 0, _q(2, 3), 0],
        [0, i * h, i * a, 0, -i * _q(2, 3), 0],
        [0, 0, _q(2, 3), 0, a, h],
        [0, 0, i * _q(2, 3), 0, i * a, -i * h],
    ])


def w_cubic() -> Matrix:
    r8 = sqrt(8) * _q(1, 3)
    t = _q(-1, 3)
    return as_matrix([
        [0, 0, 0, 1, 0, 0],
        [0, 0, t, 0, r8, 0],
        [0, t, 0, 0, 0, r8],
        [1, 0, 0, 0, 0, 0],
        [0, r8, 0, 0, 0, _q(1, 3)],
        [0, 0, r8, 0, _q(1, 3), 0],
    ])


def u_conic() -> Matrix:
    """Unitary carrying the conic into the quadric (K = 1, non-isotropic pair)."""
    h, i = _H, I
    e = _H * _q(1, 2)  # 1/(2 sqrt 2)
    r3e = _R3 * e
    half, r3half = _q(1, 2), _R3 * _q(1, 2)
    return as_matrix([
        [h, 0, e, 0, 0, -r3e],
        [i * h, 0, -i * e, 0, 0, i * r3e],
        [0, 0, -i * r3e, -i * h, 0, -i * e],
        [0, 0, -r3e, h, 0, -e],
        [0, half, 0, 0, -r3half, 0],
        [0, -i * r3half, 0, 0, -i * half, 0],
    ])


def w_conic() -> Matrix:
    half, r = _q(1, 2), _R3 * _q(-1, 2)
    return as_matrix([
        [0, 0, half, 0, 0, r],
        [0, -half, 0, 0, r, 0],
        [half, 0, 0, r, 0, 0],
        [0, 0, r, 0, 0, -half],
        [0, r, 0, 0, half, 0],
        [r, 0, 0, -half, 0, 0],
    ])


def u0_completed() -> Matrix:
    """Unitary whose first three columns are ``(1, i)/sqrt 2`` blocks.

    The remaining columns are the conjugate companions ``(1, -i)/sqrt 2``;
    any completion gives the same W pattern.
    """
    h, i = _H, I
    rows = [[RadicalScalar()] * 6 for _ in range(6)]
    for k in range(3):
        rows[2 * k][k] = h
        rows[2 * k + 1][k] = i * h
        rows[2 * k][k + 3] = h
        rows[2 * k + 1][k + 3] = -i * h
    return as_matrix(rows)


def u1() -> Matrix:
    """5x5 unitary taking the middle Veronese curve of CP^4 to a real curve."""
    h, i = _H, I
    return as_matrix([
        [h, 0, 0, 0, h],
        [i * h, 0, 0, 0, -i * h],
        [0, h, 0, -h, 0],
        [0, i * h, 0, i * h, 0],
        [0, 0, 1, 0, 0],
    ])


def curve_cubic() -> VectorCurve:
    """Holomorphic curve of degree 3 on the quadric; its real pair has K = 2/3."""
    r83 = sqrt(8) / _R3
    return VectorCurve([
        _ONE + _Z**3,
        (_ONE - _Z**3).scale(I),
        _Z.scale(_R3) - (_Z**2).scale(_R3.inverse()),
        (_Z.scale(_R3) + (_Z**2).scale(_R3.inverse())).scale(I),
        (_Z**2).scale(r83),
        (_Z**2).scale(r83 * I),
    ])


def curve_conic() -> VectorCurve:
    """Conic on the quadric with nonzero second-order contact; K = 1."""
    half = _q(1, 2)
    return VectorCurve([
        _ONE + (_Z**2).scale(half),
        (_ONE - (_Z**2).scale(half)).scale(I),
        (_Z**2).scale(-I * _R3 * half),
        (_Z**2).scale(-_R3 * half),
        _Z,
        _Z.scale(-I * _R3),
    ])


def curve_isotropic_conic() -> VectorCurve:
    """Conic in a totally isotropic 3-plane; K = 1."""
    return VectorCurve([_ONE, BiPoly.const(I), _Z.scale(_R2), _Z.scale(I * _R2), _Z**2, (_Z**2).scale(I)])


def curve_veronese_middle() -> VectorCurve:
    """Image of the middle Veronese curve of CP^2; a totally geodesic sphere, K = 1/2."""
    a = _ONE - _X
    return VectorCurve([
        _ZB.scale(-_R2), _ZB.scale(-I * _R2), a, a.scale(I), _Z.scale(_R2), _Z.scale(I * _R2),
    ])


def curve_quartic_middle() -> VectorCurve:
    """Real image of the middle Veronese curve of CP^4 padded to C^6; pairs with e_6."""
    z2, zb2 = _Z**2, _ZB**2
    return VectorCurve([
        z2 + zb2,
        (zb2 - z2).scale(I),
        (_Z + _ZB) * (_X - _ONE),
        ((_ZB - _Z) * (_X - _ONE)).scale(I),
        (_ONE - _X.scale(4) + _X * _X).scale(_R3.inverse()),
        BiPoly(),
    ])


def c0() -> VectorCurve:
    return VectorCurve.constant([0, 0, 0, 0, 0, 1])


def curve_quadric_lift() -> VectorCurve:
    """Quadric point attached to the quartic sum pair; not harmonic in CP^5."""
    r3, i3 = _R3, I * _R3
    return VectorCurve([
        (_Z**2 + _ZB**2).scale(r3),
        (_ZB**2 - _Z**2).scale(i3),
        ((_Z + _ZB) * (_X - _ONE)).scale(r3),
        ((_ZB - _Z) * (_X - _ONE)).scale(i3),
        _ONE - _X.scale(4) + _X * _X,
        ((_ONE + _X) ** 2).scale(I),
    ])
