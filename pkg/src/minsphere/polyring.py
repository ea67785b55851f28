"""Polynomials and rational functions in the formal variables z and zbar.

``BiPoly`` is a sparse map from exponent pairs ``(a, b)`` (meaning
``z**a * zbar**b``) to :class:`~minsphere.scalar.RadicalScalar` coefficients.
``RationalFn`` is an unreduced quotient of two ``BiPoly``; equality is decided
by cross-multiplication.  No polynomial GCD is ever taken.  Fractions are kept
small by cancelling shared monomials and by exact trial division by caller
supplied factors (``RationalFn.reduce``).
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from gmpy2 import mpq

from .scalar import RadicalScalar, Rational, _radical_product

Monomial = Tuple[int, int]

MAX_EXPONENT = 2**31 - 1


class PoleError(ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""


def _order(key: Monomial) -> Tuple[int, int]:
    # graded lexicographic, z before zbar
    return (key[0] + key[1], key[0])


def _coerce_scalar(c) -> RadicalScalar:
    if isinstance(c, RadicalScalar):
        return c
    return RadicalScalar.of(c)


class BiPoly:
    __slots__ = ("_t", "_flat", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        t: Dict[Monomial, RadicalScalar] = {}
        if terms:
            for (a, b), c in terms.items():
                a, b = int(a), int(b)
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent in {(a, b)}")
                if a > MAX_EXPONENT or b > MAX_EXPONENT:
                    raise OverflowError(f"exponent {(a, b)} exceeds 32-bit bound")
                c = _coerce_scalar(c)
                if (a, b) in t:
                    c = t[(a, b)] + c
                if c:
                    t[(a, b)] = c
                else:
                    t.pop((a, b), None)
        self._t = t
        self._flat = None
        self._hash = None

    @classmethod
    def _raw(cls, t: Dict[Monomial, RadicalScalar]) -> "BiPoly":
        obj = cls.__new__(cls)
        obj._t = t
        obj._flat = None
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "BiPoly":
        c = _coerce_scalar(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BiPoly":
        return cls({(a, b): c})

    @classmethod
    def z(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    @classmethod
    def zbar(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    # -- inspection ----------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, RadicalScalar]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def coeff(self, a: int, b: int) -> RadicalScalar:
        return self._t.get((a, b), RadicalScalar())

    def degree_z(self) -> int:
        return max((a for a, _ in self._t), default=-1)

    def degree_zbar(self) -> int:
        return max((b for _, b in self._t), default=-1)

    def is_holomorphic(self) -> bool:
        return all(b == 0 for _, b in self._t)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._t)

    def constant_value(self) -> RadicalScalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get((0, 0), RadicalScalar())

    def leading(self) -> Tuple[Monomial, RadicalScalar]:
        key = max(self._t, key=_order)
        return key, self._t[key]

    def has_rational_coefficients(self) -> bool:
        return all(c.is_rational() for c in self._t.values())

    def is_hermitian(self) -> bool:
        """True when the polynomial is real-valued, i.e. fixed by ``conj_swap``."""
        return self == self.conj_swap()

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._t == other._t
        if isinstance(other, (RadicalScalar, int, Rational)):
            return self._t == BiPoly.const(other)._t
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- ring operations -----------------------------------------------
    def _flat_terms(self):
        if self._flat is None:
            self._flat = [
                (a, b, m, re, im)
                for (a, b), c in self._t.items()
                for m, (re, im) in c._t.items()
            ]
        return self._flat

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            if isinstance(other, (RadicalScalar, int, Rational)):
                other = BiPoly.const(other)
            else:
                return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            if k in t:
                s = t[k] + c
                if s:
                    t[k] = s
                else:
                    del t[k]
            else:
                t[k] = c
        return BiPoly._raw(t)

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        if not isinstance(other, (BiPoly, RadicalScalar, int, Rational)):
            return NotImplemented
        return self + (-_as_bipoly(other))

    def __rsub__(self, other) -> "BiPoly":
        return _as_bipoly(other) - self

    def scale(self, c) -> "BiPoly":
        c = _coerce_scalar(c)
        if not c:
            return BiPoly._raw({})
        if c == 1:
            return self
        return BiPoly._raw({k: v * c for k, v in self._t.items()})

    def shift(self, da: int, db: int) -> "BiPoly":
        """Multiply by the monomial ``z**da * zbar**db``."""
        return BiPoly._raw({(a + da, b + db): c for (a, b), c in self._t.items()})

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            if isinstance(other, (RadicalScalar, int, Rational)):
                return self.scale(other)
            return NotImplemented
        if not self._t or not other._t:
            return BiPoly._raw({})
        if len(other._t) == 1:
            (k, c), = other._t.items()
            return self.scale(c).shift(*k)
        if len(self._t) == 1:
            (k, c), = self._t.items()
            return other.scale(c).shift(*k)
        acc: Dict[Tuple[int, int, int], list] = {}
        rp = {}
        g_other = other._flat_terms()
        for a1, b1, m1, re1, im1 in self._flat_terms():
            for a2, b2, m2, re2, im2 in g_other:
                pr = rp.get((m1, m2))
                if pr is None:
                    pr = rp[(m1, m2)] = _radical_product(m1, m2)
                m, g = pr
                re = re1 * re2 - im1 * im2
                im = re1 * im2 + im1 * re2
                if g != 1:
                    re *= g
                    im *= g
                key = (a1 + a2, b1 + b2, m)
                cur = acc.get(key)
                if cur is None:
                    acc[key] = [re, im]
                else:
                    cur[0] += re
                    cur[1] += im
        grouped: Dict[Monomial, Dict[int, tuple]] = {}
        for (a, b, m), (re, im) in acc.items():
            if re or im:
                grouped.setdefault((a, b), {})[m] = (re, im)
        out = {k: RadicalScalar._raw(v) for k, v in grouped.items()}
        if out and max(max(a, b) for a, b in out) > MAX_EXPONENT:
            raise OverflowError("exponent exceeds 32-bit bound")
        return BiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out, base = BiPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __truediv__(self, other):
        return RationalFn(self, _as_bipoly(other))

    # -- calculus ------------------------------------------------------
    def d_z(self) -> "BiPoly":
        return BiPoly._raw({(a - 1, b): c * a for (a, b), c in self._t.items() if a})

    def d_zbar(self) -> "BiPoly":
        return BiPoly._raw({(a, b - 1): c * b for (a, b), c in self._t.items() if b})

    def conj_swap(self) -> "BiPoly":
        """Complex conjugate as a function: swap exponents, conjugate coefficients."""
        return BiPoly._raw({(b, a): c.conjugate() for (a, b), c in self._t.items()})

    # -- division ------------------------------------------------------
    def exact_div(self, q: "BiPoly") -> Optional["BiPoly"]:
        """Return ``self / q`` if ``q`` divides ``self`` exactly, else ``None``."""
        if not q._t:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._t:
            return BiPoly._raw({})
        if len(q._t) == 1:
            (qk, qc), = q._t.items()
            if any(a < qk[0] or b < qk[1] for a, b in self._t):
                return None
            inv = qc.inverse()
            return BiPoly._raw({(a - qk[0], b - qk[1]): c * inv for (a, b), c in self._t.items()})
        qa, qb = q.degree_z(), q.degree_zbar()
        if self.degree_z() < qa or self.degree_zbar() < qb:
            return None
        # the lowest monomials must divide as well
        lo_p = min(self._t, key=_order)
        lo_q = min(q._t, key=_order)
        if lo_p[0] < lo_q[0] or lo_p[1] < lo_q[1]:
            return None
        (la, lb), lc = q.leading()
        inv = lc.inverse()
        rest = [(k, c) for k, c in q._t.items() if k != (la, lb)]
        r = dict(self._t)
        quot: Dict[Monomial, RadicalScalar] = {}
        while r:
            key = max(r, key=_order)
            a, b = key
            if a < la or b < lb:
                return None
            c = r.pop(key) * inv
            da, db = a - la, b - lb
            quot[(da, db)] = c
            for (ka, kb), kc in rest:
                kk = (ka + da, kb + db)
                v = r.get(kk)
                v = -(kc * c) if v is None else v - kc * c
                if v:
                    r[kk] = v
                else:
                    r.pop(kk, None)
        return BiPoly._raw(quot)

    def min_exponents(self) -> Monomial:
        if not self._t:
            return (0, 0)
        return min(a for a, _ in self._t), min(b for _, b in self._t)

    # -- numerics ------------------------------------------------------
    def _numeric(self):
        keys = list(self._t)
        a = np.array([k[0] for k in keys], dtype=np.int64)
        b = np.array([k[1] for k in keys], dtype=np.int64)
        c = np.array([self._t[k].to_complex() for k in keys], dtype=complex)
        return a, b, c

    def eval(self, z0):
        """Evaluate at ``z = z0`` with ``zbar = conj(z0)``; ``z0`` may be an array."""
        z0 = np.asarray(z0, dtype=complex)
        if not self._t:
            return np.zeros_like(z0) if z0.ndim else 0j
        a, b, c = self._numeric()
        zz = z0[..., None]
        out = np.sum(c * zz**a * np.conj(zz) ** b, axis=-1)
        return out if z0.ndim else complex(out)

    # -- text ----------------------------------------------------------
    def sorted_terms(self) -> List[Tuple[Monomial, RadicalScalar]]:
        return sorted(self._t.items(), key=lambda kv: _order(kv[0]))

    def to_json(self) -> list:
        return [{"z": a, "zbar": b, "coeff": c.to_json()} for (a, b), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "BiPoly":
        terms: Dict[Monomial, RadicalScalar] = {}
        for item in data:
            k = (int(item["z"]), int(item["zbar"]))
            terms[k] = terms.get(k, RadicalScalar()) + RadicalScalar.from_json(item["coeff"])
        return cls(terms)

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            mono = "*".join(
                s for s in (
                    ("z" if a == 1 else f"z^{a}") if a else "",
                    ("zbar" if b == 1 else f"zbar^{b}") if b else "",
                ) if s
            )
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_bipoly(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    return BiPoly.const(x)


Z = BiPoly.z()
ZBAR = BiPoly.zbar()
ONE = BiPoly.const(1)


class RationalFn:
    """Quotient ``num/den`` of two BiPolys; never reduced by GCD."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_bipoly(num)
        den = ONE if den is None else _as_bipoly(den)
        if den.is_zero():
            raise ZeroDivisionError("RationalFn with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def of(cls, x) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        return cls(_as_bipoly(x))

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other) -> "RationalFn":
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        if other.den.is_constant():
            inv = other.den.constant_value().inverse()
            return RationalFn(self.num + other.num * self.den * inv, self.den)
        if self.den.is_constant():
            inv = self.den.constant_value().inverse()
            return RationalFn(self.num * other.den * inv + other.num, other.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFn":
        return _as_rational(other) - self

    def __mul__(self, other) -> "RationalFn":
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFn":
        return _as_rational(other) / self

    def __pow__(self, n: int) -> "RationalFn":
        if n < 0:
            return RationalFn(self.den ** (-n), self.num ** (-n))
        return RationalFn(self.num**n, self.den**n)

    # -- calculus ------------------------------------------------------
    def d_z(self) -> "RationalFn":
        if self.den.is_constant():
            return RationalFn(self.num.d_z(), self.den)
        return RationalFn(self.num.d_z() * self.den - self.num * self.den.d_z(), self.den * self.den)

    def d_zbar(self) -> "RationalFn":
        if self.den.is_constant():
            return RationalFn(self.num.d_zbar(), self.den)
        return RationalFn(
            self.num.d_zbar() * self.den - self.num * self.den.d_zbar(), self.den * self.den
        )

    def conj_swap(self) -> "RationalFn":
        return RationalFn(self.num.conj_swap(), self.den.conj_swap())

    # -- comparison ----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_constant(self) -> Optional[RadicalScalar]:
        """Return ``c`` when ``num == c*den`` as polynomials, otherwise ``None``."""
        if self.num.is_zero():
            return RadicalScalar()
        kn, cn = self.num.leading()
        kd, cd = self.den.leading()
        if kn != kd or len(self.num) != len(self.den):
            return None
        c = cn / cd
        return c if self.num == self.den.scale(c) else None

    def is_hermitian(self) -> bool:
        return self == self.conj_swap()

    # -- simplification ------------------------------------------------
    def reduce(self, factors: Sequence[BiPoly] = ()) -> "RationalFn":
        """Cancel shared monomials, then divide out each factor while it divides both parts.

        The denominator is scaled to a unit leading coefficient.
        """
        num, den = self.num, self.den
        if num.is_zero():
            return RationalFn(BiPoly(), ONE)
        for h in factors:
            if h.is_constant() or h.is_zero():
                continue
            while True:
                qd = den.exact_div(h)
                if qd is None:
                    break
                qn = num.exact_div(h)
                if qn is None:
                    break
                num, den = qn, qd
        na, nb = num.min_exponents()
        da, db = den.min_exponents()
        ea, eb = min(na, da), min(nb, db)
        if ea or eb:
            num, den = num.shift(-ea, -eb), den.shift(-ea, -eb)
        _, lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            num, den = num.scale(inv), den.scale(inv)
        return RationalFn(num, den)

    # -- numerics ------------------------------------------------------
    def eval(self, z0):
        d = self.den.eval(z0)
        if np.any(d == 0):
            raise PoleError(f"denominator vanishes at {z0}")
        return self.num.eval(z0) / d

    # -- text ----------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFn":
        if isinstance(data, Mapping) and "num" in data:
            return cls(BiPoly.from_json(data["num"]), BiPoly.from_json(data["den"]))
        return cls(BiPoly.from_json(data))

    def __repr__(self) -> str:
        return f"RationalFn({self})"

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        c = self.is_constant()
        if c is not None:
            return str(c)
        return f"({self.num})/({self.den})"


def _as_rational(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, (BiPoly, RadicalScalar, int, Rational)):
        return RationalFn(_as_bipoly(x))
    return NotImplemented


def d_z(p):
    return p.d_z()


def d_zbar(p):
    return p.d_zbar()


def conj_swap(p):
    return p.conj_swap()


def _ll_numerator(p: BiPoly) -> BiPoly:
    return p * p.d_z().d_zbar() - p.d_z() * p.d_zbar()


def log_laplacian(p) -> RationalFn:
    """``d_z d_zbar log p`` for a polynomial or rational function ``p``."""
    if isinstance(p, RationalFn):
        if p.num.is_zero():
            raise ValueError("log_laplacian of the zero function")
        if p.den.is_constant():
            return log_laplacian(p.num)
        n, d = p.num, p.den
        return RationalFn(
            _ll_numerator(n) * d * d - _ll_numerator(d) * n * n, n * n * d * d
        )
    p = _as_bipoly(p)
    if p.is_zero():
        raise ValueError("log_laplacian of the zero polynomial")
    return RationalFn(_ll_numerator(p), p * p)


def evaluate(p, z0):
    return p.eval(z0)


def is_constant(r) -> Optional[RadicalScalar]:
    return _as_rational(r).is_constant()


# -- factor hints ------------------------------------------------------------
# Radial polynomials (functions of z*zbar only, rational coefficients) are
# split into square-free parts so trial division can cancel their powers.

def _u_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _u_divmod(p: list, q: list):
    p = list(p)
    out = [mpq(0)] * max(len(p) - len(q) + 1, 1)
    inv = 1 / q[-1]
    while len(_u_trim(p)) >= len(q):
        c = p[-1] * inv
        s = len(p) - len(q)
        out[s] = c
        for i, qc in enumerate(q):
            p[s + i] -= c * qc
        p.pop()
    return _u_trim(out), p


def _u_gcd(p: list, q: list) -> list:
    p, q = _u_trim(list(p)), _u_trim(list(q))
    while q:
        p, q = q, _u_divmod(p, q)[1]
    inv = 1 / p[-1]
    return [c * inv for c in p]


def _u_deriv(p: list) -> list:
    return _u_trim([c * i for i, c in enumerate(p)][1:])


def _u_squarefree(p: list) -> List[list]:
    """Yun's square-free decomposition; returns the non-constant parts."""
    out = []
    dp = _u_deriv(p)
    a = _u_gcd(p, dp)
    b = _u_divmod(p, a)[0]
    c = _u_divmod(dp, a)[0]
    d = [x - y for x, y in _pad(c, _u_deriv(b))]
    while len(b) > 1:
        a = _u_gcd(b, d) if _u_trim(list(d)) else b
        if len(a) > 1:
            out.append(a)
        b = _u_divmod(b, a)[0]
        c = _u_divmod(d, a)[0] if _u_trim(list(d)) else []
        d = [x - y for x, y in _pad(c, _u_deriv(b))]
    return out


def _pad(p: list, q: list):
    n = max(len(p), len(q))
    return zip(list(p) + [mpq(0)] * (n - len(p)), list(q) + [mpq(0)] * (n - len(q)))


def factor_hints(polys: Iterable[BiPoly]) -> List[BiPoly]:
    """Candidate factors for :meth:`RationalFn.reduce`, largest first."""
    out: List[BiPoly] = []
    for h in polys:
        if h.is_constant():
            continue
        parts = [h]
        if all(a == b for a, b in h._t) and h.has_rational_coefficients():
            coeffs = [mpq(0)] * (h.degree_z() + 1)
            for (a, _), c in h._t.items():
                coeffs[a] = c.rational_value()
            while not coeffs[0]:
                coeffs.pop(0)
            sf = _u_squarefree(coeffs)
            if sf:
                parts = [
                    BiPoly({(i, i): c / f[-1] for i, c in enumerate(f) if c}) for f in sf
                ]
        for p in parts:
            if p not in out:
                out.append(p)
    return out
