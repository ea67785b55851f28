"""Exact arithmetic in Q(i) adjoined square roots of square-free integers.

A :class:`RadicalScalar` is a finite sum ``sum_m q_m * sqrt(m)`` where every
``m`` is a square-free positive integer (``m == 1`` is the rational part) and
every ``q_m`` is a Gaussian rational ``re + i*im``.  The representation is
canonical, so two scalars are equal exactly when their term maps agree.

Rationals are ``gmpy2.mpq`` values.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

from gmpy2 import mpq

Rational = type(mpq(0))
GaussianRational = Tuple[Rational, Rational]

_ZERO = mpq(0)
_ONE = mpq(1)

Number = Union["RadicalScalar", int, Rational]


@lru_cache(maxsize=None)
def square_free_split(n: int) -> Tuple[int, int]:
    """Return ``(k, m)`` with ``n == k*k*m`` and ``m`` square-free."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    k, m, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            m *= p
        p += 1
    return k, m * n


@lru_cache(maxsize=None)
def prime_factors(n: int) -> Tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=4096)
def _radical_product(r1: int, r2: int) -> Tuple[int, int]:
    # sqrt(r1)*sqrt(r2) = g*sqrt(r1/g * r2/g) for square-free r1, r2
    g = math.gcd(r1, r2)
    return (r1 // g) * (r2 // g), g


def _as_mpq(x) -> Rational:
    if isinstance(x, Rational):
        return x
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


class RadicalScalar:
    """Immutable element of the multiquadratic extension of Q(i)."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Tuple] | None = None):
        t: Dict[int, GaussianRational] = {}
        if terms:
            for m, (re, im) in terms.items():
                re, im = _as_mpq(re), _as_mpq(im)
                if not re and not im:
                    continue
                k, sf = square_free_split(int(m))
                if k != 1:
                    re, im = re * k, im * k
                if sf in t:
                    a, b = t[sf]
                    re, im = a + re, b + im
                    if not re and not im:
                        del t[sf]
                        continue
                t[sf] = (re, im)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: Dict[int, GaussianRational]) -> "RadicalScalar":
        # trusted constructor: t is already canonical
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------
    @classmethod
    def of(cls, x: Number) -> "RadicalScalar":
        if isinstance(x, RadicalScalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point values are not exact scalars")
        q = _as_mpq(x)
        return cls._raw({1: (q, _ZERO)} if q else {})

    @classmethod
    def gaussian(cls, re, im=0) -> "RadicalScalar":
        return cls({1: (re, im)})

    @classmethod
    def sqrt(cls, n: int) -> "RadicalScalar":
        """Exact square root of an integer; negative ``n`` gives ``i*sqrt(-n)``."""
        if n == 0:
            return cls()
        k, m = square_free_split(abs(n))
        return cls({m: (0, k)} if n < 0 else {m: (k, 0)})

    @classmethod
    def i(cls) -> "RadicalScalar":
        return cls({1: (0, 1)})

    # -- inspection ----------------------------------------------------
    @property
    def terms(self) -> Dict[int, GaussianRational]:
        return dict(self._t)

    def radicands(self) -> Tuple[int, ...]:
        return tuple(sorted(self._t))

    def is_zero(self) -> bool:
        return not self._t

    def is_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and 1 in self._t and not self._t[1][1])

    def is_gaussian_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and 1 in self._t)

    def is_real(self) -> bool:
        return all(not im for _, im in self._t.values())

    def rational_value(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._t[1][0] if self._t else _ZERO

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, RadicalScalar):
            return self._t == other._t
        if isinstance(other, (int, Rational)):
            return self._t == RadicalScalar.of(other)._t
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- field operations ----------------------------------------------
    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar._raw({m: (-a, -b) for m, (a, b) in self._t.items()})

    def __add__(self, other: Number) -> "RadicalScalar":
        if not isinstance(other, RadicalScalar):
            if not isinstance(other, (int, Rational)):
                return NotImplemented
            other = RadicalScalar.of(other)
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for m, (c, d) in other._t.items():
            if m in t:
                a, b = t[m]
                a, b = a + c, b + d
                if a or b:
                    t[m] = (a, b)
                else:
                    del t[m]
            else:
                t[m] = (c, d)
        return RadicalScalar._raw(t)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "RadicalScalar":
        if not isinstance(other, (RadicalScalar, int, Rational)):
            return NotImplemented
        return self + (-RadicalScalar.of(other))

    def __rsub__(self, other: Number) -> "RadicalScalar":
        return RadicalScalar.of(other) - self

    def __mul__(self, other: Number) -> "RadicalScalar":
        if not isinstance(other, RadicalScalar):
            if not isinstance(other, (int, Rational)):
                return NotImplemented
            q = _as_mpq(other)
            if not q:
                return RadicalScalar._raw({})
            return RadicalScalar._raw({m: (a * q, b * q) for m, (a, b) in self._t.items()})
        t: Dict[int, list] = {}
        for m1, (a, b) in self._t.items():
            for m2, (c, d) in other._t.items():
                m, g = _radical_product(m1, m2)
                re = (a * c - b * d) * g
                im = (a * d + b * c) * g
                acc = t.get(m)
                if acc is None:
                    t[m] = [re, im]
                else:
                    acc[0] += re
                    acc[1] += im
        return RadicalScalar._raw({m: (re, im) for m, (re, im) in t.items() if re or im})

    __rmul__ = __mul__

    def conjugate(self) -> "RadicalScalar":
        """Complex conjugation: imaginary parts negated term-wise."""
        return RadicalScalar._raw({m: (a, -b) for m, (a, b) in self._t.items()})

    def galois_flip(self, p: int) -> "RadicalScalar":
        """Apply sqrt(p) -> -sqrt(p) for a prime ``p``."""
        return RadicalScalar._raw(
            {m: ((-a, -b) if m % p == 0 else (a, b)) for m, (a, b) in self._t.items()}
        )

    def inverse(self) -> "RadicalScalar":
        if not self._t:
            raise ZeroDivisionError("inverse of zero RadicalScalar")
        primes = sorted({p for m in self._t for p in prime_factors(m)})
        num = RadicalScalar.of(1)
        y = self
        for p in primes:
            c = y.galois_flip(p)
            num = num * c
            y = y * c
        # y is now a nonzero Gaussian rational
        a, b = y._t[1]
        n2 = a * a + b * b
        return num * RadicalScalar._raw({1: (a / n2, -b / n2)})

    def __truediv__(self, other: Number) -> "RadicalScalar":
        if not isinstance(other, RadicalScalar):
            if not isinstance(other, (int, Rational)):
                return NotImplemented
            q = _as_mpq(other)
            if not q:
                raise ZeroDivisionError("division of RadicalScalar by zero")
            return self * (1 / q)
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "RadicalScalar":
        return RadicalScalar.of(other) * self.inverse()

    def __pow__(self, n: int) -> "RadicalScalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = RadicalScalar.of(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- numerics and text ---------------------------------------------
    def to_complex(self) -> complex:
        s = 0j
        for m, (a, b) in self._t.items():
            s += complex(float(a), float(b)) * (math.sqrt(m) if m != 1 else 1.0)
        return s

    to_float = to_complex

    def to_json(self) -> list:
        return [
            {"radicand": m, "re": _qstr(a), "im": _qstr(b)}
            for m, (a, b) in sorted(self._t.items())
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "RadicalScalar":
        terms: Dict[int, list] = {}
        for item in data:
            m = int(item["radicand"])
            if m <= 0:
                raise ValueError(f"radicand must be positive, got {m}")
            re, im = _as_mpq(item.get("re", "0")), _as_mpq(item.get("im", "0"))
            acc = terms.setdefault(m, [_ZERO, _ZERO])
            acc[0] += re
            acc[1] += im
        return cls({m: tuple(v) for m, v in terms.items()})

    def __repr__(self) -> str:
        return f"RadicalScalar({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for m, (a, b) in sorted(self._t.items()):
            if a and b:
                c = f"({a}{'+' if b > 0 else '-'}{abs(b)}i)"
            elif b:
                c = f"{b}i" if b not in (1, -1) else ("i" if b > 0 else "-i")
            else:
                c = str(a)
            if m == 1:
                parts.append(c)
            elif c in ("1",):
                parts.append(f"sqrt({m})")
            elif c == "-1":
                parts.append(f"-sqrt({m})")
            else:
                parts.append(f"{c}*sqrt({m})")
        return " + ".join(parts).replace("+ -", "- ")


def _qstr(q: Rational) -> str:
    return f"{q.numerator}/{q.denominator}"


ZERO = RadicalScalar()
ONE = RadicalScalar.of(1)
I = RadicalScalar.i()


def sqrt(n: int) -> RadicalScalar:
    return RadicalScalar.sqrt(n)


def scalar(x) -> RadicalScalar:
    """Coerce ints, rationals and ``"p/q"`` strings to :class:`RadicalScalar`."""
    if isinstance(x, str):
        return RadicalScalar.of(mpq(x))
    return RadicalScalar.of(x)
