"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Values are stored in the power basis 1, z, ..., z^(phi(m)-1) of
Q(zeta_m), reduced modulo the m-th cyclotomic polynomial.  Rationals are
plain :class:`fractions.Fraction`; a cyclotomic number of order 1 is a
rational.

>>> z3 = Cyclotomic.zeta(3)
>>> z3 + z3 ** 2
Cyclotomic(-1)
>>> (z3 + z3 ** 2 + 1).to_integer()
0
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "Cyclotomic",
    "NotAnInteger",
    "cyclotomic_polynomial",
    "cyclo_add",
    "cyclo_mul",
    "cyclo_conj",
    "cyclo_to_integer",
]


class NotAnInteger(ValueError):
    """Raised when a cyclotomic value expected to be a rational integer is not."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists are lowest degree first; den is monic
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dn]
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Computed by dividing x^m - 1 by Phi_d for every proper divisor d of m.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the reduction of x^k modulo Phi_m, for 0 <= k < m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg else []
    for _ in range(m):
        rows.append(tuple(cur))
        if not deg:
            continue
        # multiply by x, then fold the overflow coefficient back with Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


def _reduce(m: int, exps: dict[int, Fraction]) -> tuple[Fraction, ...]:
    table = _power_table(m)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for e, c in exps.items():
        if not c:
            continue
        row = table[e % m]
        for k in range(deg):
            if row[k]:
                out[k] += c * row[k]
    return tuple(out)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


class Cyclotomic:
    """An element of Q(zeta_m), immutable.

    ``order`` is m and ``coeffs`` the phi(m) rational coordinates over the
    reduced power basis.  Arithmetic between different orders happens in
    Q(zeta_lcm); results are never descended to a smaller field.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        deg = len(cyclotomic_polynomial(order)) - 1
        if len(coeffs) != deg:
            raise ValueError(f"order {order} needs {deg} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # construction

    @classmethod
    def rational(cls, value) -> Cyclotomic:
        return cls(1, (_as_fraction(value),))

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> Cyclotomic:
        """The root of unity zeta_m^k = exp(2 pi i k / m)."""
        return cls(m, _reduce(m, {k % m: Fraction(1)}))

    @classmethod
    def from_powers(cls, m: int, coeffs) -> Cyclotomic:
        """Sum of coeffs[k] * zeta_m^k, for any number of coefficients."""
        exps: dict[int, Fraction] = {}
        for k, c in enumerate(coeffs):
            c = _as_fraction(c)
            if c:
                exps[k % m] = exps.get(k % m, Fraction(0)) + c
        return cls(m, _reduce(m, exps))

    @classmethod
    def coerce(cls, x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        return cls.rational(x)

    # embedding

    def embed(self, m: int) -> Cyclotomic:
        """The same value written over Q(zeta_m); ``self.order`` must divide m."""
        if m == self.order:
            return self
        if m % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{m})")
        step = m // self.order
        return Cyclotomic(m, _reduce(m, {k * step: c for k, c in enumerate(self.coeffs)}))

    def _common(self, other: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        m = _lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    # arithmetic

    def __add__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic(a.order, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, (-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, (c * other for c in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        if a.order == 1:
            return Cyclotomic(1, (a.coeffs[0] * b.coeffs[0],))
        exps: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    exps[i + j] = exps.get(i + j, Fraction(0)) + x * y
        return Cyclotomic(a.order, _reduce(a.order, exps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by rational scalars only
        if isinstance(other, Cyclotomic):
            if not other.is_rational():
                return NotImplemented
            other = other.coeffs[0]
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("cyclotomic division by zero")
        return Cyclotomic(self.order, (c / other for c in self.coeffs))

    def __pow__(self, e: int) -> Cyclotomic:
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Cyclotomic.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> Cyclotomic:
        """Complex conjugate via zeta_m -> zeta_m^(m-1)."""
        m = self.order
        return Cyclotomic(m, _reduce(m, {(-k) % m: c for k, c in enumerate(self.coeffs)}))

    # predicates and conversion

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def is_real(self) -> bool:
        return self == self.conj()

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise NotAnInteger(f"{self!r} is not rational")
        return self.coeffs[0]

    def to_integer(self) -> int:
        if not self.is_integer():
            raise NotAnInteger(f"{self!r} is not a rational integer")
        return self.coeffs[0].numerator

    def __eq__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # equal values may live at different orders; only rationals hash finely
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash("Cyclotomic")

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyclotomic({self.coeffs[0]})"
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            z = "" if k == 0 else (f"z{self.order}" if k == 1 else f"z{self.order}^{k}")
            if not z:
                terms.append(str(c))
            elif c == 1:
                terms.append(z)
            elif c == -1:
                terms.append("-" + z)
            else:
                terms.append(f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ")


def cyclo_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return Cyclotomic.coerce(a) + b


def cyclo_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return Cyclotomic.coerce(a) * b


def cyclo_conj(a: Cyclotomic) -> Cyclotomic:
    return Cyclotomic.coerce(a).conj()


def cyclo_to_integer(a: Cyclotomic) -> int:
    return Cyclotomic.coerce(a).to_integer()
