"""Exact scalars: arbitrary-precision rationals and cyclotomic field elements.

Rationals are stdlib :class:`fractions.Fraction` (already canonical: reduced,
positive denominator).  ``CycScalar`` represents an element of Q(zeta_N) in the
power basis ``zeta^0 .. zeta^(phi(N)-1)`` reduced modulo the N-th cyclotomic
polynomial, so nonzero elements are always invertible.

>>> z = CycScalar.root_of_unity(1, 4)
>>> (z * z).as_rational()
Fraction(-1, 1)
>>> (CycScalar.one(4) + z).invert() * (CycScalar.one(4) + z)
CycScalar(order=4, coords=(Fraction(1, 1), Fraction(0, 1)))
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import NotRational

Rational = Fraction


def euler_phi(n: int) -> int:
    """Euler's totient."""
    result = n
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    # exact division of integer polynomials, used only where it is exact
    a = a[:]
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        c, d = a[-1], b[-1]
        assert c % d == 0
        k = len(a) - len(b)
        q[k] = c // d
        for i, bc in enumerate(b):
            a[i + k] -= q[k] * bc
    while a and a[-1] == 0:
        a.pop()
    return q, a


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial Phi_n.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """x^k mod Phi_n as coordinate vectors of length phi(n), for k in 0..n-1."""
    phi_coeffs = cyclotomic_polynomial(n)
    deg = len(phi_coeffs) - 1
    top = tuple(Fraction(-c) for c in phi_coeffs[:-1])  # x^deg = -(lower part)
    table: list[tuple[Fraction, ...]] = []
    for k in range(n):
        if k < deg:
            table.append(tuple(Fraction(int(i == k)) for i in range(deg)))
        else:
            prev = table[k - 1]
            shifted = [Fraction(0)] + list(prev[:-1])
            lead = prev[-1]
            row = tuple(shifted[i] + lead * top[i] for i in range(deg))
            table.append(row)
    return tuple(table)


def _reduce_powers(n: int, powers: dict[int, Fraction]) -> tuple[Fraction, ...]:
    deg = euler_phi(n)
    table = _power_table(n)
    out = [Fraction(0)] * deg
    for k, c in powers.items():
        if not c:
            continue
        row = table[k % n]
        for i in range(deg):
            out[i] += c * row[i]
    return tuple(out)


@dataclass(frozen=True)
class CycScalar:
    """An element of Q(zeta_N) in reduced power-basis coordinates."""

    order: int
    coords: tuple[Fraction, ...]

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rational(value: Fraction | int, order: int = 1) -> CycScalar:
        deg = euler_phi(order)
        coords = [Fraction(0)] * deg
        coords[0] = Fraction(value)
        return CycScalar(order, tuple(coords))

    @staticmethod
    def zero(order: int = 1) -> CycScalar:
        return CycScalar.from_rational(0, order)

    @staticmethod
    def one(order: int = 1) -> CycScalar:
        return CycScalar.from_rational(1, order)

    @staticmethod
    def root_of_unity(k: int, order: int) -> CycScalar:
        """zeta_order**k in canonical coordinates; (0, N) gives 1."""
        if order < 1:
            raise ValueError("order must be positive")
        return CycScalar(order, _reduce_powers(order, {k % order: Fraction(1)}))

    # -- structure ------------------------------------------------------

    def promote(self, order: int) -> CycScalar:
        """Embed into Q(zeta_order); the current order must divide it."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot embed order {self.order} into {order}")
        step = order // self.order
        powers = {j * step: c for j, c in enumerate(self.coords) if c}
        return CycScalar(order, _reduce_powers(order, powers))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_rational(self) -> Fraction:
        """The rational value, if all non-constant coordinates vanish."""
        if any(self.coords[1:]):
            raise NotRational(f"{self} has nonzero non-constant coordinates")
        return self.coords[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------

    def _pair(self, other: CycScalar) -> tuple[CycScalar, CycScalar]:
        if self.order == other.order:
            return self, other
        n = lcm(self.order, other.order)
        return self.promote(n), other.promote(n)

    @staticmethod
    def _coerce(value: object, order: int) -> CycScalar | None:
        if isinstance(value, CycScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return CycScalar.from_rational(Fraction(value), order)
        return None

    def __add__(self, other: object) -> CycScalar:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        a, b = self._pair(o)
        return CycScalar(a.order, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(self.order, tuple(-x for x in self.coords))

    def __sub__(self, other: object) -> CycScalar:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> CycScalar:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> CycScalar:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        a, b = self._pair(o)
        powers: dict[int, Fraction] = {}
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if y:
                    powers[i + j] = powers.get(i + j, Fraction(0)) + x * y
        return CycScalar(a.order, _reduce_powers(a.order, powers))

    __rmul__ = __mul__

    def invert(self) -> CycScalar:
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverting zero cyclotomic scalar")
        phi_coeffs = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coords)
        while a and not a[-1]:
            a.pop()
        # extended Euclid in Q[x]: find s with s*a = gcd (mod Phi), gcd constant
        r0, r1 = phi_coeffs, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element has no inverse (reduction failure)")
        c = r1[0]
        inv_powers = {i: coeff / c for i, coeff in enumerate(s1)}
        return CycScalar(self.order, _reduce_powers(self.order, inv_powers))

    def __truediv__(self, other: object) -> CycScalar:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __rtruediv__(self, other: object) -> CycScalar:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return o * self.invert()

    def __pow__(self, n: int) -> CycScalar:
        if n < 0:
            return self.invert() ** (-n)
        result = CycScalar.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        a, b = self._pair(o)
        return a.coords == b.coords

    def __hash__(self) -> int:
        try:
            return hash(self.as_rational())
        except NotRational:
            return hash((self.order, self.coords))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coords):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            elif j == 1:
                parts.append(f"{c}*zeta{self.order}" if c != 1 else f"zeta{self.order}")
            else:
                parts.append(
                    f"{c}*zeta{self.order}^{j}" if c != 1 else f"zeta{self.order}^{j}"
                )
        return " + ".join(parts).replace("+ -", "- ")


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while a and len(a) >= len(b):
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        while a and not a[-1]:
            a.pop()
    return q, a


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and not out[-1]:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# Coefficient domains.  Polynomials, rational functions and truncated series
# are generic over a field object exposing zero/one/coerce.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalField:
    """The field Q, with stdlib Fraction elements."""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: object) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, CycScalar):
            return value.as_rational()
        raise TypeError(f"cannot coerce {value!r} into Q")

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class CyclotomicFieldDomain:
    """The field Q(zeta_N)."""

    order: int

    @property
    def zero(self) -> CycScalar:
        return CycScalar.zero(self.order)

    @property
    def one(self) -> CycScalar:
        return CycScalar.one(self.order)

    def zeta(self, k: int = 1) -> CycScalar:
        return CycScalar.root_of_unity(k, self.order)

    def coerce(self, value: object) -> CycScalar:
        if isinstance(value, CycScalar):
            return value.promote(self.order)
        if isinstance(value, (int, Fraction)):
            return CycScalar.from_rational(Fraction(value), self.order)
        raise TypeError(f"cannot coerce {value!r} into Q(zeta{self.order})")

    def __str__(self) -> str:
        return f"Q(zeta{self.order})"


QQ = RationalField()


def mobius(n: int) -> int:
    """Moebius function, used by the root-of-unity sum identities."""
    if n == 1:
        return 1
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result
