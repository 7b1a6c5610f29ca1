"""Polynomials, Laurent polynomials and rational functions over a pluggable field.

Everything is exact.  Coefficient fields form a tower: Q, Q(zeta_N), and
rational-function fields F(var) whose elements are :class:`RatFun` over F, so
objects like rational functions in ``q1`` over rational functions in ``q2``
come for free.

The calculus layer provides local (Laurent) expansions at finite points and at
infinity, residues, partial fractions over a cyclotomic splitting field, the
Laurent-polynomial-part operator, and the residue pairing Omega.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable

from .errors import IrreducibleDenominator, NotRational
from .scalars import QQ, CycScalar, CyclotomicFieldDomain, RationalField


class _Infinity:
    """Sentinel for the point at infinity."""

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


class Poly:
    """Sparse polynomial over a field; no zero coefficients are stored.

    The degree of the zero polynomial is ``None``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: dict[int, object]):
        self.field = field
        self.coeffs = {d: c for d, c in coeffs.items() if c}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(field) -> Poly:
        return Poly(field, {})

    @staticmethod
    def constant(field, value) -> Poly:
        return Poly(field, {0: field.coerce(value)})

    @staticmethod
    def variable(field) -> Poly:
        return Poly(field, {1: field.one})

    @staticmethod
    def from_list(field, ascending: list) -> Poly:
        return Poly(field, {i: field.coerce(c) for i, c in enumerate(ascending)})

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self):
        return self.coeffs[max(self.coeffs)]

    def coeff(self, d: int):
        return self.coeffs.get(d, self.field.zero)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, self.field.zero) + c
        return Poly(self.field, out)

    def __neg__(self) -> Poly:
        return Poly(self.field, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        out: dict[int, object] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                prod = c1 * c2
                out[d] = out.get(d, self.field.zero) + prod
        return Poly(self.field, out)

    def scale(self, value) -> Poly:
        value = self.field.coerce(value)
        return Poly(self.field, {d: c * value for d, c in self.coeffs.items()})

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_degrees(self, k: int) -> Poly:
        return Poly(self.field, {d + k: c for d, c in self.coeffs.items()})

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quo: dict[int, object] = {}
        rem = dict(self.coeffs)
        dlead = other.degree
        clead = other.leading()
        while rem:
            rdeg = max(rem)
            if rdeg < dlead:
                break
            factor = rem[rdeg] / clead
            quo[rdeg - dlead] = factor
            for d, c in other.coeffs.items():
                nd = d + rdeg - dlead
                val = rem.get(nd, self.field.zero) - factor * c
                if val:
                    rem[nd] = val
                else:
                    rem.pop(nd, None)
        return Poly(self.field, quo), Poly(self.field, rem)

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(self.field.one / a.leading())

    def derivative(self) -> Poly:
        return Poly(
            self.field,
            {d - 1: c * self.field.coerce(d) for d, c in self.coeffs.items() if d > 0},
        )

    def evaluate(self, point):
        if not self.coeffs:
            return self.field.zero
        acc = self.field.zero
        for d in range(max(self.coeffs), -1, -1):
            acc = acc * point + self.coeffs.get(d, self.field.zero)
        return acc

    def dense(self) -> list:
        n = self.degree
        if n is None:
            return []
        return [self.coeffs.get(i, self.field.zero) for i in range(n + 1)]

    def taylor_shift(self, a) -> list:
        """Coefficients of p(u + a), ascending in u, via repeated synthetic division."""
        a = self.field.coerce(a)
        work = self.dense()
        out = []
        while work:
            quotient = [self.field.zero] * (len(work) - 1)
            carry = self.field.zero
            for j in range(len(work) - 1, 0, -1):
                carry = work[j] + carry * a
                quotient[j - 1] = carry
            rem = work[0] + (quotient[0] * a if quotient else self.field.zero)
            out.append(rem)
            work = quotient
        return out

    def map_coefficients(self, fn: Callable, new_field) -> Poly:
        return Poly(new_field, {d: fn(c) for d, c in self.coeffs.items()})


@dataclass(frozen=True)
class RationalFunctionField:
    """The field F(var) of rational functions over a base field F."""

    var: str
    base: object

    @property
    def zero(self) -> RatFun:
        return RatFun(self, Poly.zero(self.base), Poly.constant(self.base, 1), _normalized=True)

    @property
    def one(self) -> RatFun:
        return RatFun(
            self, Poly.constant(self.base, 1), Poly.constant(self.base, 1), _normalized=True
        )

    @property
    def generator(self) -> RatFun:
        return RatFun(
            self, Poly.variable(self.base), Poly.constant(self.base, 1), _normalized=True
        )

    def coerce(self, value: object) -> RatFun:
        if isinstance(value, RatFun):
            if value.field == self:
                return value
            if value.field.var == self.var:
                return value.map_coefficients(self.base.coerce, self.base)
            # a rational function in some inner variable: constant of the base
            inner = self.base.coerce(value)
            return RatFun(
                self,
                Poly.constant(self.base, inner),
                Poly.constant(self.base, 1),
                _normalized=True,
            )
        inner = self.base.coerce(value)
        return RatFun(
            self, Poly(self.base, {0: inner}), Poly.constant(self.base, 1), _normalized=True
        )

    def __str__(self) -> str:
        return f"{self.base}({self.var})"


class RatFun:
    """Normalized quotient of polynomials in one named variable.

    Invariants: denominator is nonzero and monic, gcd(num, den) = 1.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: RationalFunctionField, num: Poly, den: Poly, _normalized=False):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            g = num.gcd(den)
            if not g.is_zero() and g.degree is not None and g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading()
            if lead != field.base.one:
                inv = field.base.one / lead
                num = num.scale(inv)
                den = den.scale(inv)
        self.field = field
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_polys(field: RationalFunctionField, num: Poly, den: Poly) -> RatFun:
        return RatFun(field, num, den)

    @property
    def var(self) -> str:
        return self.field.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_laurent_polynomial(self) -> bool:
        return len(self.den.coeffs) == 1

    # -- arithmetic -----------------------------------------------------

    def _coerce_other(self, other: object) -> RatFun | None:
        if isinstance(other, RatFun) and other.field == self.field:
            return other
        try:
            return self.field.coerce(other)
        except (TypeError, NotRational):
            return None

    def __add__(self, other: object) -> RatFun:
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return RatFun(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun(self.field, -self.num, self.den, _normalized=True)

    def __sub__(self, other: object) -> RatFun:
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> RatFun:
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> RatFun:
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return RatFun(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> RatFun:
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: object) -> RatFun:
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFun(self.field, self.den, self.num) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self.num.coeffs), frozenset(self.den.coeffs)))

    # -- substitution ---------------------------------------------------

    def evaluate(self, point):
        """Value at a base-field point; raises ZeroDivisionError at a pole."""
        point = self.field.base.coerce(point)
        den_val = self.den.evaluate(point)
        if not den_val:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num.evaluate(point) / den_val

    def substitute_inverse(self, new_var: str | None = None) -> RatFun:
        """f(1/x) as a normalized rational function of x."""
        m = max(self.num.degree or 0, self.den.degree or 0)
        num = Poly(self.field.base, {m - d: c for d, c in self.num.coeffs.items()})
        den = Poly(self.field.base, {m - d: c for d, c in self.den.coeffs.items()})
        field = self.field if new_var is None else RationalFunctionField(new_var, self.field.base)
        return RatFun(field, num, den)

    def rename(self, new_var: str) -> RatFun:
        field = RationalFunctionField(new_var, self.field.base)
        return RatFun(field, self.num, self.den, _normalized=True)

    def map_coefficients(self, fn: Callable, new_base) -> RatFun:
        field = RationalFunctionField(self.var, new_base)
        return RatFun(field, self.num.map_coefficients(fn, new_base),
                      self.den.map_coefficients(fn, new_base))

    def compose(self, inner: RatFun) -> RatFun:
        """Substitute the variable by ``inner`` (same coefficient field)."""
        field = inner.field
        num = _poly_at_ratfun(self.num, inner, field)
        den = _poly_at_ratfun(self.den, inner, field)
        return num / den

    def derivative(self) -> RatFun:
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFun(self.field, num, self.den * self.den)

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        (k,) = self.den.coeffs
        lead = self.den.coeffs[k]
        return LaurentPoly(
            self.field, {d - k: c / lead for d, c in self.num.coeffs.items()}
        )

    def __repr__(self) -> str:
        from .display import ratfun_str

        return ratfun_str(self)


def _poly_at_ratfun(p: Poly, point: RatFun, field: RationalFunctionField) -> RatFun:
    acc = field.zero
    if p.is_zero():
        return acc
    for d in range(p.degree, -1, -1):
        acc = acc * point + field.coerce(p.coeff(d))
    return acc


class LaurentPoly:
    """Finite Laurent polynomial; degrees may be negative."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: RationalFunctionField, coeffs: dict[int, object]):
        self.field = field
        self.coeffs = {d: c for d, c in coeffs.items() if c}

    @property
    def var(self) -> str:
        return self.field.var

    @staticmethod
    def zero(field: RationalFunctionField) -> LaurentPoly:
        return LaurentPoly(field, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, self.field.base.zero) + c
        return LaurentPoly(self.field, out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.field, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, object] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                out[d] = out.get(d, self.field.base.zero) + c1 * c2
        return LaurentPoly(self.field, out)

    def evaluate(self, point):
        point = self.field.base.coerce(point)
        acc = self.field.base.zero
        for d, c in self.coeffs.items():
            acc = acc + c * point**d if d >= 0 else acc + c / point ** (-d)
        return acc

    def to_ratfun(self) -> RatFun:
        shift = min((d for d in self.coeffs if d < 0), default=0)
        num = Poly(self.field.base, {d - shift: c for d, c in self.coeffs.items()})
        den = Poly(self.field.base, {-shift: self.field.base.one})
        return RatFun(self.field, num, den)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


# ---------------------------------------------------------------------------
# Field promotion into a cyclotomic splitting field.
# ---------------------------------------------------------------------------


def with_cyclotomic(field, order: int):
    """The same field tower with the rational floor replaced by Q(zeta_order)."""
    if isinstance(field, RationalField):
        return CyclotomicFieldDomain(order)
    if isinstance(field, CyclotomicFieldDomain):
        return CyclotomicFieldDomain(lcm(field.order, order))
    if isinstance(field, RationalFunctionField):
        return RationalFunctionField(field.var, with_cyclotomic(field.base, order))
    raise TypeError(f"unknown field {field}")


def promote(value, field, target_field):
    """Embed a value of ``field`` into the promoted ``target_field``."""
    if field == target_field:
        return value
    if isinstance(target_field, RationalFunctionField):
        if isinstance(value, RatFun) and value.var == target_field.var:
            return value.map_coefficients(
                lambda c: promote(c, field.base, target_field.base), target_field.base
            )
        return target_field.coerce(value)
    return target_field.coerce(value)


# ---------------------------------------------------------------------------
# Local expansions and residues.
# ---------------------------------------------------------------------------


@dataclass
class LocalExpansion:
    """Truncated Laurent expansion of a rational function at a point.

    ``coeffs[k]`` is the coefficient of ``(q - a)^k`` at a finite center,
    of ``q^k`` at zero, and of ``q^(-k)`` at infinity.
    """

    center: object
    coeffs: dict[int, object]
    order: int

    def coeff(self, k: int):
        if k > self.order:
            raise ValueError(f"expansion only computed to order {self.order}")
        return self.coeffs.get(k)


def local_expansion(f: RatFun, center, order: int) -> LocalExpansion:
    """Laurent expansion with the coefficients of (q-a)^k for k <= order."""
    base = f.field.base
    if center is INFINITY:
        g = f.substitute_inverse()
        exp = local_expansion(g, base.zero, order)
        return LocalExpansion(INFINITY, exp.coeffs, order)
    center = base.coerce(center)
    num_shifted = f.num.taylor_shift(center)
    den_shifted = f.den.taylor_shift(center)
    v_num = _valuation(num_shifted)
    v_den = _valuation(den_shifted)
    if v_num is None:  # zero function
        return LocalExpansion(center, {}, order)
    val = v_num - v_den
    if val > order:
        return LocalExpansion(center, {}, order)
    n_terms = order - val + 1
    nn = num_shifted[v_num:]
    dd = den_shifted[v_den:]
    d0 = dd[0]
    series: list = []
    for k in range(n_terms):
        acc = nn[k] if k < len(nn) else base.zero
        for j in range(max(0, k - len(dd) + 1), k):
            acc = acc - series[j] * dd[k - j]
        series.append(acc / d0)
    coeffs = {val + k: c for k, c in enumerate(series) if c}
    return LocalExpansion(center, coeffs, order)


def _valuation(dense: list) -> int | None:
    for i, c in enumerate(dense):
        if c:
            return i
    return None


def residue_at(f: RatFun, center):
    """Residue of the differential f dq at the center (field point, 0, or INFINITY)."""
    base = f.field.base
    if center is INFINITY:
        exp = local_expansion(f, INFINITY, 1)
        c1 = exp.coeffs.get(1)
        return -c1 if c1 is not None else base.zero
    exp = local_expansion(f, center, -1)
    c = exp.coeffs.get(-1)
    return c if c is not None else base.zero


# ---------------------------------------------------------------------------
# Partial fractions over a cyclotomic splitting field.
# ---------------------------------------------------------------------------


@dataclass
class PartialFractions:
    """f = poly_part + sum coeff / (var - pole)^multiplicity, exactly."""

    field: RationalFunctionField
    poly_part: Poly
    terms: list  # (pole, multiplicity, coefficient)

    def recombine(self) -> RatFun:
        total = RatFun(
            self.field, self.poly_part, Poly.constant(self.field.base, 1)
        )
        x = self.field.generator
        for pole, mult, coeff in self.terms:
            total = total + self.field.coerce(coeff) / (x - self.field.coerce(pole)) ** mult
        return total


def partial_fractions(f: RatFun, cyclotomic_order: int = 12) -> PartialFractions:
    """Decompose over Q(zeta_N)-promoted coefficients.

    Handles denominators that split into roots of unity, rational roots and
    factors linear in the variable (e.g. parameter poles like 1 - q*q1).
    """
    target_base = with_cyclotomic(f.field.base, cyclotomic_order)
    field = RationalFunctionField(f.var, target_base)
    g = promote(f, f.field, field)
    quo, rem = g.num.divmod(g.den)
    poles = _find_roots(g.den, target_base, cyclotomic_order)
    proper = RatFun(field, rem, g.den)
    terms = []
    for pole, mult in poles:
        exp = local_expansion(proper, pole, -1)
        for k in range(1, mult + 1):
            c = exp.coeffs.get(-k)
            if c:
                terms.append((pole, k, c))
    return PartialFractions(field, quo, terms)


def _find_roots(den: Poly, base, cyclotomic_order: int) -> list:
    d = den
    roots: list = []
    candidates = [base.zero]
    candidates += [_unity_root(base, k, cyclotomic_order) for k in range(cyclotomic_order)]
    seen = []
    for a in candidates:
        if any(a == s for s in seen):
            continue
        seen.append(a)
        mult = 0
        while not d.is_zero() and d.degree and not d.evaluate(a):
            d = d.divmod(Poly(base, {1: base.one, 0: -a}))[0]
            mult += 1
        if mult:
            roots.append((a, mult))
    # rational root candidates, when the remaining coefficients are rational
    for a in _rational_candidates(d, base):
        mult = 0
        while not d.is_zero() and d.degree and not d.evaluate(a):
            d = d.divmod(Poly(base, {1: base.one, 0: -a}))[0]
            mult += 1
        if mult:
            roots.append((a, mult))
    # remaining factors linear in the variable (parameter poles)
    while d.degree:
        if d.degree == 1:
            a = -d.coeff(0) / d.coeff(1)
            roots.append((a, 1))
            d = Poly.constant(base, 1)
        else:
            raise IrreducibleDenominator(
                f"factor of degree {d.degree} does not split over the configured field"
            )
    # merge repeated parameter poles
    merged: list = []
    for a, m in roots:
        for i, (b, n) in enumerate(merged):
            if a == b:
                merged[i] = (b, n + m)
                break
        else:
            merged.append((a, m))
    return merged


def _unity_root(base, k: int, order: int):
    zeta = CycScalar.root_of_unity(k, order)
    return base.coerce(zeta)


def _rational_candidates(d: Poly, base) -> list:
    if d.is_zero() or not d.degree:
        return []
    rationals = []
    for c in d.coeffs.values():
        r = _as_fraction(c)
        if r is None:
            return []
        rationals.append(r)
    scale = lcm(*(r.denominator for r in rationals)) if rationals else 1
    ints = {d_: int(r * scale) for d_, r in zip(d.coeffs.keys(), rationals)}
    lead = ints[max(ints)]
    const = ints.get(min(ints))
    if const is None or const == 0:
        const = 1
    cands = set()
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return [base.coerce(c) for c in sorted(cands)]


def _as_fraction(c) -> Fraction | None:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, CycScalar):
        try:
            return c.as_rational()
        except NotRational:
            return None
    if isinstance(c, RatFun):
        if c.is_polynomial() and (c.num.degree or 0) == 0:
            return _as_fraction(c.num.coeff(0)) if not c.num.is_zero() else Fraction(0)
        return None
    return None


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            out.append(n // i)
        i += 1
    return sorted(set(out))


# ---------------------------------------------------------------------------
# Laurent polynomial part and the Omega pairing.
# ---------------------------------------------------------------------------


def laurent_part(f: RatFun) -> LaurentPoly:
    """[f]_+ : polynomial quotient plus the principal part at zero.

    Poles at nonzero finite points are dropped; f - [f]_+ is a proper fraction
    with denominator coprime to the variable.
    """
    quo, rem = f.num.divmod(f.den)
    out = dict(quo.coeffs)
    v = _root_multiplicity_at_zero(f.den)
    if v and not rem.is_zero():
        proper = RatFun(f.field, rem, f.den)
        exp = local_expansion(proper, f.field.base.zero, -1)
        for k, c in exp.coeffs.items():
            if k < 0 and c:
                out[k] = out.get(k, f.field.base.zero) + c
    return LaurentPoly(f.field, out)


def _root_multiplicity_at_zero(p: Poly) -> int:
    return min(p.coeffs) if p.coeffs else 0


def laurent_part_via_residues(f: RatFun) -> LaurentPoly:
    """[f]_+ computed as -(Res_0 + Res_inf) of f(w)/(w - q) dw.

    Independent route used to cross-check :func:`laurent_part`.  The original
    variable becomes a parameter of the integration variable's coefficient
    field, so the two residues are rational functions of it.
    """
    param = f.field  # the original variable, now a parameter field
    wfield = RationalFunctionField("_w", param)
    num_w = f.num.map_coefficients(param.coerce, param)
    den_w = f.den.map_coefficients(param.coerce, param)
    w_minus_q = Poly(param, {1: param.one, 0: -param.generator})
    g = RatFun(wfield, num_w, den_w * w_minus_q)
    total = residue_at(g, param.zero) + residue_at(g, INFINITY)
    return (-total).to_laurent()


def omega_pair(f: RatFun, g: RatFun):
    """Omega(f, g) = (Res_0 + Res_inf) f(1/q) g(q) dq/q."""
    if f.var != g.var:
        raise ValueError("operands must share a variable")
    h = f.substitute_inverse() * g / f.field.generator
    return residue_at(h, f.field.base.zero) + residue_at(h, INFINITY)


def equal_cross_multiplied(f: RatFun, g: RatFun) -> bool:
    """Exact equality by cross multiplication (no normalization assumptions)."""
    return (f.num * g.den) == (g.num * f.den)
