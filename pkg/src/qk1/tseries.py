"""Truncated multivariate power series over a pluggable coefficient ring.

A series in t0..tK is a sparse map from exponent multi-indices (total degree
bounded by the cutoff) to coefficients.  Arithmetic is exact; products drop
terms beyond the cutoff.  ``fixed_point`` runs ideal-adic iteration with a
contraction certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import (
    ConstantTermNotOne,
    IndexBeyondCutoff,
    NoContraction,
    NonzeroConstantTerm,
)

Monomial = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class TSeries:
    """Multivariate power series truncated at a total-degree cutoff."""

    num_vars: int
    cutoff: int
    ring: object
    terms: dict[Monomial, object]

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(ring, num_vars: int, cutoff: int) -> TSeries:
        return TSeries(num_vars, cutoff, ring, {})

    @staticmethod
    def constant(ring, num_vars: int, cutoff: int, value) -> TSeries:
        value = ring.coerce(value)
        terms = {(0,) * num_vars: value} if value else {}
        return TSeries(num_vars, cutoff, ring, terms)

    @staticmethod
    def variable(ring, num_vars: int, cutoff: int, index: int) -> TSeries:
        if not 0 <= index < num_vars:
            raise IndexError(f"variable index {index} out of range")
        mono = tuple(int(i == index) for i in range(num_vars))
        if cutoff < 1:
            return TSeries.zero(ring, num_vars, cutoff)
        return TSeries(num_vars, cutoff, ring, {mono: ring.one})

    def _make(self, terms: dict[Monomial, object], cutoff: int | None = None) -> TSeries:
        cutoff = self.cutoff if cutoff is None else cutoff
        clean = {m: c for m, c in terms.items() if c and sum(m) <= cutoff}
        return TSeries(self.num_vars, cutoff, self.ring, clean)

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def ideal_order(self) -> int | None:
        """Smallest total degree with a nonzero term; None for the zero series."""
        return min(sum(m) for m in self.terms) if self.terms else None

    def coefficient(self, mono: Monomial):
        if sum(mono) > self.cutoff:
            raise IndexBeyondCutoff(f"degree {sum(mono)} beyond cutoff {self.cutoff}")
        return self.terms.get(tuple(mono), self.ring.zero)

    def constant_term(self):
        return self.terms.get((0,) * self.num_vars, self.ring.zero)

    def truncate(self, cutoff: int) -> TSeries:
        return self._make(self.terms, cutoff=cutoff)

    def truncate_below(self, order: int) -> TSeries:
        """Drop all terms of total degree >= order (reduce modulo I^order)."""
        return self._make({m: c for m, c in self.terms.items() if sum(m) < order})

    def homogeneous_part(self, degree: int) -> TSeries:
        return self._make({m: c for m, c in self.terms.items() if sum(m) == degree})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: TSeries) -> None:
        if self.num_vars != other.num_vars:
            raise ValueError("mismatched variable counts")

    def __add__(self, other: TSeries) -> TSeries:
        self._check(other)
        cutoff = min(self.cutoff, other.cutoff)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, self.ring.zero) + c
        return self._make(out, cutoff=cutoff)

    def __neg__(self) -> TSeries:
        return self._make({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: TSeries) -> TSeries:
        return self + (-other)

    def __mul__(self, other: TSeries) -> TSeries:
        self._check(other)
        cutoff = min(self.cutoff, other.cutoff)
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            d1 = sum(m1)
            for m2, c2 in other.terms.items():
                if d1 + sum(m2) > cutoff:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                out[m] = out.get(m, self.ring.zero) + prod
        return self._make(out, cutoff=cutoff)

    def scale(self, value) -> TSeries:
        value = self.ring.coerce(value)
        return self._make({m: c * value for m, c in self.terms.items()})

    def __pow__(self, n: int) -> TSeries:
        if n < 0:
            raise ValueError("negative series power")
        result = TSeries.constant(self.ring, self.num_vars, self.cutoff, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus -------------------------------------------------------

    def exp(self) -> TSeries:
        """Sum of s^k / k!; requires zero constant term."""
        if self.constant_term():
            raise NonzeroConstantTerm("exp needs a series with zero constant term")
        acc = TSeries.constant(self.ring, self.num_vars, self.cutoff, 1)
        term = acc
        for k in range(1, self.cutoff + 1):
            term = (term * self).scale(Fraction(1, k))
            if term.is_zero():
                break
            acc = acc + term
        return acc

    def log(self) -> TSeries:
        """-sum (1-s)^k / k; requires constant term one."""
        if self.constant_term() != self.ring.one:
            raise ConstantTermNotOne("log needs a series with constant term one")
        u = TSeries.constant(self.ring, self.num_vars, self.cutoff, 1) - self
        acc = TSeries.zero(self.ring, self.num_vars, self.cutoff)
        power = TSeries.constant(self.ring, self.num_vars, self.cutoff, 1)
        for k in range(1, self.cutoff + 1):
            power = power * u
            if power.is_zero():
                break
            acc = acc - power.scale(Fraction(1, k))
        return acc

    def inverse_unit(self) -> TSeries:
        """1/s for a series with invertible constant term."""
        c0 = self.constant_term()
        if not c0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        normalized = self.scale(self.ring.one / c0)
        u = TSeries.constant(self.ring, self.num_vars, self.cutoff, 1) - normalized
        acc = TSeries.constant(self.ring, self.num_vars, self.cutoff, 1)
        power = acc
        for _ in range(self.cutoff):
            power = power * u
            if power.is_zero():
                break
            acc = acc + power
        return acc.scale(self.ring.one / c0)

    def partial_derivative(self, index: int) -> TSeries:
        """Formal d/dt_index; the cutoff drops by one."""
        out: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            e = m[index]
            if not e:
                continue
            lowered = tuple(x - 1 if i == index else x for i, x in enumerate(m))
            out[lowered] = c * self.ring.coerce(e)
        return TSeries(self.num_vars, max(self.cutoff - 1, 0), self.ring, out)

    # -- reshaping ------------------------------------------------------

    def map_coefficients(self, fn: Callable, new_ring) -> TSeries:
        out = {m: fn(c) for m, c in self.terms.items()}
        return TSeries(self.num_vars, self.cutoff, new_ring,
                       {m: c for m, c in out.items() if c})

    def specialize(self, weights: list) -> TSeries:
        """Substitute t_i -> weights[i] * eps, producing a one-variable series."""
        out: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            value = c
            for i, e in enumerate(m):
                if e:
                    value = value * self.ring.coerce(weights[i]) ** e
            key = (sum(m),)
            out[key] = out.get(key, self.ring.zero) + value
        return TSeries(1, self.cutoff, self.ring, {m: c for m, c in out.items() if c})

    def __repr__(self) -> str:
        from .display import series_str

        return f"TSeries({series_str(self)})"


def fixed_point(
    phi: Callable[[TSeries], TSeries],
    seed: TSeries,
    cutoff: int,
    trace: list | None = None,
) -> TSeries:
    """Iterate an ideal-adic contraction to its fixed point modulo I^(cutoff+1).

    The contraction contract requires the ideal order of successive
    differences to grow strictly; violations raise :class:`NoContraction`.
    """
    current = seed.truncate(cutoff)
    last_order = None
    for _ in range(cutoff + 2):
        if trace is not None:
            trace.append(current)
        advanced = phi(current).truncate(cutoff)
        diff = advanced - current
        if diff.is_zero():
            if trace is not None:
                trace.append(advanced)
            return advanced
        order = diff.ideal_order()
        if last_order is not None and order <= last_order:
            raise NoContraction(
                f"difference order did not grow ({last_order} -> {order})"
            )
        last_order = order
        current = advanced
    raise NoContraction("iteration failed to stabilize within cutoff + 2 steps")
