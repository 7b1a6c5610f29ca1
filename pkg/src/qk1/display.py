"""Canonical display forms.

Rational functions print as expanded numerator over expanded denominator,
terms in decreasing degree, with integer coefficients whenever the
coefficient field is Q (the common scale factor keeps the value unchanged).
These strings are what the CLI emits and what the verification reports store.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .scalars import CycScalar, RationalField


def _scale_to_integers(num_coeffs: dict, den_coeffs: dict):
    fractions = list(num_coeffs.values()) + list(den_coeffs.values())
    if not all(isinstance(c, Fraction) for c in fractions):
        return num_coeffs, den_coeffs
    denom_lcm = lcm(*(c.denominator for c in fractions)) if fractions else 1
    scaled_num = {d: c * denom_lcm for d, c in num_coeffs.items()}
    scaled_den = {d: c * denom_lcm for d, c in den_coeffs.items()}
    ints = [abs(int(c)) for c in list(scaled_num.values()) + list(scaled_den.values())]
    g = 0
    for value in ints:
        g = gcd(g, value)
    if g > 1:
        scaled_num = {d: c / g for d, c in scaled_num.items()}
        scaled_den = {d: c / g for d, c in scaled_den.items()}
    return scaled_num, scaled_den


def coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, CycScalar):
        s = str(c)
        return f"({s})" if (" " in s or "*" in s) else s
    # nested rational function
    return f"({ratfun_str(c)})"


def poly_str(coeffs: dict, var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for d in sorted(coeffs, reverse=True):
        c = coeffs[d]
        cs = coeff_str(c)
        if d == 0:
            term = cs
        else:
            power = var if d == 1 else f"{var}^{d}"
            if cs == "1":
                term = power
            elif cs == "-1":
                term = f"-{power}"
            else:
                term = f"{cs}*{power}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def ratfun_str(f) -> str:
    num_coeffs, den_coeffs = _scale_to_integers(dict(f.num.coeffs), dict(f.den.coeffs))
    num_s = poly_str(num_coeffs, f.var)
    if set(den_coeffs) == {0} and den_coeffs[0] == 1:
        return num_s
    den_s = poly_str(den_coeffs, f.var)
    if " " in num_s or "+" in num_s:
        num_s = f"({num_s})"
    if " " in den_s or "+" in den_s or "*" in den_s or "^" in den_s:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


def series_str(series, names: list[str] | None = None) -> str:
    """Truncated-series display: graded, then lexicographically by exponents."""
    if names is None:
        names = [f"t{i}" for i in range(series.num_vars)]
    if not series.terms:
        return "0"
    keys = sorted(series.terms, key=lambda m: (sum(m), tuple(-e for e in m)))
    parts = []
    for m in keys:
        c = series.terms[m]
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
        )
        cs = coeff_str(c) if not isinstance(c, Fraction) else str(c)
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append(f"-{mono}")
        else:
            parts.append(f"{cs}*{mono}")
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
