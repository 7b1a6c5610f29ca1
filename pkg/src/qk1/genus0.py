"""Genus-zero ingredients for the point target.

The input is a Laurent polynomial t(q) assembled from coordinate series
t_0..t_K against a basis in powers of (q - 1).  Two basis conventions are
carried: ``monomial`` uses (q-1)^n, ``divided-power`` uses (q-1)^n / n!.
The default is arbitrated by the acceptance suite (monomial reproduces both
the fixed-point expansion of tau and the two-point comparison).

Everything here returns truncated series: tau over Q, the transformed inputs
over Q(q), and the derivative closed forms over Q(q)(x) with x the variable
later used for residue extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import TauMismatch
from .ratfun import RatFun, RationalFunctionField, laurent_part
from .scalars import QQ
from .tseries import TSeries, fixed_point

MONOMIAL = "monomial"
DIVIDED_POWER = "divided-power"
CONVENTIONS = (MONOMIAL, DIVIDED_POWER)

QFIELD = RationalFunctionField("q", QQ)
XFIELD = RationalFunctionField("x", QFIELD)


def basis_scalar(convention: str, n: int) -> Fraction:
    """Scalar multiplying (q-1)^n in the input basis."""
    if convention == MONOMIAL:
        return Fraction(1)
    if convention == DIVIDED_POWER:
        return Fraction(1, factorial(n))
    raise ValueError(f"unknown convention {convention!r}")


def weight(convention: str, n: int, field: RationalFunctionField = QFIELD) -> RatFun:
    """Dual extraction weight w_n(q); sums against the basis to 1/(1 - qL)."""
    q = field.generator
    w = q**n / (field.one - q) ** (n + 1)
    if convention == DIVIDED_POWER:
        w = w * field.coerce(factorial(n))
    return w


@dataclass(frozen=True)
class InputT:
    """Input data: coordinate series (over Q) against the chosen basis."""

    coords: tuple[TSeries, ...]
    convention: str
    cutoff: int

    def __post_init__(self):
        for s in self.coords:
            order = s.ideal_order()
            if order is not None and order < 1:
                raise ValueError("input coordinates must lie in the ideal I")

    @staticmethod
    def generic(cutoff: int, convention: str = MONOMIAL, num_coords: int | None = None) -> InputT:
        """The generic input: coordinate n is the formal variable t_n.

        Coordinates beyond the cutoff cannot contribute (t_n first appears at
        total degree n + 1), so num_coords defaults to cutoff + 1.
        """
        n = cutoff + 1 if num_coords is None else num_coords
        coords = tuple(TSeries.variable(QQ, n, cutoff, i) for i in range(n))
        return InputT(coords, convention, cutoff)

    @staticmethod
    def from_coords(coords: list[TSeries], convention: str = MONOMIAL) -> InputT:
        cutoff = min(s.cutoff for s in coords)
        return InputT(tuple(s.truncate(cutoff) for s in coords), convention, cutoff)

    @property
    def num_vars(self) -> int:
        return self.coords[0].num_vars

    def assemble(self, field: RationalFunctionField = QFIELD) -> TSeries:
        """t(q) = sum_n t_n * beta_n * (q-1)^n as a series over the q-field."""
        q = field.generator
        total = TSeries.zero(field, self.num_vars, self.cutoff)
        for n, coord in enumerate(self.coords):
            if coord.is_zero():
                continue
            scalar = field.coerce((q - field.one) ** n * basis_scalar(self.convention, n))
            total = total + lift_series(coord, field).scale(scalar)
        return total


def lift_series(series: TSeries, field) -> TSeries:
    """Reinterpret coefficients inside a larger coefficient field."""
    return series.map_coefficients(field.coerce, field)


def evaluate_q(series: TSeries, point, target_ring=QQ) -> TSeries:
    """Evaluate each rational-function coefficient at a point of its base."""
    return series.map_coefficients(lambda c: c.evaluate(point), target_ring)


def laurent_part_coefficients(series: TSeries) -> TSeries:
    """Apply [.]_+ to every coefficient."""
    return series.map_coefficients(
        lambda c: laurent_part(c).to_ratfun(), series.ring
    )


# ---------------------------------------------------------------------------
# tau: fixed point of the transform-based map, and the implicit-equation oracle
# ---------------------------------------------------------------------------


def implicit_step(t: InputT, tau: TSeries) -> TSeries:
    """One iteration of tau <- sum_n t_n beta_n tau^n / n! (over Q)."""
    total = TSeries.zero(QQ, t.num_vars, tau.cutoff)
    power = TSeries.constant(QQ, t.num_vars, tau.cutoff, 1)
    for n, coord in enumerate(t.coords):
        if n > 0:
            power = power * tau
        if coord.is_zero():
            continue
        scalar = basis_scalar(t.convention, n) * Fraction(1, factorial(n))
        total = total + (coord * power).scale(scalar)
    return total


def solve_tau_implicit(t: InputT, cutoff: int) -> TSeries:
    """Independent oracle: stabilize the implicit equation from seed zero."""
    seed = TSeries.zero(QQ, t.num_vars, cutoff)
    return fixed_point(lambda tau: implicit_step(t, tau), seed, cutoff)


def t_map(t: InputT, tau: TSeries) -> TSeries:
    """One application of the tau-update map, via the transform machinery.

    Computed as tau + tbar(1) where tbar is the transformed input for the
    (not necessarily fixed) tau; at a fixed point tbar(1) = 0.
    """
    pre = _transform_core(t, tau)
    correction = evaluate_q(pre, Fraction(1))
    return tau + correction


def solve_tau(t: InputT, cutoff: int, trace: list | None = None) -> TSeries:
    """Fixed point of the update map; post-verified by tbar(1) = 0."""
    seed = TSeries.zero(QQ, t.num_vars, cutoff)
    tau = fixed_point(lambda s: t_map(t, s), seed, cutoff, trace=trace)
    sbar_transform(t, tau)  # raises TauMismatch if the fixed point is wrong
    return tau


def _transform_core(t: InputT, tau: TSeries) -> TSeries:
    """[e^(tau/(q-1)) (t(q) + 1 - q)]_+ - (1 - q), before any evaluation."""
    field = QFIELD
    q = field.generator
    cutoff = tau.cutoff
    tau_q = lift_series(tau, field)
    exponent = tau_q.scale(field.one / (q - field.one))
    exp_factor = exponent.exp()
    one_minus_q = TSeries.constant(field, t.num_vars, cutoff, field.one - q)
    assembled = t.assemble(field).truncate(cutoff)
    product = exp_factor * (assembled + one_minus_q)
    return laurent_part_coefficients(product) - one_minus_q


def sbar_transform(t: InputT, tau: TSeries) -> TSeries:
    """The transformed input tbar(q); enforces tbar(1) = 0."""
    tbar = _transform_core(t, tau)
    at_one = evaluate_q(tbar, Fraction(1))
    if not at_one.is_zero():
        raise TauMismatch(f"tbar(1) = {at_one!r} is nonzero for the supplied tau")
    return tbar


def tbar_new_fake(tbar: TSeries, tau: TSeries) -> tuple[TSeries, TSeries]:
    """The twisted-sector inputs built from tbar and the exponential factor."""
    field = QFIELD
    q = field.generator
    cutoff = tbar.cutoff
    tau_q = lift_series(tau.truncate(cutoff), field)
    exp_factor = tau_q.scale(field.one / (field.one - q)).exp()
    one_minus_q = TSeries.constant(field, tbar.num_vars, cutoff, field.one - q)
    new = (tbar + one_minus_q) * exp_factor - one_minus_q
    fake = one_minus_q * exp_factor - one_minus_q
    return new, fake


def tbar_scalar_coeff(t: InputT, tau: TSeries, m: int) -> TSeries:
    """The scalar tbar_m = sum_n t_n beta_n tau^(n-m) / (n-m)! for m >= 1."""
    if m < 1:
        raise ValueError("only m >= 1 carries transform data; tbar_0 vanishes")
    total = TSeries.zero(QQ, t.num_vars, tau.cutoff)
    for n, coord in enumerate(t.coords):
        if n < m or coord.is_zero():
            continue
        scalar = basis_scalar(t.convention, n) * Fraction(1, factorial(n - m))
        total = total + (coord * tau ** (n - m)).scale(scalar)
    return total


def j_function(tau: TSeries, field: RationalFunctionField = QFIELD) -> TSeries:
    """(1 - q) e^(tau / (1 - q)) over the q-field."""
    q = field.generator
    tau_q = lift_series(tau, field)
    exp_factor = tau_q.scale(field.one / (field.one - q)).exp()
    return exp_factor.scale(field.one - q)


# ---------------------------------------------------------------------------
# Derivative closed forms for the weighted derivation D = sum w_n(q) d/dt_n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DerivativeForms:
    """Closed forms of D applied to tau and to the twisted inputs.

    ``dtau`` lives over Q(q); the other two live over Q(q)(x) where x is the
    slot later substituted by the inverse residue variable.  The stored
    ``dnew`` is the corrected closed form e^(tau/(1-x)) e^(q tau/(1-q)) / (1-qx);
    adding ``dfake`` reproduces the uncorrected variant (see the tests).
    """

    dtau: TSeries
    dnew: TSeries
    dfake: TSeries


def exp_q_tau(tau: TSeries, field: RationalFunctionField = QFIELD) -> TSeries:
    """e^(q tau / (1 - q)) over the q-field."""
    q = field.generator
    return lift_series(tau, field).scale(q / (field.one - q)).exp()


def d_tau_closed(t: InputT, tau: TSeries, field: RationalFunctionField = QFIELD) -> TSeries:
    """D tau = e^(q tau/(1-q)) / ((1 - tbar_1)(1 - q))."""
    q = field.generator
    tbar1 = tbar_scalar_coeff(t, tau, 1)
    one = TSeries.constant(QQ, t.num_vars, tau.cutoff, 1)
    inv = (one - tbar1).inverse_unit()
    return exp_q_tau(tau, field) * lift_series(inv, field).scale(field.one / (field.one - q))


def d_closed_forms(t: InputT, tau: TSeries) -> DerivativeForms:
    dtau = d_tau_closed(t, tau)
    xf = XFIELD
    x = xf.generator
    qx = xf.coerce(QFIELD.generator)
    tau_x = lift_series(tau, xf)
    exp_x = tau_x.scale(xf.one / (xf.one - x)).exp()
    dfake = exp_x * lift_series(dtau, xf)
    exp_q = lift_series(exp_q_tau(tau), xf)
    dnew = exp_x * exp_q.scale(xf.one / (xf.one - qx * x))
    return DerivativeForms(dtau=dtau, dnew=dnew, dfake=dfake)


def formal_d(series: TSeries, convention: str = MONOMIAL, qelem=None) -> TSeries:
    """The derivation D = sum_n w_n(q) d/dt_n applied formally, coefficient-wise.

    The cutoff drops by one.  ``qelem`` is the element playing the role of q
    in the weights; it defaults to the generator of the coefficient field but
    must be passed explicitly when the series lives over a taller tower (for
    example over Q(q)(x), where the weights still use q).  This is the
    independent oracle against the closed forms above.
    """
    field = series.ring
    q = field.generator if qelem is None else qelem
    total = TSeries.zero(field, series.num_vars, max(series.cutoff - 1, 0))
    for n in range(series.num_vars):
        part = series.partial_derivative(n)
        if part.is_zero():
            continue
        w = q**n / (field.one - q) ** (n + 1)
        if convention == DIVIDED_POWER:
            w = w * field.coerce(factorial(n))
        total = total + part.scale(w)
    return total
