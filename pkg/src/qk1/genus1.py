"""Genus-one assembly for the point target.

Reference correlator data, the primary generating function, the log-det
correction, twisted-sector residue sums over {0, 1, infinity} (with the
roots-of-unity route as an exact cross-check), the two-point reconstruction
and its comparison against the known closed form, the one-point
reconstruction with a distinguished insertion, and the exponential
substitution that turns the mixed Hodge table into the descendant
generating function.

Truncation convention: genus-one pipelines take an ``order`` parameter and
work modulo I^order (total degrees below ``order``), since the stored
correlator table only covers one and two insertions.  Requests that would
need deeper data raise :class:`UnsupportedOrder` or
:class:`MissingCorrelatorData`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import MissingCorrelatorData, UnsupportedAtom, UnsupportedOrder
from .genus0 import (
    MONOMIAL,
    QFIELD,
    XFIELD,
    DerivativeForms,
    InputT,
    d_closed_forms,
    lift_series,
    sbar_transform,
    solve_tau,
    tbar_new_fake,
    tbar_scalar_coeff,
    weight,
)
from .ratfun import (
    INFINITY,
    Poly,
    RatFun,
    RationalFunctionField,
    local_expansion,
    partial_fractions,
    promote,
    residue_at,
    with_cyclotomic,
)
from .scalars import QQ, CycScalar, CyclotomicFieldDomain
from .tseries import TSeries

MAX_ORDER = 3  # one- and two-insertion correlator data only

Q2FIELD = RationalFunctionField("q2", QQ)
Q1FIELD = RationalFunctionField("q1", Q2FIELD)
_X0FIELD = RationalFunctionField("x", QQ)


# ---------------------------------------------------------------------------
# Correlator table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorrelatorTable:
    """Closed-form genus-one point correlators and the mixed Hodge table.

    ``one_point`` is the one-insertion descendant correlator, ``two_point_unit``
    the two-insertion correlator with a unit in the second slot, and
    ``hodge_mixed`` the bivariate generating function pairing powers of the
    dual Hodge class against the descendant insertion.  ``f1_constants`` are
    the constant-input one- and two-insertion values.
    """

    cyclotomic_order: int
    one_point: RatFun
    two_point_unit: RatFun
    hodge_mixed: RatFun
    f1_constants: tuple[Fraction, Fraction]


def build_table(cyclotomic_order: int = 12) -> CorrelatorTable:
    q = QFIELD.generator
    one = QFIELD.one
    one_point = one / ((one - q**4) * (one - q**6))
    two_point_unit = one / ((one - q**2) * (one - q**3) * (one - q**4))
    table = CorrelatorTable(
        cyclotomic_order=cyclotomic_order,
        one_point=one_point,
        two_point_unit=two_point_unit,
        hodge_mixed=_hodge_mixed(),
        f1_constants=(Fraction(1), Fraction(1)),
    )
    _verify_table(table)
    return table


def _hodge_mixed() -> RatFun:
    """The seven-term mixed Hodge generating function, as x-partial fractions.

    The (x+1)^-2 term carries a minus sign: the positive sign sometimes quoted
    for it is inconsistent with the specialization at x = 0 and with the
    exponential-substitution identity, both enforced by the test suite.
    """
    f = XFIELD
    x = f.generator
    qi = QFIELD.generator
    oi = QFIELD.one
    lift = f.coerce
    term1 = lift((5 * qi - 6 * oi) / (24 * (qi - oi) ** 2)) / (x - f.one)
    term2 = lift((5 * qi + 6 * oi) / (24 * (qi + oi) ** 2)) / (x + f.one)
    term3 = lift(oi / (24 * (qi - oi))) / (x - f.one) ** 2
    term4 = -lift(oi / (24 * (qi + oi))) / (x + f.one) ** 2
    term5 = (lift(qi) * x + f.one) / (lift(4 * (qi**2 + oi)) * (x**2 + f.one))
    term6 = (lift(qi) * x - lift(qi) + f.one) / (
        lift(6 * (qi**2 - qi + oi)) * (x**2 - x + f.one)
    )
    term7 = (lift(qi) * x + lift(qi) + f.one) / (
        lift(6 * (qi**2 + qi + oi)) * (x**2 + x + f.one)
    )
    return term1 + term2 + term3 + term4 + term5 + term6 + term7


def one_point_from_unity_atoms(cyclotomic_order: int = 12) -> RatFun:
    """Re-derive the one-point correlator from its root-of-unity atom display.

    sum over z = +-1 of (5 - 4 z q)/(24 (1 - z q)^2), plus 1/(4 (1 - z^2) (1 - z q))
    over z = +-i, plus 1/(6 (1 - z^2) (1 - z q)) over the primitive 6th and 3rd
    roots.
    """
    base = CyclotomicFieldDomain(cyclotomic_order)
    field = RationalFunctionField("q", base)
    q = field.generator
    one = field.one
    total = field.zero

    def zeta(k12: int) -> RatFun:
        return field.coerce(CycScalar.root_of_unity(k12, 12))

    for k in (0, 6):  # +1, -1
        z = zeta(k)
        total = total + (5 * one - 4 * z * q) / (24 * (one - z * q) ** 2)
    for k in (3, 9):  # +i, -i
        z = zeta(k)
        total = total + one / (4 * (one - z * z)) / (one - z * q)
    for k in (2, 10, 4, 8):  # primitive 6th and 3rd roots
        z = zeta(k)
        total = total + one / (6 * (one - z * z)) / (one - z * q)
    return total.map_coefficients(lambda c: c.as_rational(), QQ)


def _verify_table(table: CorrelatorTable) -> None:
    rederived = one_point_from_unity_atoms(table.cyclotomic_order)
    if rederived != table.one_point:
        raise AssertionError("one-point correlator does not match its atom display")
    at_zero = table.hodge_mixed.evaluate(QFIELD.zero)
    if at_zero != table.one_point:
        raise AssertionError("Hodge table does not specialize to the one-point correlator")


# ---------------------------------------------------------------------------
# Primary and log-det contributions
# ---------------------------------------------------------------------------


def f1_primary(tau: TSeries, order: int, table: CorrelatorTable) -> TSeries:
    """tau <1>_{1,1} + tau^2/2 <1,1>_{1,2}, modulo I^order."""
    if order > MAX_ORDER:
        raise UnsupportedOrder(f"constant-input data stops at order {MAX_ORDER}")
    c1, c2 = table.f1_constants
    result = tau.scale(c1) + (tau * tau).scale(c2 * Fraction(1, 2))
    return result.truncate_below(order)


def logdet_term(t: InputT, tau: TSeries, order: int) -> TSeries:
    """-(1/24) log(1 - tbar_1), modulo I^order."""
    tbar1 = tbar_scalar_coeff(t, tau, 1)
    one = TSeries.constant(QQ, t.num_vars, tau.cutoff, 1)
    return (one - tbar1).log().scale(Fraction(-1, 24)).truncate_below(order)


# ---------------------------------------------------------------------------
# Twisted-sector residue sums
# ---------------------------------------------------------------------------


def _slot_inverse(series: TSeries) -> TSeries:
    """Substitute the function slot q by 1/x in every coefficient."""
    return series.map_coefficients(lambda c: c.substitute_inverse("x"), _X0FIELD)


def _twisted_integrands(
    input_series: TSeries, table: CorrelatorTable, order: int
) -> list[TSeries]:
    """The summands (per insertion count n) of the twisted residue integrand.

    Entry n is input(1/x)^(n+1) C_{n+1}(x) / ((n+1)! x), truncated modulo
    I^order, as a series with rational-function-in-x coefficients.  For
    order <= 3 the n = 2 summand has ideal order at least three and
    vanishes after truncation, so two correlators suffice.
    """
    if order > MAX_ORDER:
        raise UnsupportedOrder(f"twisted data stops at order {MAX_ORDER}")
    io = input_series.ideal_order()
    if io is not None and io < 1:
        raise MissingCorrelatorData(
            "an input with a constant term would need three-insertion correlators"
        )
    inv = _slot_inverse(input_series.truncate_below(order))
    x = _X0FIELD.generator
    correlators = [table.one_point.rename("x"), table.two_point_unit.rename("x")]
    out = []
    power = inv
    for n, corr in enumerate(correlators):
        if n:
            power = (power * inv).truncate_below(order)
        out.append(power.scale(corr / x * Fraction(1, factorial(n + 1))).truncate_below(order))
    return out


def ftw1_parts(
    input_series: TSeries, table: CorrelatorTable, order: int
) -> dict[tuple[int, object], TSeries]:
    """Residues of each twisted summand at 0, 1 and infinity, separately."""
    centers = [(Fraction(0), 0), (Fraction(1), 1), (INFINITY, "inf")]
    parts = {}
    for n, integrand in enumerate(_twisted_integrands(input_series, table, order)):
        for center, label in centers:
            parts[(n, label)] = integrand.map_coefficients(
                lambda c: residue_at(c, center), QQ
            )
    return parts


def ftw1(input_series: TSeries, table: CorrelatorTable, order: int) -> TSeries:
    """Twisted-sector contribution: residues over {0, 1, infinity}."""
    parts = ftw1_parts(input_series, table, order)
    total = TSeries.zero(QQ, input_series.num_vars, input_series.cutoff)
    for piece in parts.values():
        total = total + piece
    return total.truncate_below(order)


def ftw1_root_parts(
    input_series: TSeries, table: CorrelatorTable, order: int
) -> dict[tuple[int, int], TSeries]:
    """Residues at the roots of unity (keyed by power of zeta_12), per summand.

    Computed in the inverted presentation: the residue at q = zeta of
    input(q)^(n+1) C_{n+1}(1/q) dq / ((n+1)! q).  Under q -> 1/x this equals
    minus the residue of the direct integrand at x = 1/zeta, so summing these
    values reproduces the {0, 1, infinity} route by the residue theorem.
    """
    if order > MAX_ORDER:
        raise UnsupportedOrder(f"twisted data stops at order {MAX_ORDER}")
    N = table.cyclotomic_order
    base = CyclotomicFieldDomain(N)
    field = RationalFunctionField("q", base)
    inp = input_series.truncate_below(order).map_coefficients(
        lambda c: promote(c, QFIELD, field), field
    )
    q = field.generator
    correlators = [table.one_point, table.two_point_unit]
    parts: dict[tuple[int, int], TSeries] = {}
    power = inp
    for n, corr in enumerate(correlators):
        if n:
            power = (power * inp).truncate_below(order)
        corr_inv = promote(corr.substitute_inverse(), QFIELD, field)
        integrand = power.scale(corr_inv / q * Fraction(1, factorial(n + 1)))
        for k in range(1, N):
            zeta = base.zeta(k)
            piece = integrand.map_coefficients(lambda c: residue_at(c, zeta), base)
            if not piece.is_zero():
                parts[(n, k)] = piece
    return parts


def ftw1_via_roots(input_series: TSeries, table: CorrelatorTable, order: int) -> TSeries:
    """Twisted-sector contribution as the root-of-unity residue sum."""
    parts = ftw1_root_parts(input_series, table, order)
    base = CyclotomicFieldDomain(table.cyclotomic_order)
    total = TSeries.zero(base, input_series.num_vars, input_series.cutoff)
    for piece in parts.values():
        total = total + piece
    return total.map_coefficients(lambda c: c.as_rational(), QQ).truncate_below(order)


# ---------------------------------------------------------------------------
# Two-point assembly and reference form
# ---------------------------------------------------------------------------


def genus1_total(t: InputT, order: int, table: CorrelatorTable | None = None) -> TSeries:
    """Primary + log-det + twisted difference, modulo I^order."""
    table = table or build_table()
    tau = solve_tau(t, order)
    tbar = sbar_transform(t, tau)
    new, fake = tbar_new_fake(tbar, tau)
    total = (
        f1_primary(tau, order, table)
        + logdet_term(t, tau, order)
        + ftw1(new, table, order)
        - ftw1(fake, table, order)
    )
    return total.truncate_below(order)


def extract_two_point(series: TSeries, convention: str = MONOMIAL) -> RatFun:
    """Pair the degree-two part against the weights w_m(q1) w_n(q2).

    Mixed monomials are symmetrized; squares contribute twice (second
    derivative).  The result is a rational function in q1 over Q(q2).
    """
    total = Q1FIELD.zero
    cache1: dict[int, RatFun] = {}
    cache2: dict[int, RatFun] = {}

    def w1(n: int) -> RatFun:
        if n not in cache1:
            cache1[n] = weight(convention, n, Q1FIELD)
        return cache1[n]

    def w2(n: int) -> RatFun:
        if n not in cache2:
            cache2[n] = Q1FIELD.coerce(weight(convention, n, Q2FIELD))
        return cache2[n]

    for mono, coeff in series.terms.items():
        if sum(mono) != 2:
            continue
        present = [(i, e) for i, e in enumerate(mono) if e]
        if len(present) == 1:
            i, _ = present[0]
            total = total + w1(i) * w2(i) * Q1FIELD.coerce(2 * coeff)
        else:
            (i, _), (j, _) = present
            total = total + (w1(i) * w2(j) + w1(j) * w2(i)) * Q1FIELD.coerce(coeff)
    return total


def two_point_reference() -> RatFun:
    """The known closed form for the genus-one two-point series of the point."""
    f = Q1FIELD
    q1 = f.generator
    q2 = f.coerce(Q2FIELD.generator)
    one = f.one
    total = one / ((one - q1) * (one - q2**2) * (one - q2**3) * (one - q2**4))
    total = total + one / ((one - q2) * (one - q1**2) * (one - q1**3) * (one - q1**4))
    total = total - one / ((one - q1) * (one - q2))
    total = total + q1 * q2 / ((one - q1) ** 2 * (one - q2) ** 2) * Fraction(1, 24)
    total = total + (
        q1 * q2 / ((one - q1**2) * (one - q2**2))
        * (11 * one - 2 * q1 / (one + q1) - 2 * q2 / (one + q2))
        * Fraction(1, 8)
    )
    total = total + (
        q1 * q2 / ((one - q1) * (one - q2))
        * (one + q1 + q2 - q1 * q2)
        / ((one + q1**2) * (one + q2**2))
        * Fraction(1, 4)
    )
    total = total + (
        q1 * q2 / ((one - q1) * (one - q2))
        * (one + 2 * q1 + 2 * q2 + q1 * q2)
        / ((one + q1 + q1**2) * (one + q2 + q2**2))
        * Fraction(1, 3)
    )
    return total


# ---------------------------------------------------------------------------
# Exponential substitution of the Hodge table, and the descendant genfun
# ---------------------------------------------------------------------------


def hodge_substitute(
    f: RatFun,
    tau_order: int,
    cyclotomic_order: int = 12,
    q_value: Fraction | None = None,
) -> TSeries:
    """Replace each pole atom of f (in x) by its exponential tau-series.

    1/(1 - x z) becomes exp(tau/(1-q) - tau z) and 1/(1 - x z)^2 becomes
    (1 - z tau) exp(tau/(1-q) - tau z); higher multiplicities are outside the
    string-equation data and raise :class:`UnsupportedAtom`.  Returns a
    one-variable tau-series over Q(q), or over Q when ``q_value`` pins the
    external variable.
    """
    pf = partial_fractions(f, cyclotomic_order)
    if not pf.poly_part.is_zero():
        raise UnsupportedAtom("polynomial part has no exponential substitute")
    kfield = pf.field.base  # cyclotomic-promoted rational functions of q
    cyc = CyclotomicFieldDomain(cyclotomic_order)
    if q_value is None:
        ring = kfield
        one_over = ring.one / (ring.one - ring.generator)
    else:
        ring = cyc
        one_over = ring.coerce(Fraction(1, 1 - q_value))
    tau_var = TSeries.variable(ring, 1, tau_order, 0)
    total = TSeries.zero(ring, 1, tau_order)
    for pole, mult, coeff in pf.terms:
        if mult > 2:
            raise UnsupportedAtom(f"pole multiplicity {mult} exceeds the covered data")
        if not pole:
            raise UnsupportedAtom("pole at zero has no exponential substitute")
        if q_value is None:
            z = ring.one / pole
            c = coeff
        else:
            z = _constant_value(pole).invert()
            c = ring.coerce(coeff.evaluate(q_value))
        c_norm = c * (-z) ** mult
        series = _exp_rate_series(ring, one_over - z, tau_order)
        if mult == 2:
            series = series - (tau_var * series).scale(z)
        total = total + series.scale(c_norm)
    if q_value is None:
        return total.map_coefficients(
            lambda c: c.map_coefficients(lambda s: s.as_rational(), QQ), QFIELD
        )
    return total.map_coefficients(lambda c: c.as_rational(), QQ)


def _constant_value(pole) -> CycScalar:
    # poles of the Hodge table are roots of unity, constant inside Q(zeta)(q)
    if isinstance(pole, RatFun):
        if not pole.is_polynomial() or (pole.num.degree or 0) > 0:
            raise UnsupportedAtom(f"pole {pole!r} is not constant")
        return pole.num.coeff(0)
    return pole


def _exp_rate_series(ring, rate, order: int) -> TSeries:
    """exp(tau * rate) as a one-variable series in tau."""
    terms = {}
    power = ring.one
    for k in range(order + 1):
        if k:
            power = power * rate
        value = power * Fraction(1, factorial(k))
        if value:
            terms[(k,)] = value
    return TSeries(1, order, ring, terms)


def genfun_closed(tau_order: int, table: CorrelatorTable) -> TSeries:
    """The descendant generating function as a tau-series over Q(q)."""
    return hodge_substitute(table.hodge_mixed, tau_order, table.cyclotomic_order)


def unit_genfun(tau_order: int, table: CorrelatorTable) -> TSeries:
    """The generating function with a unit insertion: the q -> 0 slice."""
    return hodge_substitute(
        table.hodge_mixed, tau_order, table.cyclotomic_order, q_value=Fraction(0)
    )


def genfun_residues(tau_order: int, table: CorrelatorTable) -> TSeries:
    """Residue route for the descendant genfun: sum over {0, infinity, q}.

    The integrand is e^((1-x) tau) e^(q tau/(1-q)) C(x) / (x - q) dx with C
    the one-point correlator in the variable x; away from the roots of unity
    its only poles are x = q and possibly infinity.
    """
    xf = XFIELD
    x = xf.generator
    qx = xf.coerce(QFIELD.generator)
    c1 = promote(table.one_point.rename("x"), _X0FIELD, xf)
    core = c1 / (x - qx)
    e1 = _exp_rate_series(xf, xf.one - x, tau_order)
    e2 = _exp_rate_series(xf, qx / (xf.one - qx), tau_order)
    integrand = e1 * e2
    terms = {}
    for mono, coeff in integrand.terms.items():
        value = coeff * core
        res = (
            residue_at(value, QFIELD.zero)
            + residue_at(value, QFIELD.generator)
            + residue_at(value, INFINITY)
        )
        if res:
            terms[mono] = res
    return TSeries(1, tau_order, QFIELD, terms)


def genfun_residues_via_roots(tau_order: int, table: CorrelatorTable) -> TSeries:
    """Minus the residue sum over all roots of unity; equals the direct route."""
    N = table.cyclotomic_order
    base = with_cyclotomic(QFIELD, N)
    tower = RationalFunctionField("x", base)
    cyc = CyclotomicFieldDomain(N)
    x = tower.generator
    qx = tower.coerce(base.generator)
    c1 = promote(table.one_point.rename("x"), _X0FIELD, tower)
    core = c1 / (x - qx)
    e1 = _exp_rate_series(tower, tower.one - x, tau_order)
    e2 = _exp_rate_series(tower, qx / (tower.one - qx), tau_order)
    integrand = e1 * e2
    terms = {}
    for mono, coeff in integrand.terms.items():
        value = coeff * core
        acc = base.zero
        for k in range(N):
            acc = acc + residue_at(value, base.coerce(cyc.zeta(k)))
        if acc:
            terms[mono] = acc
    series = TSeries(1, tau_order, base, terms)
    demoted = series.map_coefficients(
        lambda c: c.map_coefficients(lambda s: s.as_rational(), QQ), QFIELD
    )
    return -demoted


# ---------------------------------------------------------------------------
# One-point reconstruction with a distinguished insertion
# ---------------------------------------------------------------------------


def compose_tau_series(genfun: TSeries, tau: TSeries, target_ring) -> TSeries:
    """Substitute a coordinate series for tau in a one-variable genfun."""
    tau_lifted = tau if target_ring == tau.ring else lift_series(tau, target_ring)
    total = TSeries.zero(target_ring, tau.num_vars, tau.cutoff)
    power = TSeries.constant(target_ring, tau.num_vars, tau.cutoff, 1)
    max_k = max((m[0] for m in genfun.terms), default=0)
    for k in range(max_k + 1):
        if k:
            power = power * tau_lifted
        coeff = genfun.terms.get((k,))
        if coeff:
            total = total + power.scale(target_ring.coerce(coeff))
    return total


def one_point_reconstruction(
    t: InputT, order: int, table: CorrelatorTable | None = None
) -> TSeries:
    """The series with one distinguished descendant insertion, reconstructed.

    Assembled as: the unit-insertion genfun at tau times D tau, plus the
    log-det correction (tbar_2/(1 - tbar_1) + q/(1-q)) D tau / 24, plus the
    twisted residue sums over {0, 1, infinity, q} built from the derivative
    closed forms.  Returns a series over Q(q) modulo I^order.
    """
    table = table or build_table()
    if order > MAX_ORDER:
        raise UnsupportedOrder(f"reconstruction data stops at order {MAX_ORDER}")
    tau = solve_tau(t, order)
    tbar = sbar_transform(t, tau)
    new, fake = tbar_new_fake(tbar, tau)
    forms = d_closed_forms(t, tau)

    ug = unit_genfun(max(order - 1, 0), table)
    first = lift_series(compose_tau_series(ug, tau, QQ), QFIELD) * forms.dtau

    q = QFIELD.generator
    one = TSeries.constant(QQ, t.num_vars, tau.cutoff, 1)
    tbar1 = tbar_scalar_coeff(t, tau, 1)
    tbar2 = tbar_scalar_coeff(t, tau, 2)
    ratio = lift_series(tbar2 * (one - tbar1).inverse_unit(), QFIELD)
    qfrac = TSeries.constant(QFIELD, t.num_vars, tau.cutoff, q / (QFIELD.one - q))
    correction = ((ratio + qfrac) * forms.dtau).scale(Fraction(1, 24))

    twisted = _distinguished_twisted_sum(new, fake, forms, table, order)
    return (first + correction + twisted).truncate_below(order)


def _to_tower_slot_inverse(series: TSeries) -> TSeries:
    """Send the slot q to 1/x and lift the coefficients into Q(q)(x)."""

    def move(c: RatFun) -> RatFun:
        return c.substitute_inverse("x").map_coefficients(QFIELD.coerce, QFIELD)

    return series.map_coefficients(move, XFIELD)


def _distinguished_twisted_sum(
    new: TSeries,
    fake: TSeries,
    forms: DerivativeForms,
    table: CorrelatorTable,
    order: int,
) -> TSeries:
    xf = XFIELD
    x = xf.generator
    new_inv = _to_tower_slot_inverse(new.truncate_below(order))
    fake_inv = _to_tower_slot_inverse(fake.truncate_below(order))
    dnew_inv = forms.dnew.map_coefficients(lambda c: c.substitute_inverse(), xf)
    dfake_inv = forms.dfake.map_coefficients(lambda c: c.substitute_inverse(), xf)
    correlators = [
        promote(table.one_point.rename("x"), _X0FIELD, xf),
        promote(table.two_point_unit.rename("x"), _X0FIELD, xf),
    ]
    # three-insertion data would be required if the n = 2 summand survived
    check = dnew_inv * new_inv * new_inv - dfake_inv * fake_inv * fake_inv
    if not check.truncate_below(order).is_zero():
        raise MissingCorrelatorData(
            "a surviving three-insertion summand is beyond the stored table"
        )
    centers = [QFIELD.zero, QFIELD.coerce(Fraction(1)), INFINITY, QFIELD.generator]
    total = TSeries.zero(QFIELD, new.num_vars, new.cutoff)
    new_power = dnew_inv
    fake_power = dfake_inv
    for n, corr in enumerate(correlators):
        if n:
            new_power = (new_power * new_inv).truncate_below(order)
            fake_power = (fake_power * fake_inv).truncate_below(order)
        diff = (new_power - fake_power).scale(corr / x * Fraction(1, factorial(n)))
        diff = diff.truncate_below(order)
        residues = diff.map_coefficients(
            lambda c: sum((residue_at(c, a) for a in centers), QFIELD.zero), QFIELD
        )
        total = total + residues
    return total.truncate_below(order)


# ---------------------------------------------------------------------------
# Single-weight extraction from the two-point reference
# ---------------------------------------------------------------------------


def swap_tower(f: RatFun) -> RatFun:
    """Exchange the nesting of a two-variable rational-function tower."""
    inner_field = f.field.base
    outer_var = f.var
    inner_var = inner_field.var
    num_biv, num_den = _clear_inner(f.num)
    den_biv, den_den = _clear_inner(f.den)
    # f = (N / dn) / (D / dd) = N dd / (D dn), with N, D bivariate and dn, dd
    # polynomials in the inner variable only
    new_inner = RationalFunctionField(outer_var, QQ)
    new_outer = RationalFunctionField(inner_var, new_inner)

    def regroup(biv: dict[tuple[int, int], Fraction], extra: Poly) -> Poly:
        rows: dict[int, dict[int, Fraction]] = {}
        for (do, di), c in biv.items():
            rows.setdefault(di, {})[do] = c
        grouped = Poly(
            new_inner,
            {
                di: RatFun(
                    new_inner, Poly(QQ, row), Poly.constant(QQ, 1), _normalized=True
                )
                for di, row in rows.items()
            },
        )
        lifted = Poly(new_inner, {d: new_inner.coerce(c) for d, c in extra.coeffs.items()})
        return grouped * lifted

    return RatFun(new_outer, regroup(num_biv, den_den), regroup(den_biv, num_den))


def _clear_inner(p: Poly) -> tuple[dict[tuple[int, int], Fraction], Poly]:
    """Clear inner denominators: p = bivariate / den, with den inner-only."""
    den = Poly.constant(QQ, 1)
    for c in p.coeffs.values():
        g = den.gcd(c.den)
        den = den * c.den.divmod(g)[0]
    biv: dict[tuple[int, int], Fraction] = {}
    for do, c in p.coeffs.items():
        cof = den.divmod(c.den)[0]
        numer = c.num * cof
        for di, value in numer.coeffs.items():
            biv[(do, di)] = biv.get((do, di), Fraction(0)) + value
    return biv, den


def single_weight_extraction(two_point: RatFun, count: int) -> list[RatFun]:
    """Coefficients against the weights in the second slot of a two-point form.

    Returns h_0 .. h_{count-1}, rational functions of the first variable, such
    that the input equals sum_m w_m(q2) h_m(q1).  Substituting q2 = s/(1+s)
    turns the weight sum into a plain Taylor series: h_m is the s^m
    coefficient of the substituted form divided by 1 + s.
    """
    sfield = RationalFunctionField("s", QQ)
    s = sfield.generator
    sub = s / (sfield.one + s)
    substituted = two_point.map_coefficients(lambda c: c.compose(sub), sfield)
    substituted = substituted * substituted.field.coerce(sfield.one / (sfield.one + s))
    swapped = swap_tower(substituted)  # rational in s over Q(q1)
    exp = local_expansion(swapped, swapped.field.base.zero, count - 1)
    zero = swapped.field.base.zero
    return [exp.coeffs.get(m, zero) for m in range(count)]
