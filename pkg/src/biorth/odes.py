"""Weight ODEs: first-order closed forms and Frobenius machinery.

For a linear-in-n family the weight satisfies a first-order equation
x(sigma0 - sigma1 x) y' + (rho0 - rho1 x) y = 0 whose solution is the
two-exponent closed form x^{e1} (sigma0 - sigma1 x)^{e2}.  For a
polynomial-in-n family of degree s the weight satisfies the order-s
equation sum_l (p_l - q_l x) x^l y^(l) = 0; this module builds it,
solves the indicial problem, runs the Frobenius series recurrence, and
verifies candidate solutions by applying the operator symbolically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    ConfigError,
    DegenerateAB,
    KappaZero,
    LeadingZero,
    Resonance,
    SigmaZero,
)
from .families import KIND_POLYNOMIAL, MqfFamily
from .polynomials import Polynomial, RationalFunction
from .roots import RootSet, poly_roots
from .scalars import falling_factorial, is_exact

GATE_UNIT = "unit"
GATE_DEGREE = "degree"


def _div(x, y):
    """Exact division for exact operands, generic division otherwise."""
    if is_exact(x) and is_exact(y):
        return Fraction(x) / Fraction(y)
    return x / y


@dataclass(frozen=True)
class LinearOde:
    """Coefficients of x(sigma0 - sigma1 x) y' + (rho0 - rho1 x) y = 0."""

    sigma0: object
    sigma1: object
    rho0: object
    rho1: object


def _linear_pairs(coeffs):
    if isinstance(coeffs, MqfFamily):
        if coeffs.kind != KIND_POLYNOMIAL:
            raise ConfigError("linear ODE needs a polynomial-in-n family")
        if coeffs.degree_s > 1:
            raise ConfigError("linear ODE needs degree s <= 1")
        lists = (coeffs.a, coeffs.b, coeffs.c, coeffs.d)
    else:
        lists = tuple(coeffs)
        if len(lists) != 4:
            raise ConfigError("expected four coefficient pairs (a, b, c, d)")
    out = []
    for pair in lists:
        pair = tuple(pair)
        if len(pair) > 2:
            raise ConfigError("linear coefficients have degree <= 1")
        out.append(pair + (0,) * (2 - len(pair)))
    return out


def linear_ode(coeffs, mu) -> LinearOde:
    """First-order weight equation for the linear family
    alpha_n = a_0 - n a_1 (and likewise b, c, d).

    coeffs is an MqfFamily of degree <= 1 or four (const, slope) pairs.
    mu may be a scalar or a symbolic rational function.
    """
    (a0, a1), (b0, b1), (c0, c1), (d0, d1) = _linear_pairs(coeffs)
    sigma0 = a1 + mu * b1
    sigma1 = c1 + mu * d1
    rho0 = (a0 + mu * b0) + (a1 + mu * b1)
    rho1 = (c0 + mu * d0) + 2 * (c1 + mu * d1)
    return LinearOde(sigma0, sigma1, rho0, rho1)


def linear_closed_form(ode: LinearOde):
    """Exponents (e1, e2) of the solution y = x^{e1} (sigma0 - sigma1 x)^{e2}.

    e1 = -rho0/sigma0 and e2 = rho0/sigma0 - rho1/sigma1; when sigma1
    is zero the second factor is constant, absorbed into normalization,
    and e2 is reported as 0.  Raises SigmaZero when sigma0 = 0.
    """
    if ode.sigma0 == 0:
        raise SigmaZero("sigma0 = 0: no x^{e1} solution")
    e1 = -_div(ode.rho0, ode.sigma0)
    if ode.sigma1 == 0:
        e2 = RationalFunction.constant(0) \
            if isinstance(e1, RationalFunction) else 0
        return e1, e2
    e2 = _div(ode.rho0, ode.sigma0) - _div(ode.rho1, ode.sigma1)
    return e1, e2


def power_weight_params(a0, a1, b0, b1, kappa):
    """The unique (up to kappa) c, d choice making the weight a pure
    power x^{nu(mu)}, together with nu as a rational function of mu:

        c_1 = kappa a_1, d_1 = kappa b_1,
        c_0 = (a_0 - a_1) kappa, d_0 = (b_0 - b_1) kappa,
        nu(mu) = -1 - (a_0 + mu b_0)/(a_1 + mu b_1).

    Raises KappaZero and, when a_1 b_0 = a_0 b_1 (nu would be constant),
    DegenerateAB.
    """
    if kappa == 0:
        raise KappaZero("kappa must be nonzero")
    if a1 * b0 == a0 * b1:
        raise DegenerateAB("a_1 b_0 = a_0 b_1 forces a constant exponent")
    c1 = kappa * a1
    d1 = kappa * b1
    c0 = (a0 - a1) * kappa
    d0 = (b0 - b1) * kappa
    nu = RationalFunction(
        Polynomial((-(a0 + a1), -(b0 + b1))),
        Polynomial((a1, b1)),
    )
    return c0, c1, d0, d1, nu


def frak_pq(a, b, c, d, j: int):
    """The linear-in-mu aggregates

        frak_p_j = sum_l P_{l+j} / l!    with P_l = a_l + b_l mu,
        frak_q_j = sum_l (l+j+1) Q_{l+j} / l!   with Q_l = c_l + d_l mu,

    truncated at the coefficient list lengths, each returned as a
    (constant, mu-coefficient) pair.
    """
    if j < 0:
        raise ValueError("index j must be nonnegative")

    def aggregate(const_list, mu_list, weighted):
        length = max(len(const_list), len(mu_list))
        const = Fraction(0)
        slope = Fraction(0)
        for ell in range(max(length - j, 0)):
            w = Fraction(ell + j + 1 if weighted else 1, math.factorial(ell))
            i = ell + j
            if i < len(const_list):
                const = const + w * const_list[i]
            if i < len(mu_list):
                slope = slope + w * mu_list[i]
        return const, slope

    return aggregate(a, b, False), aggregate(c, d, True)


@dataclass(frozen=True)
class FrobeniusOde:
    """Coefficients of sum_{l=0}^{s} (p_l - q_l x) x^l y^(l) = 0."""

    s: int
    p: tuple
    q: tuple


def frobenius_ode(family: MqfFamily, mu) -> FrobeniusOde:
    """Order-s weight equation for a polynomial-in-n family at mu,
    with p_j = frak_p_j(mu)/(j!)^2 and q_j = frak_q_j(mu)/(j!(j+1)!)."""
    if family.kind != KIND_POLYNOMIAL:
        raise ConfigError("Frobenius ODE needs a polynomial-in-n family")
    if isinstance(mu, RationalFunction):
        raise ConfigError(
            "Frobenius ODE needs a scalar mu; frak_pq carries the "
            "symbolic dependence as (constant, mu-coefficient) pairs")
    s = family.degree_s
    p = []
    q = []
    for j in range(s + 1):
        (pc, pm), (qc, qm) = frak_pq(family.a, family.b, family.c,
                                     family.d, j)
        fj = math.factorial(j)
        p.append(Fraction(1, fj * fj) * (pc + mu * pm))
        q.append(Fraction(1, fj * math.factorial(j + 1)) * (qc + mu * qm))
    return FrobeniusOde(s, tuple(p), tuple(q))


def indicial_polynomial(ode: FrobeniusOde) -> Polynomial:
    """The indicial equation sum_l (-1)^l p_l (-theta)_l = 0 as a
    polynomial in theta; the sign pairing turns each term into the
    falling factorial theta(theta-1)...(theta-l+1)."""
    total = Polynomial()
    ff = Polynomial((1,))
    theta = Polynomial((0, 1))
    for ell in range(ode.s + 1):
        if ode.p[ell] != 0:
            total = total + ode.p[ell] * ff
        ff = ff * (theta - ell)
    return total


def indicial_roots(ode: FrobeniusOde) -> RootSet:
    """Roots of the indicial polynomial, with multiplicities.

    When p_s = 0 the polynomial degenerates below degree s; the reduced
    equation is still solved and its roots travel on the LeadingZero
    exception so callers can decide whether fewer exponents suffice.
    """
    ip = indicial_polynomial(ode)
    degree = ip.degree
    if degree < ode.s:
        if degree >= 1:
            reduced = poly_roots(ip)
        else:
            reduced = RootSet((), (), 0.0)
        raise LeadingZero(reduced, degree)
    return poly_roots(ip)


def recurrence_polys(ode: FrobeniusOde, theta):
    """P and Q with P(n) y_n = Q(n-1) y_{n-1}: substituting x^{theta+n}
    into the operator leaves P(n) x^{theta+n} - Q(n) x^{theta+n+1},
    where P(x) = sum_l p_l ff(x+theta, l) and Q likewise with q."""
    shift = Polynomial((theta, 1))
    P = Polynomial()
    Q = Polynomial()
    ff = Polynomial((1,))
    for ell in range(ode.s + 1):
        if ode.p[ell] != 0:
            P = P + ode.p[ell] * ff
        if ode.q[ell] != 0:
            Q = Q + ode.q[ell] * ff
        ff = ff * (shift - ell)
    return P, Q


def series_coefficients(ode: FrobeniusOde, theta, N: int):
    """Frobenius coefficients y_0..y_N at exponent theta, y_0 = 1.

    Raises Resonance(n) when the recurrence denominator P(n) vanishes
    (the other indicial root sits an integer above theta).
    """
    P, Q = recurrence_polys(ode, theta)
    exact = is_exact(theta) and all(is_exact(v) for v in ode.p + ode.q)
    y = [Fraction(1) if exact else 1]
    for n in range(1, N + 1):
        Pn = P(n)
        if Pn == 0:
            raise Resonance(n)
        y.append(_div(y[-1] * Q(n - 1), Pn))
    return y


def select_theta(roots: RootSet, s: int, gate: str = GATE_UNIT):
    """Pick an admissible exponent among the indicial roots.

    gate "unit" demands a real root >= 1; gate "degree" demands >= s.
    Among qualifiers the largest is returned (it can never resonate
    against the other roots); None when no root qualifies.
    """
    if gate == GATE_UNIT:
        bound = 1
    elif gate == GATE_DEGREE:
        bound = s
    else:
        raise ValueError(f"unknown theta gate: {gate!r}")
    best = None
    for r in roots.roots:
        if isinstance(r, complex):
            if abs(r.imag) > 1e-12 * max(1.0, abs(r)):
                continue
            r = r.real
        if r >= bound and (best is None or r > best):
            best = r
    return best


@dataclass(frozen=True)
class ResidualReport:
    """Series coefficients of the operator applied to x^theta sum y_n x^n,
    orders theta+0 .. theta+K."""

    coefficients: tuple
    max_abs: float

    @property
    def ok(self) -> bool:
        return self.max_abs == 0.0


def ode_residual(ode: FrobeniusOde, theta, y, K: int) -> ResidualReport:
    """Apply sum_l (p_l - q_l x) x^l d^l/dx^l to the series directly.

    Each term y_n x^{theta+n} differentiates to ff(theta+n, l) y_n
    x^{theta+n-l} under d^l/dx^l, so the operator contributes
    p_l ff(theta+n, l) y_n at order theta+n and -q_l ff(theta+n, l) y_n
    at order theta+n+1.  The sums are accumulated term by term, with no
    reuse of the recurrence machinery, so agreement is evidence.
    """
    if K > len(y) - 1:
        raise ValueError("check order K exceeds the series length")
    exact = is_exact(theta) and all(is_exact(v) for v in ode.p + ode.q) \
        and all(is_exact(v) for v in y)
    zero = Fraction(0) if exact else 0.0
    coeffs = [zero] * (K + 1)
    for n, yn in enumerate(y):
        if yn == 0 or n > K:
            continue
        for ell in range(ode.s + 1):
            ff = falling_factorial(theta + n, ell)
            if ode.p[ell] != 0:
                coeffs[n] = coeffs[n] + ode.p[ell] * ff * yn
            if ode.q[ell] != 0 and n + 1 <= K:
                coeffs[n + 1] = coeffs[n + 1] - ode.q[ell] * ff * yn
    max_abs = max((abs(float(c)) for c in coeffs), default=0.0)
    return ResidualReport(tuple(coeffs), max_abs)
