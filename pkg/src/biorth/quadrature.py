"""Adaptive Gauss-Legendre quadrature and moment-quotient verification.

Panels are refined globally: a heap keeps every panel's bisection-error
estimate, and the worst panel is split until the summed estimates drop
below the relative tolerance.  Global refinement (rather than local
tolerance halving) is what makes endpoint-singular weights such as
x^{-2/3} on (0,1) converge within the node budget: the singular panel
keeps a constant relative error per level, so its absolute error decays
geometrically while halved local tolerances would decay faster and
never be met.

The half-line is folded to (0,1) by x = t/(1-t).  Integrands that grow
too fast for that fold (the Bessel-type weights) exhaust the budget and
surface as QuadratureFailure instead of being silently truncated.
"""
from __future__ import annotations

import heapq
import math
from functools import lru_cache

import numpy as np

from .errors import QuadratureFailure
from .families import MqfFamily
from .hyper import weight_from_config
from .scalars import to_float

PANEL_ORDER = 16
DEFAULT_REL_TOL = 1e-11
DEFAULT_BUDGET = 2 ** 16


@lru_cache(maxsize=None)
def gauss_legendre(order: int):
    """Nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return tuple(nodes.tolist()), tuple(weights.tolist())


def _panel_value(f, a, b, counter, budget):
    counter[0] += PANEL_ORDER
    if counter[0] > budget:
        raise QuadratureFailure(
            f"node budget {budget} exhausted (interval refinement stalled)")
    nodes, weights = gauss_legendre(PANEL_ORDER)
    mid = (a + b) / 2.0
    half = (b - a) / 2.0
    total = 0.0
    try:
        for x, w in zip(nodes, weights):
            total += w * f(mid + half * x)
    except OverflowError as exc:
        raise QuadratureFailure(
            f"integrand overflows on panel ({a:g}, {b:g})") from exc
    if not math.isfinite(total):
        raise QuadratureFailure(
            f"integrand is not finite on panel ({a:g}, {b:g})")
    return total * half


def adaptive_integrate(f, a: float, b: float, rel_tol: float = DEFAULT_REL_TOL,
                       budget: int = DEFAULT_BUDGET) -> float:
    """Integral of f over the bounded interval (a, b).

    Raises QuadratureFailure when the node budget runs out before the
    summed panel-error estimates fall below rel_tol relative to the
    running total.
    """
    if not b > a:
        raise ValueError("need b > a")
    counter = [0]

    def make_entry(lo, hi, value):
        mid = (lo + hi) / 2.0
        left = _panel_value(f, lo, mid, counter, budget)
        right = _panel_value(f, mid, hi, counter, budget)
        err = abs(value - (left + right))
        return (-err, lo, hi, left, right)

    whole = _panel_value(f, a, b, counter, budget)
    heap = [make_entry(a, b, whole)]
    while True:
        total = sum(e[3] + e[4] for e in heap)
        err_sum = sum(-e[0] for e in heap)
        if err_sum <= rel_tol * max(abs(total), 1e-300):
            return total
        neg_err, lo, hi, left, right = heapq.heappop(heap)
        if -neg_err == 0.0:
            heapq.heappush(heap, (neg_err, lo, hi, left, right))
            return sum(e[3] + e[4] for e in heap)
        mid = (lo + hi) / 2.0
        heapq.heappush(heap, make_entry(lo, mid, left))
        heapq.heappush(heap, make_entry(mid, hi, right))


def integrate_support(f, support: str, rel_tol: float = DEFAULT_REL_TOL,
                      budget: int = DEFAULT_BUDGET) -> float:
    """Integral of f over the family support.

    "(0,1)" integrates directly; "(0,inf)" substitutes x = t/(1-t),
    dx = dt/(1-t)^2, so divergent tails show up as refinement stalls
    near t = 1 and raise QuadratureFailure.
    """
    if support == "(0,1)":
        return adaptive_integrate(f, 0.0, 1.0, rel_tol, budget)
    if support == "(0,inf)":
        def folded(t):
            u = 1.0 - t
            return f(t / u) / (u * u)
        return adaptive_integrate(folded, 0.0, 1.0, rel_tol, budget)
    raise ValueError(f"unknown support: {support!r}")


def verify_moment_quotient(weight, family: MqfFamily, n_max: int, mu,
                           rel_tol: float = DEFAULT_REL_TOL,
                           budget: int = DEFAULT_BUDGET):
    """Relative errors between quadrature moment quotients and the
    family's Moebius quotients.

    weight is a callable omega(x) or a weight_form config dict (then
    instantiated at mu).  For each n < n_max the quadrature quotient
    int x^{n+1} omega / int x^n omega is compared with
    (alpha_n + beta_n mu)/(gamma_n + delta_n mu); the list of relative
    errors is returned, one per n.
    """
    if isinstance(weight, dict):
        weight = weight_from_config(weight, mu)
    mu_f = to_float(mu)
    integrals = []
    for n in range(n_max + 1):
        integrals.append(integrate_support(
            lambda x, _n=n: (x ** _n) * weight(x),
            family.support, rel_tol, budget))
    errors = []
    for n in range(n_max):
        alpha, beta, gamma, delta = (to_float(v)
                                     for v in family.quadruple(n))
        expected = (alpha + mu_f * beta) / (gamma + mu_f * delta)
        if integrals[n] == 0.0:
            raise QuadratureFailure(
                f"moment integral of order {n} evaluated to zero")
        actual = integrals[n + 1] / integrals[n]
        errors.append(abs(actual - expected) / max(abs(expected), 1e-300))
    return errors
