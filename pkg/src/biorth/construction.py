"""Biorthogonal polynomial construction, three independent ways.

Given a family and parameter values mu_1..mu_n, the degree-n polynomial
p(x) = sum f_k x^k is pinned down (up to scale) by the orthogonality
sums sum_k f_k m_k(mu_l) = 0.  This module computes f by

  1. mixed-basis expansion: solve prod (x - mu_k) = sum f_k B_k(x) in
     the basis B_k = prod_{j<k} g_j * prod_{j>=k} h_j,
  2. generalized divided differences: forward substitution on the
     triangular node system qtilde_l = sum_{k<=l} f_k m_k(lambda_l),
  3. a brute-force oracle: the null space of the moment matrix
     [m_k(mu_l)].

All three agree where their hypotheses hold; the auto path degrades
from 2 to 1 to 3 and records which one produced the answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    BetaZero,
    DegenerateMu,
    NoExistence,
    NullSpaceDimension,
    PoleAt,
    RemovableSingularity,
    SingularBasis,
    SingularNode,
    SingularPivot,
)
from .families import (
    MqfFamily,
    existence_determinant,
    gh_factors,
    lambda_node,
    moment,
    moment_rational,
    validity_check,
)
from .linalg import nullspace, solve_linear
from .polynomials import Polynomial, rf_eval
from .roots import RootSet, poly_roots
from .scalars import is_exact

PATH_MIXED = "mixed-basis"
PATH_DIVIDED = "divided-difference"
PATH_ORACLE = "oracle"

NORM_EXPANSION = "expansion"
NORM_LEADING_ONE = "leading-one"


@dataclass(frozen=True)
class MixedBasis:
    n: int
    basis_polys: tuple

    def __iter__(self):
        return iter(self.basis_polys)


@dataclass(frozen=True)
class BiorthResult:
    f: tuple
    p: Polynomial
    qtilde: Optional[tuple]
    lambda_nodes: Optional[tuple]
    path: str


def mixed_basis(family: MqfFamily, n: int) -> MixedBasis:
    """The n+1 basis polynomials B_k = prod_{j<k} g_j * prod_{j=k}^{n-1} h_j."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    gs = []
    hs = []
    for j in range(n):
        g, h = gh_factors(family, j)
        gs.append(g)
        hs.append(h)
    prefix_g = [Polynomial((1,))]
    for g in gs:
        prefix_g.append(prefix_g[-1] * g)
    suffix_h = [Polynomial((1,))] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_h[k] = hs[k] * suffix_h[k + 1]
    polys = tuple(prefix_g[k] * suffix_h[k] for k in range(n + 1))
    return MixedBasis(n, polys)


def _monic_target(mu_list) -> Polynomial:
    vals = [Fraction(m) if is_exact(m) else m for m in mu_list]
    return Polynomial.from_roots(vals)


def expand_in_mixed_basis(family: MqfFamily, mu_list) -> BiorthResult:
    """Solve prod_k (x - mu_k) = sum_k f_k B_k(x) for f by coefficient match.

    Raises SingularBasis when the B_k are linearly dependent.
    """
    n = len(mu_list)
    basis = mixed_basis(family, n)
    target = _monic_target(mu_list)
    matrix = [[basis.basis_polys[k].coeff(i) for k in range(n + 1)]
              for i in range(n + 1)]
    rhs = [target.coeff(i) for i in range(n + 1)]
    f = solve_linear(matrix, rhs)
    return BiorthResult(tuple(f), Polynomial(f), None, None, PATH_MIXED)


def qtilde_values(family: MqfFamily, mu_list):
    """Node values qtilde_l, l = 0..n, by the closed product form

        prod_{k=1}^{n} (alpha_l + beta_l mu_k)
        / prod_{k=0}^{n-1} (alpha_l delta_k - beta_l gamma_k).

    Each equals the quotient prod (x - mu_k) / prod h_k(x) evaluated at
    the node lambda_l; the 1/beta_l powers from that substitution cancel
    between numerator and denominator, so no sign factor survives.
    """
    n = len(mu_list)
    values = []
    for ell in range(n + 1):
        alpha_l, beta_l, _, _ = family.quadruple(ell)
        if beta_l == 0:
            raise BetaZero(ell)
        num = 1
        for mu in mu_list:
            num = num * (alpha_l + beta_l * mu)
        den = 1
        for k in range(n):
            _, _, gamma_k, delta_k = family.quadruple(k)
            factor = alpha_l * delta_k - beta_l * gamma_k
            if factor == 0:
                raise SingularNode(ell, k)
            den = den * factor
        values.append(Fraction(num, den) if is_exact(num) and is_exact(den)
                      else num / den)
    return values


def qtilde_direct(family: MqfFamily, mu_list):
    """The same node values computed the slow way: evaluate the quotient
    prod (x - mu_k) / prod h_k(x) at each lambda_l.  Exists to check the
    closed form against, never called by the solvers."""
    n = len(mu_list)
    target = _monic_target(mu_list)
    values = []
    for ell in range(n + 1):
        lam = lambda_node(family, ell)
        num = target(lam)
        den = 1
        for k in range(n):
            _, h = gh_factors(family, k)
            factor = h(lam)
            if factor == 0:
                raise SingularNode(ell, k)
            den = den * factor
        values.append(num / den)
    return values


def divided_difference_solve(family: MqfFamily, qtilde, n: int):
    """Forward substitution on qtilde_l = sum_{k<=l} f_k m_k(lambda_l).

    The system is lower triangular because m_k vanishes at the nodes
    lambda_l with l < k, so f_k is the generalized divided difference of
    the first k+1 node values.  Raises SingularPivot(l) when the
    diagonal value m_l(lambda_l) is zero or a pole, or when any needed
    coefficient in row l is a pole.
    """
    if len(qtilde) != n + 1:
        raise ValueError("qtilde must have n+1 entries")
    moments = [moment_rational(family, k) for k in range(n + 1)]
    nodes = [lambda_node(family, ell) for ell in range(n + 1)]
    f = []
    for ell in range(n + 1):
        acc = qtilde[ell]
        for k in range(ell):
            try:
                coeff = rf_eval(moments[k], nodes[ell])
            except (PoleAt, RemovableSingularity) as exc:
                raise SingularPivot(ell, detail=str(exc)) from exc
            acc = acc - f[k] * coeff
        try:
            pivot = rf_eval(moments[ell], nodes[ell])
        except (PoleAt, RemovableSingularity) as exc:
            raise SingularPivot(ell, detail=str(exc)) from exc
        if pivot == 0:
            raise SingularPivot(ell, detail="diagonal moment value is zero")
        f.append(acc / pivot)
    return f


def divided_difference_recursive(family: MqfFamily, qtilde, n: int):
    """The stepwise difference table with denominators m_{j-1}(lambda_m):

        G(0, m) = qtilde_m
        G(j, m) = (G(j-1, m) - G(j-1, j-1)) / m_{j-1}(lambda_m)
        f_k     = G(k, k).

    This realizes the published recursion literally and therefore solves
    the product-weighted system qtilde_l = sum_{k<=l} f_k prod_{j<k}
    m_j(lambda_l), which is NOT the system the other paths solve: the
    two agree only when the moment products collapse (for example when
    m_l(lambda_l) = 1 at every pivot).  Kept as a comparison path so the
    discrepancy stays visible; see the cross-check tests.
    """
    if len(qtilde) != n + 1:
        raise ValueError("qtilde must have n+1 entries")
    moments = [moment_rational(family, k) for k in range(n)]
    nodes = [lambda_node(family, ell) for ell in range(n + 1)]
    table = list(qtilde)
    f = [table[0]]
    for j in range(1, n + 1):
        new = list(table)
        for m in range(j, n + 1):
            try:
                den = rf_eval(moments[j - 1], nodes[m])
            except (PoleAt, RemovableSingularity) as exc:
                raise SingularPivot(m, detail=str(exc)) from exc
            if den == 0:
                raise SingularPivot(
                    m, detail=f"difference denominator m_{j-1} vanishes")
            new[m] = (table[m] - table[j - 1]) / den
        table = new
        f.append(table[j])
    return f


def _rescale(f, mode, basis=None):
    if mode == NORM_EXPANSION:
        return list(f)
    if mode == NORM_LEADING_ONE:
        lead_idx = max(i for i, v in enumerate(f) if v != 0)
        lead = f[lead_idx]
        return [v / lead for v in f]
    raise ValueError(f"unknown normalization: {mode!r}")


def oracle_nullspace(family: MqfFamily, mu_list,
                     normalization=NORM_LEADING_ONE) -> BiorthResult:
    """Brute force: f spans the null space of the n x (n+1) moment matrix
    M[l, k] = m_k(mu_l).

    Raises NullSpaceDimension when the null space is not a line.  The
    "expansion" normalization rescales the null vector so the mixed
    basis combination sum f_k B_k is monic, matching the other paths
    without running them.
    """
    n = len(mu_list)
    if n == 0:
        return BiorthResult((1,), Polynomial((1,)), None, None, PATH_ORACLE)
    matrix = [[moment(family, k, mu) for k in range(n + 1)] for mu in mu_list]
    basis_vectors = nullspace(matrix)
    if len(basis_vectors) != 1:
        raise NullSpaceDimension(len(basis_vectors))
    v = basis_vectors[0]
    if normalization == NORM_EXPANSION:
        top = mixed_basis(family, n).basis_polys
        scale = sum(vk * bk.coeff(n) for vk, bk in zip(v, top))
        if scale == 0:
            raise SingularBasis(
                "null vector has no component along the monic target")
        f = [vk / scale for vk in v]
    else:
        f = _rescale(v, normalization)
    return BiorthResult(tuple(f), Polynomial(f), None, None, PATH_ORACLE)


def orthogonality_residuals(family: MqfFamily, f, mu_list):
    """The sums sum_k f_k m_k(mu_l) for each mu_l; all zero when f is
    a genuine biorthogonal coefficient vector."""
    n = len(mu_list)
    out = []
    for mu in mu_list:
        acc = 0
        for k in range(n + 1):
            acc = acc + f[k] * moment(family, k, mu)
        out.append(acc)
    return out


def _exact_distinct(mu_list) -> bool:
    return len(set(mu_list)) == len(mu_list)


def biorthogonal_poly(family: MqfFamily, mu_list, path: str = "auto",
                      normalization: str = NORM_EXPANSION) -> BiorthResult:
    """Construct the degree-n biorthogonal polynomial for the given mu.

    path is one of "auto", "mixed-basis", "divided-difference", or
    "oracle".  The auto path prefers divided differences for exact
    inputs when the validity predicates hold, falls back to the mixed
    basis on any singular node or pivot, and to the oracle if the basis
    itself is singular; the returned result records which path produced
    it.  Inexact inputs go straight to the expansion paths: the node
    system's diagonal decays geometrically, so its float solutions lose
    digits the other routes keep.
    """
    mu_list = list(mu_list)
    if not _exact_distinct(mu_list):
        raise DegenerateMu(f"repeated mu values in {mu_list}")
    n = len(mu_list)
    det = existence_determinant(family, mu_list)
    if det == 0:
        raise NoExistence(
            f"existence determinant vanishes for mu = {mu_list}")
    # A dependent mixed basis leaves the expansion normalization with no
    # solution even though the null-space direction exists, so the
    # oracle fallback honors the caller's normalization rather than
    # forcing the expansion scale.
    oracle_norm = NORM_EXPANSION if normalization == NORM_EXPANSION \
        else normalization

    def run_divided():
        qt = qtilde_values(family, mu_list)
        nodes = [lambda_node(family, ell) for ell in range(n + 1)]
        f = divided_difference_solve(family, qt, n)
        return BiorthResult(tuple(f), Polynomial(f), tuple(qt),
                            tuple(nodes), PATH_DIVIDED)

    result = None
    if path == PATH_DIVIDED or path == "auto":
        exact_mu = all(is_exact(v) for v in mu_list)
        applicable = exact_mu \
            and validity_check(family, n).theorem3_applicable
        if applicable or path == PATH_DIVIDED:
            try:
                result = run_divided()
            except (BetaZero, SingularNode, SingularPivot, PoleAt):
                result = None
        if result is None:
            try:
                result = expand_in_mixed_basis(family, mu_list)
            except SingularBasis:
                result = oracle_nullspace(family, mu_list, oracle_norm)
    elif path == PATH_MIXED:
        result = expand_in_mixed_basis(family, mu_list)
    elif path == PATH_ORACLE:
        result = oracle_nullspace(family, mu_list, oracle_norm)
    else:
        raise ValueError(f"unknown path: {path!r}")

    if result.p.is_zero:
        raise NoExistence("construction produced the zero polynomial")
    if normalization != NORM_EXPANSION:
        f = _rescale(result.f, normalization)
        result = BiorthResult(tuple(f), Polynomial(f), result.qtilde,
                              result.lambda_nodes, result.path)
    return result


@dataclass(frozen=True)
class ZeroLocationReport:
    passed: bool
    all_real: bool
    all_simple: bool
    all_inside: bool
    roots: Optional[RootSet]


def zero_location_check(p: Polynomial, support: str,
                        tol: float = 1e-10) -> ZeroLocationReport:
    """Check that every root of p is real, simple, and strictly inside
    the support interval ("(0,1)" or "(0,inf)")."""
    if p.is_zero:
        raise ValueError("zero polynomial has no zero locations")
    if p.degree < 1:
        return ZeroLocationReport(True, True, True, True, None)
    roots = poly_roots(p)
    reals = []
    all_real = True
    for r in roots.roots:
        if isinstance(r, complex):
            if abs(r.imag) > tol * max(1.0, abs(r)):
                all_real = False
                continue
            reals.append(r.real)
        else:
            reals.append(r)
    all_simple = all(m == 1 for m in roots.multiplicities)
    if support == "(0,1)":
        inside = [0 < r < 1 for r in reals]
    elif support == "(0,inf)":
        inside = [r > 0 for r in reals]
    else:
        raise ValueError(f"unknown support: {support!r}")
    all_inside = all_real and all(inside)
    passed = all_real and all_simple and all_inside
    return ZeroLocationReport(passed, all_real, all_simple, all_inside, roots)
