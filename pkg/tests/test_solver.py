import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq, root

from riesz_equilibria.charges import PolarPoint
from riesz_equilibria.errors import DomainError, InconsistencyError
from riesz_equilibria.potential import bisector_derivative
from riesz_equilibria.solver import (
    DEFAULT_OPTIONS,
    EquilibriumPoint,
    Kind,
    SolverOptions,
    apothem_bound,
    bisector_roots,
    bounds,
    certified_below,
    classify,
    classify_eigs,
    descartes_sign_changes,
    enumerate_equilibria,
    example_polynomials,
    f_beta_root,
    f_beta_triangle,
    find_bisector_equilibria,
    lower_bound,
    pn_eval,
    pn_polynomial,
    pn_roots_in_unit_interval,
    polynomial_roots_in,
    refine_root,
    search_interval,
    seeded_root,
    small_beta_bound,
)


def plain_uprime(n, beta, r):
    """Bisector derivative from textbook trig, independent of the library tables."""
    c = np.cos(np.pi * (2 * np.arange(1, n + 1) - 1) / n)
    return float(np.sum(-2 * beta * (r - c) * (1 + r * r - 2 * r * c) ** (-beta - 1)))


def cartesian_gradient(n, beta, xy):
    z = np.exp(2j * np.pi * np.arange(1, n + 1) / n)
    w = complex(*xy) - z
    g = -2 * beta * w * np.abs(w) ** (-2 * beta - 2)
    return [float(np.sum(g).real), float(np.sum(g).imag)]


def test_bound_values():
    assert lower_bound(3, 0.5) == pytest.approx(1 / 7)
    assert lower_bound(64, 0.5) == pytest.approx((0.5 / 64.5) ** (1 / 62))
    assert apothem_bound(3) == 0.5
    assert apothem_bound(8) == pytest.approx(math.cos(math.pi / 8), rel=1e-16)
    assert small_beta_bound(3, 0.01) == pytest.approx(0.121656476, rel=1e-8)
    assert small_beta_bound(3, 0.05) == pytest.approx(0.64762, rel=1e-4)
    with pytest.raises(DomainError):
        small_beta_bound(3, 0.5)
    assert bounds(3, 0.5).r_small_beta is None
    assert bounds(3, 0.1).search_interval[1] == pytest.approx(min(0.5, small_beta_bound(3, 0.1)))


def test_search_interval_above_one_starts_at_floor():
    assert search_interval(3, 5.0)[0] == DEFAULT_OPTIONS.floor
    assert search_interval(3, 0.5)[0] == pytest.approx(1 / 7, rel=1e-8)


@pytest.mark.parametrize("n", [3, 4, 6, 9, 12])
@pytest.mark.parametrize("beta", [0.1, 0.5, 1.0, 2.0])
def test_bisector_root_matches_brentq(n, beta):
    roots = bisector_roots(n, beta)
    assert len(roots) == 1
    r, res, (lo, hi) = roots[0]
    ref = brentq(lambda x: plain_uprime(n, beta, x), 1e-6, math.cos(math.pi / n) - 1e-12, xtol=1e-15, rtol=9e-16)
    assert r == pytest.approx(ref, abs=1e-12)
    assert lo <= r <= hi and hi - lo <= 1e-13


def test_refine_root_keeps_bracket():
    f = lambda x: x ** 3 - 2  # noqa: E731
    r, (lo, hi) = refine_root(f, lambda x: 3 * x * x, 1.0, 2.0)
    assert r == pytest.approx(2 ** (1 / 3), rel=1e-15)
    assert f(lo) <= 0 <= f(hi)


def test_seeded_root_tracks():
    r0 = bisector_roots(4, 1.0)[0][0]
    r, _ = seeded_root(4, 1.05, r0)
    assert r == pytest.approx(bisector_roots(4, 1.05)[0][0], abs=1e-13)


@pytest.mark.parametrize("n,beta,count", [(3, 0.5, 4), (4, 0.5, 5), (7, 1.0, 8), (5, 2.0, 6)])
def test_enumeration_counts_and_types(n, beta, count):
    eq = enumerate_equilibria(n, beta)
    assert eq.count == count == len(eq.points)
    assert eq.maxwell_bound == (n - 1) ** 2
    assert eq.points[0].is_origin and eq.points[0].classification is Kind.MINIMUM
    assert all(p.classification is Kind.SADDLE for p in eq.points[1:])
    assert all(p.residual <= 1e-10 for p in eq.points)


@pytest.mark.parametrize("n,beta", [(3, 0.5), (4, 0.5), (5, 1.0)])
def test_no_equilibria_off_the_bisectors(n, beta):
    """Multistart Cartesian root finding finds exactly the enumerated set."""
    found = []
    for rad in np.linspace(0.0, 0.9, 10):
        for ang in np.linspace(0, 2 * np.pi, 24, endpoint=False):
            sol = root(lambda xy: cartesian_gradient(n, beta, xy), [rad * np.cos(ang), rad * np.sin(ang)], tol=1e-14)
            # hybr flags 'no progress' once it sits at the rounding floor, so judge by residual
            if np.hypot(*sol.x) < 0.99 and np.linalg.norm(sol.fun) < 1e-9:
                if all(np.hypot(*(sol.x - q)) > 1e-6 for q in found):
                    found.append(sol.x)
    eq = enumerate_equilibria(n, beta)
    assert len(found) == eq.count
    for p in eq.points:
        xy = np.array([p.r * np.cos(p.theta), p.r * np.sin(p.theta)])
        assert min(np.hypot(*(xy - q)) for q in found) < 1e-8


def test_classification_against_cartesian_fd():
    n, beta = 4, 0.5
    p = enumerate_equilibria(n, beta).points[1]
    x0 = np.array([p.r * np.cos(p.theta), p.r * np.sin(p.theta)])
    h = 1e-6
    J = np.column_stack([(np.array(cartesian_gradient(n, beta, x0 + e)) -
                          np.array(cartesian_gradient(n, beta, x0 - e))) / (2 * h)
                         for e in (np.array([h, 0]), np.array([0, h]))])
    ref = np.linalg.eigvalsh(0.5 * (J + J.T))
    assert np.allclose(sorted(p.hessian_eigs), ref, rtol=1e-5)
    assert classify(n, beta, p) is Kind.SADDLE


def test_classify_eigs_cases():
    assert classify_eigs((1.0, 2.0)) is Kind.MINIMUM
    assert classify_eigs((-1.0, -2.0)) is Kind.MAXIMUM
    assert classify_eigs((-1.0, 2.0)) is Kind.SADDLE
    assert classify_eigs((1e-12, 2.0)) is Kind.DEGENERATE
    assert classify_eigs((0.0, 0.0)) is Kind.DEGENERATE


def test_inconsistent_tolerance_raises():
    with pytest.raises(InconsistencyError):
        find_bisector_equilibria(12, 5.0, SolverOptions(tol=1e-30))


@pytest.mark.parametrize("n", range(3, 11))
def test_pn_polynomial_vs_sympy(n):
    r = sp.symbols("r")
    expr = -r ** (2 * n) + n * r ** n - n * r ** (n - 2) + 1
    assert [float(c) for c in sp.Poly(expr, r).all_coeffs()] == pn_polynomial(n)
    for k in range(3):
        ref = float(sp.diff(expr, r, k).subs(r, sp.Rational(3, 7)))
        assert pn_eval(n, 3 / 7, k) == pytest.approx(ref, rel=1e-13, abs=1e-15)
    assert pn_eval(n, 1.0) == 0.0 and pn_eval(n, 1.0, 1) == 0.0 and pn_eval(n, 1.0, 2) == -4 * n


@pytest.mark.parametrize("n", range(3, 11))
def test_pn_root_matches_bisector_root(n):
    ref = [z.real for z in np.roots(pn_polynomial(n)) if abs(z.imag) < 1e-9 and 0 < z.real < 1 - 1e-4]
    roots = pn_roots_in_unit_interval(n)
    assert len(roots) == 1 == len(ref)
    assert roots[0] == pytest.approx(ref[0], abs=1e-10)
    assert roots[0] == pytest.approx(bisector_roots(n, 1.0)[0][0], abs=1e-12)


def test_pn_eval_rejects_order():
    with pytest.raises(DomainError):
        pn_eval(3, 0.5, 3)


def test_triangle_quintic_rederived_by_squaring():
    r = sp.symbols("r")
    diff = sp.expand((1 - 2 * r) ** 2 * (1 + r) ** 4 - (1 - r + r * r) ** 3)
    quintic = sp.Poly(sp.cancel(diff / (3 * r)), r)
    assert [float(c) for c in quintic.all_coeffs()] == example_polynomials(3, 0.5)["printed"]


def test_square_sextic_rederived_by_squaring():
    r = sp.symbols("r")
    s2 = sp.sqrt(2)
    a, b = 1 + r * r - s2 * r, 1 + r * r + s2 * r
    diff = sp.expand((s2 - 2 * r) ** 2 * b ** 3 - (2 * r + s2) ** 2 * a ** 3)
    sextic = sp.Poly(sp.simplify(diff / (4 * s2 * r)), r)
    polys = example_polynomials(4, 0.5)
    assert [float(c) for c in sextic.all_coeffs()] == polys["rederived"]
    assert polys["printed"] != polys["rederived"]


def test_example_polynomial_roots():
    r3 = polynomial_roots_in(example_polynomials(3, 0.5)["printed"], 0.0, 0.5)
    assert len(r3) == 1 and r3[0] == pytest.approx(bisector_roots(3, 0.5)[0][0], abs=1e-13)
    printed = example_polynomials(4, 0.5)["printed"]
    assert polynomial_roots_in(printed, 0.0, 1.0) == []
    assert descartes_sign_changes(printed) == 2
    xs = np.linspace(0, 1, 2001)
    assert np.min(np.polyval(printed, xs)) > 0.25
    with pytest.raises(DomainError):
        example_polynomials(5, 0.5)


def test_descartes():
    assert descartes_sign_changes([1, 0, -1, 2, 0, -3]) == 3
    with pytest.raises(DomainError):
        descartes_sign_changes([0, 0])


@settings(max_examples=30, deadline=None)
@given(st.floats(0.02, 0.98))
def test_f_beta_root_is_triangle_equilibrium(beta):
    r = f_beta_root(beta)
    assert abs(f_beta_triangle(r, beta)) < 1e-13
    assert r == pytest.approx(bisector_roots(3, beta)[0][0], abs=1e-12)


def test_f_beta_domain():
    with pytest.raises(DomainError):
        f_beta_root(1.0)


def test_certified_below_resolves_rounded_root():
    pt = find_bisector_equilibria(3, 100.0)[0]
    assert pt.r == 0.5
    assert certified_below(3, 100.0, pt, 0.5)
    fake = EquilibriumPoint(0.5, math.pi / 3, 0.0, (0.5, 0.5))
    assert not certified_below(3, 100.0, fake, 0.5)
    assert not certified_below(3, 0.5, EquilibriumPoint(0.4, 0, 0, (0.4, 0.41)), 0.3)
    # u' is positive inside the root and negative beyond it
    assert bisector_derivative(3, 100.0, 0.5) < 0


def test_origin_point_record():
    p = enumerate_equilibria(3, 0.5).points[0]
    assert p.hessian_eigs == (2 * 0.25 * 3, 2 * 0.25 * 3)
    assert PolarPoint(p.r, p.theta).r == 0.0
