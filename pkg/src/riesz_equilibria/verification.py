"""Numerical verification suites behind ``riesz-equilibria verify``.

Each check yields a :class:`Check` with a measured value and the limit it was
compared against. Suites: evaluators, bounds, examples, beta1, asymptotics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charges import PolarPoint, regular_polygon
from .experiments import continuation_beta1, cross_validate, strictly_below_apothem, sweep_beta, sweep_n
from .potential import (
    bisector_derivative,
    bisector_second_derivative,
    potential_direct,
    potential_gradient,
    potential_hessian,
)
from .solver import (
    DEFAULT_OPTIONS,
    SolverOptions,
    apothem_bound,
    certified_below,
    descartes_sign_changes,
    enumerate_equilibria,
    example_polynomials,
    lower_bound,
    pn_eval,
    pn_roots_in_unit_interval,
    polynomial_roots_in,
    small_beta_bound,
)
from .specfun import beta_function, build_rule, fourier_coefficient, integral_potential

SUITES = ("evaluators", "bounds", "examples", "beta1", "asymptotics")

GRID_N = range(3, 13)
GRID_BETA = (0.1, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0)


@dataclass(frozen=True)
class Check:
    name: str
    measured: object
    limit: object
    ok: bool
    warn_only: bool = False

    @property
    def status(self):
        if self.ok:
            return "PASS"
        return "WARN" if self.warn_only else "FAIL"

    def line(self):
        return f"{self.status} {self.name} {_fmt(self.measured)} {_fmt(self.limit)}"


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(f"({n},{_fmt(b)})" for n, b in v) + "]"
    return str(v)


def ridders(f, x, h, con=1.4, ntab=12):
    """Central-difference derivative with Richardson extrapolation."""
    a = np.zeros((ntab, ntab))
    a[0, 0] = (f(x + h) - f(x - h)) / (2 * h)
    best, err = a[0, 0], math.inf
    for i in range(1, ntab):
        h /= con
        a[0, i] = (f(x + h) - f(x - h)) / (2 * h)
        fac = con * con
        for j in range(1, i + 1):
            a[j, i] = (a[j - 1, i] * fac - a[j - 1, i - 1]) / (fac - 1.0)
            fac *= con * con
            e = max(abs(a[j, i] - a[j - 1, i]), abs(a[j, i] - a[j - 1, i - 1]))
            if e <= err:
                err, best = e, a[j, i]
        if abs(a[i, i] - a[i - 1, i - 1]) >= 2 * err:
            break
    return best


def _plain_uprime(n, beta, r):
    # textbook trig sum, valid for negative r too; used as a finite-difference source
    c = np.cos(np.pi * (2 * np.arange(1, n + 1) - 1) / n)
    return math.fsum(-2.0 * beta * (r - c) * (1.0 + r * r - 2.0 * r * c) ** (-beta - 1.0))


# --- evaluators -----------------------------------------------------------------

def check_triangulation():
    worst = 0.0
    for n in range(3, 9):
        cfg = regular_polygon(n)
        for beta in (0.1, 0.25, 0.5, 0.75, 0.9):
            rule = build_rule(beta, 128)
            for r in (0.0, 0.2, 0.4, 0.6, 0.8):
                for theta in (0.0, math.pi / n, math.pi / (2 * n)):
                    p = PolarPoint(r, theta)
                    worst = max(worst, abs(integral_potential(cfg, beta, p, rule) - potential_direct(cfg, beta, p)))
    closed = cross_validate(6, 1.0, 100).max_direct_closed
    return [
        Check("c1.direct-vs-integral", worst, 1e-8, worst <= 1e-8),
        Check("c1.direct-vs-closed-beta1", closed, 1e-12, closed <= 1e-12),
    ]


def check_properties(seed=11):
    rng = np.random.default_rng(seed)
    out = []
    sym = 0.0
    for _ in range(200):
        n = int(rng.integers(3, 11))
        beta = float(rng.choice([0.25, 0.5, 0.75, 1.0, 2.0]))
        r, theta = rng.uniform(0.0, 0.9), rng.uniform(0.0, 2 * math.pi)
        base = potential_direct(n, beta, (r, theta))
        for t2 in (theta + 2 * math.pi / n, -theta):
            sym = max(sym, abs(potential_direct(n, beta, (r, t2)) - base) / base)
    out.append(Check("c11.symmetry-rel", sym, 1e-12, sym <= 1e-12))

    ray = 0.0
    for n in range(3, 11):
        for beta in (0.25, 0.5, 0.75, 1.0, 2.0):
            for r in np.arange(1, 9) / 10:
                for k in range(2 * n):
                    ray = max(ray, abs(potential_gradient(n, beta, (r, math.pi * k / n))[1]))
    out.append(Check("c11.dtheta-on-rays", ray, 1e-12, ray <= 1e-12))

    g_err = h_err = 0.0
    h = 1e-5
    for _ in range(200):
        n = int(rng.integers(3, 11))
        beta = float(rng.choice([0.25, 0.5, 0.75, 1.0, 2.0]))
        r, theta = rng.uniform(0.05, 0.9), rng.uniform(0.0, 2 * math.pi)
        U = lambda a, b: potential_direct(n, beta, (a, b))  # noqa: E731
        G = lambda a, b: np.array(potential_gradient(n, beta, (a, b)))  # noqa: E731
        g = G(r, theta)
        fd_g = np.array([(U(r + h, theta) - U(r - h, theta)) / (2 * h),
                         (U(r, theta + h) - U(r, theta - h)) / (2 * h)])
        g_err = max(g_err, np.linalg.norm(fd_g - g) / max(np.linalg.norm(g), 1e-300))
        H = potential_hessian(n, beta, (r, theta))
        fd_h = np.column_stack([(G(r + h, theta) - G(r - h, theta)) / (2 * h),
                                (G(r, theta + h) - G(r, theta - h)) / (2 * h)])
        h_err = max(h_err, np.linalg.norm(fd_h - H) / np.linalg.norm(H))
    out.append(Check("c11.gradient-vs-fd", g_err, 1e-5, g_err <= 1e-5))
    out.append(Check("c11.hessian-vs-fd", h_err, 1e-5, h_err <= 1e-5))

    mom = 0.0
    for beta in (0.1, 0.25, 0.5, 0.75, 0.9):
        rule = build_rule(beta, 128)
        for k in range(6):
            exact = beta_function(beta + k, 1.0 - beta)
            mom = max(mom, abs(rule.integrate(rule.nodes ** k) - exact) / exact)
    out.append(Check("c11.quadrature-moments", mom, 1e-12, mom <= 1e-12))

    b0 = max(abs(fourier_coefficient(0, 0.0, beta) - 1.0) for beta in (0.1, 0.25, 0.5, 0.75, 0.9))
    out.append(Check("c11.b0-at-origin", b0, 1e-13, b0 <= 1e-13))
    sym_b = all(fourier_coefficient(m, 0.5, 0.5) == fourier_coefficient(-m, 0.5, 0.5) for m in range(1, 8))
    out.append(Check("c11.bm-symmetry", sym_b, True, sym_b))
    return out


# --- bounds ---------------------------------------------------------------------

def check_containment(opts=DEFAULT_OPTIONS, residual_limit=1e-10):
    """Lower/upper containment and absolute residual on the full (n, beta) grid."""
    lower_gap = math.inf
    upper_ok = True
    worst_res = 0.0
    lower_fail, res_fail = [], []
    for n in GRID_N:
        cfg = regular_polygon(n)
        for beta in GRID_BETA:
            eq = enumerate_equilibria(cfg, beta, opts)
            rl, ru = lower_bound(n, beta), apothem_bound(n)
            for pt in eq.points[1:1 + eq.roots_per_bisector]:
                gap = pt.r - rl
                lower_gap = min(lower_gap, gap)
                if gap <= 0.0:
                    lower_fail.append((n, beta))
                upper_ok &= certified_below(cfg, beta, pt, ru)
                res = abs(bisector_derivative(cfg, beta, pt.r))
                worst_res = max(worst_res, res)
                if res > residual_limit:
                    res_fail.append((n, beta))
    checks = [
        Check("c5.r-minus-lower-bound-min", lower_gap, "> 0", lower_gap > 0.0),
        Check("c5.below-apothem", upper_ok, True, upper_ok),
        Check("c5.abs-residual-max", worst_res, residual_limit, worst_res <= residual_limit),
    ]
    if lower_fail:
        checks.append(Check("c5.lower-bound-violations", lower_fail, "[]", False))
    if res_fail:
        checks.append(Check("c5.residual-violations", res_fail, "[]", False))
    return checks


def check_origin():
    exact_zero = all(bisector_derivative(n, b, 0.0) == 0.0 for n in GRID_N for b in GRID_BETA)
    worst = 0.0
    for n in GRID_N:
        for b in GRID_BETA:
            target = 2.0 * b * b * n
            fd = ridders(lambda r: _plain_uprime(n, b, r), 0.0, 0.05 / (1.0 + b))
            worst = max(worst, abs(fd - target) / target,
                        abs(bisector_second_derivative(n, b, 0.0) - target) / target)
    return [
        Check("c6.uprime-origin-zero", exact_zero, True, exact_zero),
        Check("c6.upp-origin-rel", worst, 1e-10, worst <= 1e-10),
    ]


# --- examples -------------------------------------------------------------------

def check_example_triangle():
    eq = enumerate_equilibria(3, 0.5)
    poly = polynomial_roots_in(example_polynomials(3, 0.5)["printed"], 0.0, 0.5)
    diff = abs(eq.points[1].r - poly[0]) if len(poly) == 1 else math.inf
    signs = descartes_sign_changes(example_polynomials(3, 0.5)["printed"])
    return [
        Check("c2.roots-per-bisector", eq.roots_per_bisector, 1, eq.roots_per_bisector == 1),
        Check("c2.quintic-vs-bisection", diff, 1e-10, diff <= 1e-10),
        Check("c2.count", eq.count, 4, eq.count == 4 == eq.maxwell_bound),
        Check("c2.quintic-sign-changes", signs, 2, signs == 2),
    ]


def check_example_square():
    eq = enumerate_equilibria(4, 0.5)
    r = eq.points[1].r
    polys = example_polynomials(4, 0.5)
    printed = polynomial_roots_in(polys["printed"], 0.0, math.sqrt(0.5))
    rederived = polynomial_roots_in(polys["rederived"], 0.0, math.sqrt(0.5))
    diff = abs(rederived[0] - r) if len(rederived) == 1 else math.inf
    return [
        Check("c3.count", eq.count, 5, eq.count == 5),
        Check("c3.root-in-interval", r, "(1/3,sqrt(2)/2)", 1.0 / 3.0 < r < math.sqrt(0.5)),
        Check("c3.rederived-polynomial-vs-bisection", diff, 1e-10, diff <= 1e-10),
        Check("c3.printed-polynomial-roots-in-(0,1/sqrt2]", len(printed), 1, len(printed) == 1, warn_only=True),
    ]


# --- beta = 1 -------------------------------------------------------------------

def check_beta1():
    counts_ok, worst, pn_worst = True, 0.0, 0.0
    for n in range(3, 11):
        eq = enumerate_equilibria(n, 1.0)
        counts_ok &= eq.count == n + 1
        roots = pn_roots_in_unit_interval(n)
        if len(roots) != 1:
            counts_ok = False
            continue
        worst = max(worst, abs(roots[0] - eq.points[1].r))
        pn_worst = max(pn_worst, abs(pn_eval(n, 1.0)), abs(pn_eval(n, 1.0, 1)),
                       abs(pn_eval(n, 1.0, 2) + 4 * n))
    return [
        Check("c4.count-n-plus-1", counts_ok, True, counts_ok),
        Check("c4.pn-root-vs-uprime-root", worst, 1e-10, worst <= 1e-10),
        Check("c4.pn-at-1", pn_worst, 1e-9, pn_worst <= 1e-9),
    ]


def check_continuation():
    uniform = all(continuation_beta1(n, 0.1, 0.01).uniform_count for n in (3, 4, 5))
    betas = [0.05 * k for k in range(1, 20)]
    single = all(rec.roots_per_bisector == 1 for rec in sweep_beta(3, betas))
    return [
        Check("c10.continuation-uniform-n3-5", uniform, True, uniform),
        Check("c10.triangle-single-root-beta-grid", single, True, single),
    ]


# --- asymptotics ----------------------------------------------------------------

def check_asymptotics():
    recs = sweep_n(0.5, [3, 4, 8, 16, 32, 64])
    rs = [r.r_star for r in recs]
    mono = all(b >= a - 1e-12 for a, b in zip(rs, rs[1:]))
    floor = 0.9246

    small = sweep_beta(3, [0.3, 0.1, 0.05, 0.01])
    rs_small = [r.r_star for r in small]
    dec = all(b < a for a, b in zip(rs_small, rs_small[1:]))
    ceiling = 0.122
    small = small_beta_bound(3, 0.01)

    large = sweep_beta(3, [1.0, 2.0, 5.0, 20.0, 100.0])
    rs_large = [r.r_star for r in large]
    inc = all(b > a for a, b in zip(rs_large, rs_large[1:]))
    below = all(strictly_below_apothem(rec) for rec in large)
    return [
        Check("c7.r-nondecreasing-in-n", mono, True, mono),
        Check("c7.r64-above-floor", rs[-1], floor, rs[-1] > floor),
        Check("c8.r-decreasing-as-beta-down", dec, True, dec),
        Check("c8.r001-below-ceiling", rs_small[-1], ceiling, rs_small[-1] < ceiling),
        Check("c8.r001-below-exact-ceiling", rs_small[-1], small, rs_small[-1] < small),
        Check("c9.r-increasing-in-beta", inc, True, inc),
        Check("c9.r-below-half", below, True, below),
        Check("c9.r100-above-0.45", rs_large[-1], 0.45, rs_large[-1] > 0.45),
    ]


def run_suite(name, tol=None):
    opts = DEFAULT_OPTIONS if tol is None else SolverOptions(tol=tol)
    if name == "evaluators":
        return check_triangulation() + check_properties()
    if name == "bounds":
        return check_containment(opts, 1e-10 if tol is None else tol) + check_origin()
    if name == "examples":
        return check_example_triangle() + check_example_square()
    if name == "beta1":
        return check_beta1() + check_continuation()
    if name == "asymptotics":
        return check_asymptotics()
    raise ValueError(f"unknown suite {name!r}")


def run(suite="all", tol=None):
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        out.extend(run_suite(name, tol))
    return out
