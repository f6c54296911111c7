"""Location bounds, bracketed root finding on the bisector derivative,
equilibrium enumeration and Morse classification, and the special
polynomials attached to the beta = 1 and small-n cases.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .charges import ChargeConfiguration, PolarPoint, as_exponent, lattice_trig
from .errors import DomainError, InconsistencyError
from .potential import (
    _config,
    bisector_derivative,
    bisector_derivative_terms,
    bisector_second_derivative,
    potential_gradient,
    potential_hessian,
)
from .specfun import beta_function


class Kind(str, enum.Enum):
    MINIMUM = "minimum"
    MAXIMUM = "maximum"
    SADDLE = "saddle"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SolverOptions:
    cells: int = 512
    bisect_width: float = 1e-13
    newton_steps: int = 5
    tol: float = 1e-10
    margin: float = 1e-9
    floor: float = 1e-6
    degeneracy: float = 1e-8


DEFAULT_OPTIONS = SolverOptions()


@dataclass(frozen=True)
class BoundPair:
    """Interval bounds for the radius of a non-trivial equilibrium."""

    r_lower: float
    r_upper: float
    r_small_beta: float | None = None

    @property
    def search_interval(self):
        hi = self.r_upper if self.r_small_beta is None else min(self.r_upper, self.r_small_beta)
        return max(self.r_lower, 0.0), min(hi, 1.0)


@dataclass(frozen=True)
class EquilibriumPoint:
    r: float
    theta: float
    residual: float
    bracket: tuple
    classification: Kind = Kind.DEGENERATE
    hessian_eigs: tuple = field(default=(math.nan, math.nan))

    @property
    def is_origin(self):
        return self.r == 0.0


@dataclass(frozen=True)
class EquilibriumSet:
    points: list
    count: int
    maxwell_bound: int
    roots_per_bisector: int


# --- bounds ---------------------------------------------------------------

def lower_bound(n, beta):
    """(beta / (beta + n))^(1/(n-2))."""
    beta = as_exponent(beta).beta
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    return (beta / (beta + n)) ** (1.0 / (n - 2))


def apothem_bound(n):
    """cos(pi/n), correctly rounded (exactly 0.5 for the triangle)."""
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    return float(lattice_trig(n)[0][1])


def small_beta_bound(n, beta):
    """{4 beta (n + beta) B(1 + beta, 1 - 2 beta)}^(1/(n-2)), defined for beta < 1/2."""
    beta = as_exponent(beta).beta
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    if beta >= 0.5:
        raise DomainError(f"small-beta bound needs beta < 1/2, got {beta}")
    return (4.0 * beta * (n + beta) * beta_function(1.0 + beta, 1.0 - 2.0 * beta)) ** (1.0 / (n - 2))


def bounds(n, beta):
    beta = as_exponent(beta).beta
    small = small_beta_bound(n, beta) if beta < 0.5 else None
    return BoundPair(lower_bound(n, beta), apothem_bound(n), small)


def search_interval(n, beta, opts=DEFAULT_OPTIONS):
    """Radial interval scanned for sign changes of u'_beta.

    The lower bound is only established for beta <= 1 and exceeds the apothem
    for some larger beta (e.g. n=3, beta=5), so above 1 the scan starts at the
    floor instead.
    """
    beta = as_exponent(beta).beta
    pair = bounds(n, beta)
    lo, hi = pair.search_interval
    if beta <= 1.0:
        lo = max(opts.floor, lo * (1.0 - opts.margin))
    else:
        lo = opts.floor
    return lo, hi


# --- root finding ---------------------------------------------------------

def _scaled_residual(cfg, beta, r):
    """|u'(r)| and the rounding scale sum_j |term_j| of its summands."""
    terms = bisector_derivative_terms(cfg, beta, r)
    return abs(math.fsum(terms)), math.fsum(np.abs(terms))


def _sign(v):
    v = float(v)
    return (v > 0.0) - (v < 0.0)


def refine_root(f, fprime, lo, hi, f_lo=None, width=1e-13, newton_steps=5):
    """Shrink a sign-change bracket by bisection, then polish with Newton.

    Newton iterates are accepted only inside the current bracket, and every
    evaluation keeps the bracket valid, so the result always satisfies
    ``lo <= root <= hi`` with ``f(lo)`` and ``f(hi)`` of opposite sign (or zero).

    Returns ``(best, (lo, hi))`` where ``best`` is the evaluated point of
    smallest ``|f|``; the bracket always contains it.
    """
    f_lo = f(lo) if f_lo is None else f_lo
    s_lo = _sign(f_lo)
    best, best_val = lo, abs(f_lo)
    if s_lo == 0:
        return lo, (lo, lo)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        v = f(mid)
        if abs(v) < best_val:
            best, best_val = mid, abs(v)
        s = _sign(v)
        if s == 0:
            return mid, (mid, mid)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    x = best if lo <= best <= hi else 0.5 * (lo + hi)
    for _ in range(newton_steps):
        v = f(x)
        if abs(v) < best_val or x == best:
            best, best_val = x, abs(v)
        s = _sign(v)
        if s == 0:
            return x, (x, x)
        if s == s_lo:
            lo = max(lo, x)
        else:
            hi = min(hi, x)
        d = fprime(x)
        if d == 0.0 or not math.isfinite(d):
            break
        x_new = x - v / d
        if not (lo <= x_new <= hi) or x_new == x:
            break
        x = x_new
    for end in (lo, hi):
        v = abs(f(end))
        if v < best_val:
            best, best_val = end, v
    # best may be a former endpoint just outside the final bracket; widening
    # to include it keeps a valid sign-change bracket
    return best, (min(lo, best), max(hi, best))


def bisector_roots(cfg, beta, opts=DEFAULT_OPTIONS, interval=None):
    """All sign-change roots of u'_beta on the search interval, ascending.

    Returns a list of ``(r, residual, (lo, hi))``; an empty list means no sign
    change was seen.
    """
    cfg = _config(cfg)
    beta = as_exponent(beta).beta
    lo, hi = search_interval(cfg.n, beta, opts) if interval is None else interval
    grid = np.linspace(lo, hi, opts.cells + 1).tolist()
    vals = [bisector_derivative(cfg, beta, x) for x in grid]

    def f(x):
        return bisector_derivative(cfg, beta, x)

    def fp(x):
        return bisector_second_derivative(cfg, beta, x)

    out = []
    for i in range(opts.cells):
        a, b = grid[i], grid[i + 1]
        va, vb = vals[i], vals[i + 1]
        if va == 0.0:
            if i == 0 or vals[i - 1] != 0.0:
                out.append((a, (a, a)))
            continue
        if va * vb < 0.0:
            out.append(refine_root(f, fp, a, b, va, opts.bisect_width, opts.newton_steps))
    if vals[-1] == 0.0:
        out.append((grid[-1], (grid[-1], grid[-1])))

    roots = []
    for r, br in out:
        res, scale = _scaled_residual(cfg, beta, r)
        if res > opts.tol * max(1.0, scale):
            raise InconsistencyError(
                f"root at r={r!r} has residual {res:.3e} above tolerance (n={cfg.n}, beta={beta})")
        roots.append((r, res, br))
    return roots


def seeded_root(cfg, beta, seed, opts=DEFAULT_OPTIONS, half_width=0.02):
    """Track a single root starting from ``seed`` (continuation step).

    Expands a bracket around the seed until u'_beta changes sign, then refines
    it. Returns ``None`` if no sign change is found within the search interval.
    """
    cfg = _config(cfg)
    beta = as_exponent(beta).beta
    s_lo, s_hi = search_interval(cfg.n, beta, opts)
    f = lambda x: bisector_derivative(cfg, beta, x)  # noqa: E731
    fp = lambda x: bisector_second_derivative(cfg, beta, x)  # noqa: E731
    w = half_width
    while True:
        a, b = max(s_lo, seed - w), min(s_hi, seed + w)
        fa, fb = f(a), f(b)
        if fa * fb <= 0.0:
            break
        if a == s_lo and b == s_hi:
            return None
        w *= 2.0
    if fb == 0.0:
        return b, (b, b)
    return refine_root(f, fp, a, b, fa, opts.bisect_width, opts.newton_steps)


# --- enumeration and classification ---------------------------------------

def _cartesian_eigs(cfg, beta, r, theta):
    H = potential_hessian(cfg, beta, PolarPoint(r, theta))
    if r == 0.0:
        # by rotational symmetry (n >= 3) the Cartesian Hessian at the origin is isotropic
        return (H[0, 0], H[0, 0])
    # at a critical point the Cartesian Hessian is congruent to the metric-scaled polar one
    M = np.array([[H[0, 0], H[0, 1] / r], [H[0, 1] / r, H[1, 1] / (r * r)]])
    lo, hi = np.linalg.eigvalsh(M)
    return (float(lo), float(hi))


def classify_eigs(eigs, threshold=DEFAULT_OPTIONS.degeneracy):
    lo, hi = sorted(eigs)
    scale = max(abs(lo), abs(hi))
    if scale == 0.0 or min(abs(lo), abs(hi)) < threshold * scale:
        return Kind.DEGENERATE
    if lo > 0.0:
        return Kind.MINIMUM
    if hi < 0.0:
        return Kind.MAXIMUM
    return Kind.SADDLE


def classify(cfg, beta, point, opts=DEFAULT_OPTIONS):
    """Morse type of a critical point from the signs of its Hessian eigenvalues."""
    cfg = _config(cfg)
    eigs = _cartesian_eigs(cfg, beta, point.r, point.theta)
    return classify_eigs(eigs, opts.degeneracy)


def find_bisector_equilibria(cfg, beta, opts=DEFAULT_OPTIONS):
    """Non-trivial equilibria on the first bisector ray theta = pi/n, ascending in r."""
    cfg = _config(cfg)
    beta = as_exponent(beta).beta
    roots = bisector_roots(cfg, beta, opts)
    if not roots:
        raise InconsistencyError(
            f"no sign change of u' on the search interval for n={cfg.n}, beta={beta}; "
            "at least one bisector equilibrium must exist")
    theta = cfg.bisector_angles[0]
    points = []
    for r, res, br in roots:
        eigs = _cartesian_eigs(cfg, beta, r, theta)
        points.append(EquilibriumPoint(r, theta, res, br, classify_eigs(eigs, opts.degeneracy), eigs))
    return points


def enumerate_equilibria(cfg, beta, opts=DEFAULT_OPTIONS):
    """Origin plus every bisector root replicated onto all n bisector rays."""
    cfg = _config(cfg)
    beta = as_exponent(beta).beta
    on_ray = find_bisector_equilibria(cfg, beta, opts)
    eigs0 = _cartesian_eigs(cfg, beta, 0.0, 0.0)
    points = [EquilibriumPoint(0.0, 0.0, 0.0, (0.0, 0.0), classify_eigs(eigs0, opts.degeneracy), eigs0)]
    for theta in cfg.bisector_angles:
        for pt in on_ray:
            grad = potential_gradient(cfg, beta, PolarPoint(pt.r, theta))
            points.append(EquilibriumPoint(
                pt.r, theta, math.hypot(*grad), pt.bracket, pt.classification, pt.hessian_eigs))
    per_ray = len(on_ray)
    count = cfg.n * per_ray + 1
    maxwell = (cfg.n - 1) ** 2
    if per_ray == 1 and count > maxwell:
        raise InconsistencyError(f"{count} equilibria exceed (n-1)^2 = {maxwell}")
    return EquilibriumSet(points, count, maxwell, per_ray)


# --- polynomials ------------------------------------------------------------

def pn_polynomial(n):
    """Coefficients of p_n(r) = -r^(2n) + n r^n - n r^(n-2) + 1, highest degree first."""
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    c = [0.0] * (2 * n + 1)
    c[0] = -1.0
    c[n] += float(n)
    c[n + 2] -= float(n)
    c[2 * n] += 1.0
    return c


def pn_eval(n, r, derivative=0):
    """p_n or one of its first two derivatives at r."""
    if derivative == 0:
        return -(r ** (2 * n)) + n * r ** n - n * r ** (n - 2) + 1.0
    if derivative == 1:
        return -2.0 * n * r ** (2 * n - 1) + n * n * r ** (n - 1) - n * (n - 2) * r ** (n - 3)
    if derivative == 2:
        last = n * (n - 2) * (n - 3) * r ** (n - 4) if n > 3 else 0.0
        return -2.0 * n * (2 * n - 1) * r ** (2 * n - 2) + n * n * (n - 1) * r ** (n - 2) - last
    raise DomainError(f"derivative order must be 0, 1 or 2, got {derivative}")


def pn_roots_in_unit_interval(n, cells=2048):
    """Roots of p_n in (0, 1) by sign scan and bisection.

    r = 1 is a double root, so the scan stops just short of it.
    """
    f = lambda r: pn_eval(n, r)  # noqa: E731
    fp = lambda r: pn_eval(n, r, 1)  # noqa: E731
    grid = np.linspace(0.0, 1.0 - 1e-6, cells + 1).tolist()
    vals = [f(x) for x in grid]
    roots = []
    for i in range(cells):
        if vals[i] * vals[i + 1] < 0.0:
            roots.append(refine_root(f, fp, grid[i], grid[i + 1], vals[i], 1e-15, 5)[0])
    return roots


def descartes_sign_changes(coefficients):
    """Number of sign changes in a coefficient sequence, zeros skipped."""
    nz = [c for c in coefficients if c != 0]
    if not nz:
        raise DomainError("all-zero coefficient list")
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


EXAMPLE_POLYNOMIALS = {
    (3, 0.5): {"printed": [1.0, 5.0, 1.0, 1.0, -4.0, 1.0]},
    (4, 0.5): {
        "printed": [4.0, 1.0, 0.0, -4.0, 0.0, 0.0, 1.0],
        "rederived": [4.0, 0.0, 1.0, 0.0, -4.0, 0.0, 1.0],
    },
}


def example_polynomials(n, beta):
    """Polynomials whose non-negative roots contain the bisector critical radii.

    For (4, 1/2) two sextics are stored: ``printed`` (4r^6 + r^5 - 4r^3 + 1),
    which has no root in the admissible interval, and ``rederived``, obtained by
    squaring u'_{1/2} = 0, whose root is the equilibrium radius.
    """
    try:
        table = EXAMPLE_POLYNOMIALS[(int(n), float(beta))]
    except KeyError:
        raise DomainError(f"no example polynomial for (n, beta) = ({n}, {beta})") from None
    return {label: list(c) for label, c in table.items()}


def polynomial_roots_in(coefficients, lo, hi):
    """Real roots of a polynomial in the half-open interval (lo, hi], ascending."""
    roots = np.roots(coefficients)
    real = sorted(float(z.real) for z in roots if abs(z.imag) <= 1e-12 * max(1.0, abs(z)))
    out = []
    for x in real:
        if lo < x <= hi:
            # polish on the real line
            poly = np.poly1d(coefficients)
            d = poly.deriv()
            for _ in range(3):
                dx = poly(x) / d(x) if d(x) != 0 else 0.0
                x -= dx
            out.append(x)
    return out


# --- the equilateral triangle --------------------------------------------------

def f_beta_triangle(r, beta):
    """(1+r)^(2 beta+1) (2r-1) + (1+r^2-r)^(beta+1); shares its positive root with u'_beta, n=3."""
    return (1.0 + r) ** (2.0 * beta + 1.0) * (2.0 * r - 1.0) + (1.0 + r * r - r) ** (beta + 1.0)


def f_beta_root(beta):
    """The unique root of f_beta in (0, 1/2], by bisection.

    f_beta is convex with f_beta(0) = 0 and f_beta'(0) = -3 beta < 0, so it is
    negative between 0 and the root; halving down from 1/2 finds the left end.
    """
    beta = float(beta)
    if not (0.0 < beta < 1.0):
        raise DomainError(f"triangle root needs 0 < beta < 1, got {beta}")
    hi = 0.5
    lo = 0.25
    while f_beta_triangle(lo, beta) >= 0.0:
        lo *= 0.5
        if lo < 1e-300:
            raise InconsistencyError(f"f_beta has no negative values on (0, 1/2] for beta={beta}")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        v = f_beta_triangle(mid, beta)
        if v == 0.0:
            return mid
        if v < 0.0:
            lo = mid
        else:
            hi = mid
    return lo if abs(f_beta_triangle(lo, beta)) <= abs(f_beta_triangle(hi, beta)) else hi


def certified_below(cfg, beta, point, bound):
    """True when the exact root bracketed by ``point`` lies strictly below ``bound``.

    A float radius can round onto the bound (n=3, beta=100 sits within 1e-48 of
    1/2); the sign of u'_beta at the bound then settles the strict inequality.
    """
    lo, hi = point.bracket
    if hi < bound:
        return True
    if lo >= bound:
        return False
    # the root lies in (lo, bound) iff u' already changed sign at the bound
    s_lo = _sign(bisector_derivative(cfg, beta, lo))
    s_b = _sign(bisector_derivative(cfg, beta, bound))
    return s_lo != 0 and s_b != 0 and s_lo != s_b

__all__ = [
    "BoundPair", "ChargeConfiguration", "EquilibriumPoint", "EquilibriumSet", "Kind", "SolverOptions",
    "apothem_bound", "bounds", "certified_below", "classify", "descartes_sign_changes",
    "enumerate_equilibria", "example_polynomials", "f_beta_root", "f_beta_triangle",
    "find_bisector_equilibria", "lower_bound", "pn_eval", "pn_polynomial", "pn_roots_in_unit_interval",
    "small_beta_bound",
]
