"""Beta and Gauss hypergeometric functions, the singular-endpoint quadrature
rule, and integral-representation evaluators of the polygon potential.

The integral evaluators are an independent route to the quantities computed
by direct summation in :mod:`riesz_equilibria.potential`; they are valid for
0 < beta < 1 only.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .charges import DomainTag, as_exponent
from .errors import DomainError
from .potential import _config, _lattice_split, _point, _radius

DEFAULT_NODES = 96


def default_node_count():
    """Quadrature size, overridable through ``RIESZ_QUAD_NODES``."""
    raw = os.environ.get("RIESZ_QUAD_NODES")
    if raw is None:
        return DEFAULT_NODES
    try:
        count = int(raw)
    except ValueError:
        raise DomainError(f"RIESZ_QUAD_NODES must be an integer, got {raw!r}") from None
    if count < 4:
        raise DomainError(f"RIESZ_QUAD_NODES must be >= 4, got {count}")
    return count


def beta_function(x, y):
    """B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y) for x, y > 0."""
    if not (x > 0 and y > 0):
        raise DomainError(f"Beta function needs positive arguments, got ({x}, {y})")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def _nonpositive_integer(v):
    return v <= 0 and float(v).is_integer()


def gauss_2f1(a, b, c, x, max_terms=1_000_000):
    """Gauss hypergeometric function 2F1(a, b; c; x) on 0 <= x < 1.

    Sums the power series with exact accumulation. Terminates early when a or
    b is a non-positive integer (polynomial case).
    """
    if _nonpositive_integer(c):
        raise DomainError(f"2F1 undefined for non-positive integer c={c}")
    if not (0.0 <= x < 1.0):
        raise DomainError(f"2F1 series needs 0 <= x < 1, got x={x}")
    terms = [1.0]
    term = approx = 1.0
    k = quiet = 0
    while k < max_terms:
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        k += 1
        if term == 0.0:
            break
        terms.append(term)
        approx += term
        # past the parameters the term ratio is below 1 and tends to x
        if k > abs(a) + abs(b) + abs(c) and abs(term) <= 1e-17 * abs(approx):
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    else:
        raise DomainError(f"2F1 series did not converge within {max_terms} terms (x={x})")
    return math.fsum(terms)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for the weight ``t^(beta-1) (1-t)^(-beta)`` on (0, 1)."""

    beta: float
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def node_count(self):
        return len(self.nodes)

    @property
    def endpoint_exponents(self):
        return (self.beta - 1.0, -self.beta)

    def integrate(self, values):
        """Sum ``weights * values`` for integrand values sampled at the nodes."""
        return math.fsum(self.weights * np.asarray(values, dtype=float))


def _recurrence(beta, count):
    # Monic Jacobi recurrence with exponents a = -beta at x = 1, b = beta - 1 at
    # x = -1. Here a + b = -1, which makes the generic k = 1 formula 0/0.
    a, b = -beta, beta - 1.0
    k = np.arange(count, dtype=float)
    alpha = np.empty(count)
    alpha[0] = b - a
    alpha[1:] = -(b - a) / ((2 * k[1:] - 1) * (2 * k[1:] + 1))
    kk = np.arange(1, count, dtype=float)
    off = (kk + a) * (kk + b) / (2 * kk - 1) ** 2
    off[0] = 2.0 * (1.0 + a) * (1.0 + b)
    # map x in [-1, 1] to t = (1 + x) / 2
    return (1.0 + alpha) / 2.0, np.sqrt(off) / 2.0


def _orthonormal_values(diag, offdiag, mu0, t):
    """p_0..p_{N-1} orthonormal polynomials and p_N, p_N' at points t."""
    N = len(diag)
    p_prev = np.zeros_like(t)
    p = np.full_like(t, 1.0 / math.sqrt(mu0))
    dp_prev = np.zeros_like(t)
    dp = np.zeros_like(t)
    sq = np.zeros_like(t)
    for k in range(N):
        sq += p * p
        b_next = offdiag[k] if k < N - 1 else 1.0
        b_prev = offdiag[k - 1] if k > 0 else 0.0
        p_new = ((t - diag[k]) * p - b_prev * p_prev) / b_next
        dp_new = (p + (t - diag[k]) * dp - b_prev * dp_prev) / b_next
        p_prev, p = p, p_new
        dp_prev, dp = dp, dp_new
    return sq, p, dp


@lru_cache(maxsize=64)
def _rule_arrays(beta, node_count):
    diag, offdiag = _recurrence(beta, node_count)
    nodes = eigh_tridiagonal(diag, offdiag, eigvals_only=True)
    mu0 = math.pi / math.sin(math.pi * beta)
    # Newton polish on the degree-N polynomial, then Christoffel weights
    for _ in range(3):
        _, pn, dpn = _orthonormal_values(diag, offdiag, mu0, nodes)
        nodes = nodes - pn / dpn
    sq, _, _ = _orthonormal_values(diag, offdiag, mu0, nodes)
    weights = 1.0 / sq
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def build_rule(beta, node_count=None):
    """Gauss-Jacobi rule exact for ``t^(beta-1)(1-t)^(-beta) q(t)``, deg q <= 2N-1.

    Rules are memoized, so identical arguments give bitwise identical rules.
    """
    beta = as_exponent(beta).require(DomainTag.FRACTIONAL)
    node_count = default_node_count() if node_count is None else int(node_count)
    if node_count < 4:
        raise DomainError(f"quadrature needs at least 4 nodes, got {node_count}")
    nodes, weights = _rule_arrays(beta, node_count)
    if not (np.all(nodes > 0.0) and np.all(nodes < 1.0) and np.all(np.diff(nodes) > 0.0)):
        raise DomainError(f"node construction failed for beta={beta}, N={node_count}")
    return QuadratureRule(beta, nodes, weights)


def _rule_for(beta, rule):
    beta = as_exponent(beta).require(DomainTag.FRACTIONAL)
    if rule is None:
        return beta, build_rule(beta)
    if rule.beta != beta:
        raise DomainError(f"rule was built for beta={rule.beta}, not {beta}")
    return beta, rule


def integral_potential(cfg, beta, p, rule=None):
    """U_beta(r, theta) through its one-dimensional integral representation."""
    cfg, p = _config(cfg), _point(p)
    beta, rule = _rule_for(beta, rule)
    n, r, t = cfg.n, p.r, rule.nodes
    x = (r * t) ** n
    qi, qf = _lattice_split(n, p.theta)
    half = math.pi * qf / 2.0
    s2 = math.sin(half) ** 2 if qi % 2 == 0 else math.cos(half) ** 2
    ratio = (1.0 - x) * (1.0 + x) / ((1.0 - x) ** 2 + 4.0 * x * s2)
    f = (1.0 - r * r * t) ** -beta * ratio
    return n * math.sin(math.pi * beta) / math.pi * rule.integrate(f)


def j_integral(cfg, beta, r, rule=None):
    """The bisector integral J with u_beta(r) = n sin(pi beta)/pi * J(r)."""
    cfg, r = _config(cfg), _radius(r)
    beta, rule = _rule_for(beta, rule)
    t = rule.nodes
    x = (r * t) ** cfg.n
    return rule.integrate((1.0 - r * r * t) ** -beta * (1.0 - x) / (1.0 + x))


def g_n_factor(n, beta, r, t):
    """Sign-controlling factor of dJ/dr; accepts scalar or array ``t``."""
    beta = as_exponent(beta).beta
    t = np.asarray(t, dtype=float)
    out = beta * (1.0 - (r * t) ** (2 * n)) - n * r ** (n - 2) * t ** (n - 1) * (1.0 - r * r * t)
    return float(out) if out.ndim == 0 else out


def j_derivative(cfg, beta, r, rule=None):
    cfg, r = _config(cfg), _radius(r)
    beta, rule = _rule_for(beta, rule)
    n, t = cfg.n, rule.nodes
    # weight t^beta (1-t)^-beta is the rule's weight times t
    f = t * (1.0 - r * r * t) ** (-beta - 1.0) * g_n_factor(n, beta, r, t) / (1.0 + (r * t) ** n) ** 2
    return 2.0 * r * rule.integrate(f)


def fourier_coefficient(m, r, beta, rule=None):
    """Coefficient b_m of ``|1 - r e^{i theta}|^(-2 beta) = sum_m b_m e^{i m theta}``."""
    r = _radius(r)
    beta, rule = _rule_for(beta, rule)
    m = abs(int(m))
    t = rule.nodes
    return math.sin(beta * math.pi) / math.pi * r ** m * rule.integrate(t ** m * (1.0 - t * r * r) ** -beta)


def meanvalue_identity_rhs(beta, r):
    """B(1+beta, 1-beta) 2F1(1+beta, 1+beta; 2; r^2)."""
    beta = as_exponent(beta).require(DomainTag.FRACTIONAL)
    r = _radius(r)
    return beta_function(1.0 + beta, 1.0 - beta) * gauss_2f1(1.0 + beta, 1.0 + beta, 2.0, r * r)
