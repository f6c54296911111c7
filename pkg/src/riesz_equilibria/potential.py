"""Direct finite-sum evaluation of the polygon Riesz potential.

``U(r, theta) = sum_j (1 + r^2 - 2 r cos(2 pi j / n - theta))^(-beta)``

Every sum is accumulated with ``math.fsum`` (exactly rounded), so results
do not depend on term order and symmetric terms cancel exactly. Squared
distances are formed as ``(1 - r)^2 + 4 r sin^2(delta / 2)``, which stays
accurate next to a charge.
"""

from __future__ import annotations

import math

import numpy as np

from .charges import ChargeConfiguration, PolarPoint, as_exponent, lattice_trig, regular_polygon
from .errors import DomainError

_SNAP = 8.0 * np.finfo(float).eps


def _config(cfg):
    return cfg if isinstance(cfg, ChargeConfiguration) else regular_polygon(cfg)


def _point(p):
    if isinstance(p, PolarPoint):
        return p
    r, theta = p
    return PolarPoint(r, theta)


def _radius(r):
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"radius must lie in [0, 1), got r={r!r}")
    return r


def _lattice_split(n, theta):
    """Write ``theta = pi/n * (qi + qf)`` with integer ``qi`` and ``|qf| <= 1/2``.

    Angles within a few ulps of the lattice ``pi*k/n`` are snapped onto it.
    """
    q = theta * n / math.pi
    qi = round(q)
    qf = q - qi
    if abs(qf) <= _SNAP * max(1.0, abs(q)):
        qf = 0.0
    return qi, qf


def _angle_terms(n, theta):
    """cos, sin and sin(./2) of ``delta_j = 2 pi j / n - theta`` for j = 1..n."""
    cos_full, sin_full, cos_half, sin_half = lattice_trig(n)
    qi, qf = _lattice_split(n, theta)
    m = (2 * np.arange(1, n + 1) - qi) % (2 * n)
    c, s, sh = cos_full[m], sin_full[m], sin_half[m]
    if qf != 0.0:
        b = math.pi * qf / n
        cb, sb = math.cos(b), math.sin(b)
        ch2, sh2 = math.cos(b / 2), math.sin(b / 2)
        c, s, sh = c * cb + s * sb, s * cb - c * sb, sh * ch2 - cos_half[m] * sh2
    return c, s, sh


def _bisector_terms(n):
    cos_full, _, _, sin_half = lattice_trig(n)
    m = np.arange(1, 2 * n, 2)
    return cos_full[m], sin_half[m]


def _sq_dist(r, sh):
    return (1.0 - r) ** 2 + 4.0 * r * sh * sh


def potential_direct(cfg, beta, p):
    """U_beta(r, theta) by direct summation over the n charges."""
    cfg, beta, p = _config(cfg), as_exponent(beta).beta, _point(p)
    _, _, sh = _angle_terms(cfg.n, p.theta)
    return math.fsum(_sq_dist(p.r, sh) ** -beta)


def potential_gradient(cfg, beta, p):
    """Analytic partials ``(dU/dr, dU/dtheta)``."""
    cfg, beta, p = _config(cfg), as_exponent(beta).beta, _point(p)
    if p.r == 0.0:
        # sum_j cos(delta_j) = sum_j sin(delta_j) = 0 for n >= 2
        return 0.0, 0.0
    r = p.r
    c, s, sh = _angle_terms(cfg.n, p.theta)
    P = _sq_dist(r, sh) ** (-beta - 1.0)
    d_r = math.fsum(-2.0 * beta * (r - c) * P)
    d_theta = math.fsum(2.0 * beta * r * s * P)
    return d_r, d_theta


def potential_hessian(cfg, beta, p):
    """Second partials in (r, theta) as a symmetric 2x2 array."""
    cfg, beta, p = _config(cfg), as_exponent(beta).beta, _point(p)
    r = p.r
    c, s, sh = _angle_terms(cfg.n, p.theta)
    D = _sq_dist(r, sh)
    P = D ** (-beta - 1.0)
    Q = D ** (-beta - 2.0)
    D_r = 2.0 * (r - c)
    D_t = -2.0 * r * s
    k = beta * (beta + 1.0)
    h_rr = math.fsum(np.concatenate([k * Q * D_r * D_r, -2.0 * beta * P]))
    h_rt = math.fsum(np.concatenate([k * Q * D_r * D_t, 2.0 * beta * s * P]))
    h_tt = math.fsum(np.concatenate([k * Q * D_t * D_t, -2.0 * beta * r * c * P]))
    return np.array([[h_rr, h_rt], [h_rt, h_tt]])


def bisector_potential(cfg, beta, r):
    """u_beta(r) = U_beta(r, pi/n), the potential along a side bisector."""
    cfg, beta, r = _config(cfg), as_exponent(beta).beta, _radius(r)
    _, sh = _bisector_terms(cfg.n)
    return math.fsum(_sq_dist(r, sh) ** -beta)


def bisector_derivative(cfg, beta, r):
    cfg, beta, r = _config(cfg), as_exponent(beta).beta, _radius(r)
    if r == 0.0:
        return 0.0
    c, sh = _bisector_terms(cfg.n)
    return math.fsum(-2.0 * beta * (r - c) * _sq_dist(r, sh) ** (-beta - 1.0))


def bisector_derivative_terms(cfg, beta, r):
    """The individual summands of u'_beta(r); their absolute sum sets the rounding scale."""
    cfg, beta, r = _config(cfg), as_exponent(beta).beta, _radius(r)
    c, sh = _bisector_terms(cfg.n)
    return -2.0 * beta * (r - c) * _sq_dist(r, sh) ** (-beta - 1.0)


def bisector_second_derivative(cfg, beta, r):
    cfg, beta, r = _config(cfg), as_exponent(beta).beta, _radius(r)
    if r == 0.0:
        # sum_j cos^2(theta_j) = n/2 for n >= 3
        return 2.0 * beta * beta * cfg.n
    c, sh = _bisector_terms(cfg.n)
    D = _sq_dist(r, sh)
    terms = np.concatenate([
        -2.0 * beta * D ** (-beta - 1.0),
        4.0 * beta * (beta + 1.0) * (r - c) ** 2 * D ** (-beta - 2.0),
    ])
    return math.fsum(terms)


def closed_form_beta1(cfg, p):
    """U_1(r, theta) in closed form (beta = 1 only)."""
    cfg, p = _config(cfg), _point(p)
    n, r = cfg.n, p.r
    x = r ** n
    # sin^2(n*theta/2) through the lattice split keeps cos(n*theta) exact on symmetry rays
    qi, qf = _lattice_split(n, p.theta)
    half = math.pi * qf / 2.0
    s2 = math.sin(half) ** 2 if qi % 2 == 0 else math.cos(half) ** 2
    den = (1.0 - x) ** 2 + 4.0 * x * s2
    return n * (1.0 - x) * (1.0 + x) / ((1.0 - r) * (1.0 + r) * den)


def v_closed_form(cfg, r):
    """v(r) = U_1(r, pi/n)."""
    cfg, r = _config(cfg), _radius(r)
    n = cfg.n
    x = r ** n
    return n * (1.0 - x) / ((1.0 - r) * (1.0 + r) * (1.0 + x))


def v_derivative(cfg, r):
    cfg, r = _config(cfg), _radius(r)
    n = cfg.n
    p = -(r ** (2 * n)) + n * r ** n - n * r ** (n - 2) + 1.0
    return 2.0 * n * r * p / (((1.0 - r) * (1.0 + r)) ** 2 * (1.0 + r ** n) ** 2)


def vertex_ray_potential(cfg, beta, r):
    """U_beta(r, 0), the potential along the ray through a charge."""
    return potential_direct(cfg, beta, PolarPoint(r, 0.0))


def vertex_ray_derivative(cfg, beta, r):
    return potential_gradient(cfg, beta, PolarPoint(r, 0.0))[0]
