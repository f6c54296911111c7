"""Parameter sweeps over n and beta, continuation in beta around beta = 1,
and cross-validation of the three potential evaluators."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .charges import PolarPoint, regular_polygon
from .errors import InconsistencyError
from .potential import closed_form_beta1, potential_direct
from .solver import (
    DEFAULT_OPTIONS,
    EquilibriumPoint,
    apothem_bound,
    bisector_roots,
    bounds,
    certified_below,
    find_bisector_equilibria,
    seeded_root,
)
from .specfun import build_rule, integral_potential


@dataclass(frozen=True)
class SweepRecord:
    n: int
    beta: float
    r_star: float
    roots_per_bisector: int
    r_lower: float
    r_upper: float
    residual: float
    bracket: tuple = field(default=(math.nan, math.nan), compare=False)


@dataclass(frozen=True)
class ContinuationResult:
    beta_lo: float
    beta_hi: float
    step: float
    records: list
    uniform_count: bool
    tracking_mismatch: float = 0.0


def solve_record(n, beta, opts=DEFAULT_OPTIONS):
    """Solve one (n, beta) point and package it as a SweepRecord."""
    cfg = regular_polygon(n)
    pts = find_bisector_equilibria(cfg, beta, opts)
    first = pts[0]
    pair = bounds(n, beta)
    r_upper = pair.r_upper if pair.r_small_beta is None else min(pair.r_upper, pair.r_small_beta)
    if pair.r_small_beta is not None and not certified_below(cfg, beta, first, pair.r_small_beta):
        raise InconsistencyError(f"r*={first.r} not below the small-beta bound {pair.r_small_beta}")
    return SweepRecord(n, float(beta), first.r, len(pts), pair.r_lower, r_upper,
                       max(p.residual for p in pts), first.bracket)


def _solve_args(args):
    return solve_record(*args)


def _run(jobs, workers):
    # Executor.map yields in submission order, so output order follows the grid
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_solve_args, jobs))
    return [_solve_args(j) for j in jobs]


def sweep_n(beta, n_list, opts=DEFAULT_OPTIONS, workers=None):
    """One record per n at fixed beta."""
    n_list = [int(n) for n in n_list]
    return _run([(n, beta, opts) for n in n_list], workers)


def sweep_beta(n, beta_list, opts=DEFAULT_OPTIONS, workers=None):
    """One record per beta at fixed n; beta < 1/2 is checked against the small-beta bound."""
    return _run([(int(n), float(b), opts) for b in beta_list], workers)


def _walk(cfg, betas, r0, opts):
    """Walk a beta grid seeding each solve with the previous root.

    Returns the records reached and the largest distance between the tracked
    root and the nearest fresh-scan root.
    """
    recs, seed, worst = [], r0, 0.0
    for b in betas:
        try:
            roots = bisector_roots(cfg, b, opts)
            tracked = seeded_root(cfg, b, seed, opts)
        except InconsistencyError:
            break
        if not roots or tracked is None:
            break
        worst = max(worst, min(abs(tracked[0] - r) for r, _, _ in roots))
        r, res, br = roots[0]
        pair = bounds(cfg.n, b)
        r_upper = pair.r_upper if pair.r_small_beta is None else min(pair.r_upper, pair.r_small_beta)
        recs.append(SweepRecord(cfg.n, b, r, len(roots), pair.r_lower, r_upper, res, br))
        seed = tracked[0]
    return recs, worst


def continuation_beta1(n, half_width=0.1, step=0.01, opts=DEFAULT_OPTIONS):
    """Follow the bisector root from beta = 1 outward in both directions.

    At every grid value a seeded solve tracks the branch and a fresh full scan
    counts roots, so the birth of a second root is detected. ``beta_lo`` and
    ``beta_hi`` are the extremes of the contiguous single-root stretch around 1.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    k_max = int(round(half_width / step))
    if 1.0 - k_max * step <= 0.0:
        raise ValueError("continuation interval must stay inside beta > 0")
    cfg = regular_polygon(n)
    centre = bisector_roots(cfg, 1.0, opts)
    if not centre:
        raise InconsistencyError(f"no bisector root at beta=1 for n={n}")
    r1 = centre[0][0]
    up, worst_up = _walk(cfg, [1.0 + k * step for k in range(1, k_max + 1)], r1, opts)
    down, worst_down = _walk(cfg, [1.0 - k * step for k in range(1, k_max + 1)], r1, opts)
    pair = bounds(n, 1.0)
    mid = SweepRecord(n, 1.0, r1, len(centre), pair.r_lower, pair.r_upper, centre[0][1], centre[0][2])
    records = list(reversed(down)) + [mid] + up

    def edge(side):
        last = 1.0
        for rec in side:
            if rec.roots_per_bisector != 1:
                break
            last = rec.beta
        return last

    uniform = (len(up) == k_max and len(down) == k_max
               and all(rec.roots_per_bisector == 1 for rec in records))
    return ContinuationResult(edge(down), edge(up), step, records, uniform, max(worst_up, worst_down))


@dataclass(frozen=True)
class CrossValidation:
    n: int
    beta: float
    samples: int
    max_direct_integral: float | None
    max_direct_closed: float | None
    notes: tuple = ()


def cross_validate(n, beta, samples, seed=0, node_count=128, r_max=0.9):
    """Largest disagreement between evaluators over random interior points.

    The integral route is compared only for 0 < beta < 1 and the closed form
    only at beta = 1; skipped comparisons are reported as None with a note.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    rs = rng.uniform(0.0, r_max, samples)
    thetas = rng.uniform(0.0, 2.0 * math.pi, samples)
    cfg = regular_polygon(n)
    pts = [PolarPoint(r, t) for r, t in zip(rs, thetas)]
    direct = [potential_direct(cfg, beta, p) for p in pts]
    notes = []
    d_int = d_closed = None
    if 0.0 < beta < 1.0:
        rule = build_rule(beta, node_count)
        d_int = max(abs(integral_potential(cfg, beta, p, rule) - v) for p, v in zip(pts, direct))
    else:
        notes.append("integral comparison skipped: out of domain (needs 0 < beta < 1)")
    if beta == 1.0:
        d_closed = max(abs(closed_form_beta1(cfg, p) - v) for p, v in zip(pts, direct))
    else:
        notes.append("closed-form comparison skipped: needs beta = 1")
    return CrossValidation(n, float(beta), samples, d_int, d_closed, tuple(notes))


def strictly_below_apothem(rec):
    """Strict r* < cos(pi/n) for a record, certified through its bracket."""
    cfg = regular_polygon(rec.n)
    pt = EquilibriumPoint(rec.r_star, cfg.bisector_angles[0], rec.residual, rec.bracket)
    return certified_below(cfg, rec.beta, pt, apothem_bound(rec.n))


__all__ = [
    "ContinuationResult", "CrossValidation", "SweepRecord", "continuation_beta1", "cross_validate",
    "solve_record", "strictly_below_apothem", "sweep_beta", "sweep_n",
]
