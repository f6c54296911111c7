"""Enumerate the equilibrium points for a few polygons.

Every non-trivial equilibrium sits on a side bisector, so one radial root is
replicated onto all n bisector rays. The origin is always a minimum.
"""

from riesz_equilibria import enumerate_equilibria

for n, beta in [(3, 0.5), (4, 0.5), (7, 1.0), (6, 3.0)]:
    eq = enumerate_equilibria(n, beta)
    ring = eq.points[1]
    print(f"n={n} beta={beta}: {eq.count} equilibria (Maxwell bound {eq.maxwell_bound})")
    print(f"  origin: {eq.points[0].classification.value}")
    print(f"  ring radius {ring.r:.15f}, type {ring.classification.value}, "
          f"Hessian eigenvalues {ring.hessian_eigs[0]:.4g}, {ring.hessian_eigs[1]:.4g}")
