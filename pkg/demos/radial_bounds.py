"""Where the equilibrium ring sits relative to its analytic bounds.

The lower bound (beta/(beta+n))^(1/(n-2)) holds for beta <= 1. At larger beta
it can overshoot the apothem, which the last column shows.
"""

from riesz_equilibria import sweep_beta, sweep_n

print("beta = 1/2, growing n (ring approaches the unit circle)")
for rec in sweep_n(0.5, [3, 4, 8, 16, 32, 64]):
    print(f"  n={rec.n:3d}  {rec.r_lower:.6f} < r*={rec.r_star:.6f} < {rec.r_upper:.6f}")

print("n = 3, shrinking and growing beta")
for rec in sweep_beta(3, [0.01, 0.05, 0.1, 0.3, 1, 2, 5, 20, 100]):
    ok = rec.r_lower < rec.r_star
    print(f"  beta={rec.beta:6g}  r*={rec.r_star:.12f}  upper={rec.r_upper:.6f}  lower bound holds: {ok}")
