"""At beta = 1 the bisector derivative factors through a polynomial p_n.

Its single root in (0, 1) is the equilibrium radius, and r = 1 is a double
root with p_n''(1) = -4n.
"""

from riesz_equilibria import bisector_derivative, enumerate_equilibria, pn_roots_in_unit_interval
from riesz_equilibria.solver import pn_eval

for n in range(3, 11):
    (root,) = pn_roots_in_unit_interval(n)
    eq = enumerate_equilibria(n, 1.0)
    print(f"n={n:2d} p_n root {root:.15f}  u' there {bisector_derivative(n, 1.0, root):+.1e}  "
          f"count {eq.count}  p_n''(1) = {pn_eval(n, 1.0, 2):g}")
