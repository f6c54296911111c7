"""Evaluate the polygon potential three ways and watch them agree.

Direct summation works for any beta. The one-dimensional integral route needs
0 < beta < 1, and the closed form needs beta = 1.
"""

import math

from riesz_equilibria import (
    build_rule,
    closed_form_beta1,
    integral_potential,
    potential_direct,
    regular_polygon,
)

square = regular_polygon(4)
point = (0.5, math.pi / 4)

print("square, beta = 1/2, r = 1/2 on a side bisector")
rule = build_rule(0.5, 128)
print(f"  direct   {potential_direct(square, 0.5, point)!r}")
print(f"  integral {integral_potential(square, 0.5, point, rule)!r}")

triangle = regular_polygon(3)
point = (0.5, math.pi / 3)
print("triangle, beta = 1, r = 1/2 on a side bisector (exact value 28/9)")
print(f"  direct   {potential_direct(triangle, 1.0, point)!r}")
print(f"  closed   {closed_form_beta1(triangle, point)!r}")
