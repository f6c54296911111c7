"""Random interior points, three evaluators, largest disagreement."""

from riesz_equilibria import cross_validate

for n, beta in [(3, 0.5), (8, 0.9), (6, 1.0), (3, 1.5)]:
    cv = cross_validate(n, beta, samples=100)
    print(f"n={n} beta={beta}: direct-integral {cv.max_direct_integral}, direct-closed {cv.max_direct_closed}")
    for note in cv.notes:
        print(f"    {note}")
