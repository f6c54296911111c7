import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from riesz_equilibria.charges import (
    DomainTag,
    PolarPoint,
    RieszExponent,
    bisector_angles,
    lattice_trig,
    reduce_angle,
    regular_polygon,
    vertex_angles,
)
from riesz_equilibria.errors import DomainError


def test_triangle_vertices_sorted_in_canonical_range():
    assert vertex_angles(3) == pytest.approx((0.0, 2 * math.pi / 3, 4 * math.pi / 3), abs=1e-15)


def test_square_bisectors():
    assert bisector_angles(4) == pytest.approx((math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 4, 7 * math.pi / 4))


@pytest.mark.parametrize("n", [3, 4, 7, 12])
def test_configuration_apothem_and_counts(n):
    cfg = regular_polygon(n)
    assert len(cfg.vertex_angles) == n and len(cfg.bisector_angles) == n
    assert cfg.apothem == pytest.approx(math.cos(math.pi / n))


@pytest.mark.parametrize("bad", [2, 0, -5, 3.5, True])
def test_bad_n_rejected(bad):
    with pytest.raises(DomainError):
        regular_polygon(bad)


def _rounded(value, exact):
    # exact zeros come out of mpmath as ~1e-50 residue
    ref = float(exact)
    return value == ref or (value == 0.0 and abs(ref) < 1e-40)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_lattice_tables_match_mpmath(n):
    cos_full, sin_full, cos_half, sin_half = lattice_trig(n)
    with mpmath.workdps(50):
        for m in range(2 * n):
            ms = m if m <= n else m - 2 * n
            assert _rounded(cos_full[m], mpmath.cos(mpmath.pi * m / n))
            assert _rounded(sin_full[m], mpmath.sin(mpmath.pi * ms / n))
            assert _rounded(sin_half[m], mpmath.sin(mpmath.pi * ms / (2 * n)))
    assert not cos_full.flags.writeable


def test_lattice_exact_special_values():
    assert lattice_trig(3)[0][1] == 0.5
    assert lattice_trig(6)[1][1] == 0.5
    assert lattice_trig(4)[0][2] == 0.0


@given(st.floats(-1e4, 1e4, allow_nan=False))
def test_reduce_angle_range(theta):
    t = reduce_angle(theta)
    assert 0.0 <= t < 2 * math.pi
    assert math.isclose(math.cos(t), math.cos(theta), abs_tol=1e-9)


def test_polar_point_validation():
    assert PolarPoint(0.5, -math.pi / 2).theta == pytest.approx(3 * math.pi / 2)
    for r in (-0.1, 1.0, 2.0, float("nan")):
        with pytest.raises(DomainError):
            PolarPoint(r, 0.0)


@pytest.mark.parametrize("beta,tag", [(0.5, DomainTag.FRACTIONAL), (1.0, DomainTag.UNIT), (2.5, DomainTag.GENERAL)])
def test_exponent_tags(beta, tag):
    e = RieszExponent(beta)
    assert e.domain_tag is tag
    assert e.require(tag) == beta


@pytest.mark.parametrize("bad", [0.0, -1.0, float("inf"), float("nan")])
def test_exponent_rejects_nonpositive(bad):
    with pytest.raises(DomainError):
        RieszExponent(bad)


def test_require_wrong_tag():
    with pytest.raises(DomainError):
        RieszExponent(1.5).require(DomainTag.FRACTIONAL)


def test_vertex_angles_are_roots_of_unity():
    z = np.exp(1j * np.array(vertex_angles(9)))
    assert np.allclose(z ** 9, 1.0)
