"""Regular-polygon charge configurations and their symmetry data.

Charges are unit strength and sit at the n-th roots of unity on the unit
circle. All angles are radians in the canonical range [0, 2*pi).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
import numpy as np

from .errors import DomainError

TWO_PI = 2.0 * math.pi


def _check_n(n):
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"number of charges must be an integer, got {n!r}")
    if n < 3:
        raise DomainError(f"need at least 3 charges, got n={n}")
    return int(n)


def reduce_angle(theta):
    """Reduce an angle into [0, 2*pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    # fmod of a tiny negative can round up to exactly 2*pi
    if t >= TWO_PI:
        t = 0.0
    return t


@lru_cache(maxsize=256)
def lattice_trig(n):
    """Correctly rounded trig tables on the angle lattice pi*m/n.

    Returns ``(cos_full, sin_full, cos_half, sin_half)``, each of length 2n and
    indexed by ``m = 0..2n-1``. The full tables hold cos/sin of ``pi*m/n``; the
    half tables hold cos/sin of ``pi*m'/(2n)`` where ``m'`` is ``m`` shifted into
    ``(-n, n]``, so the half angle lies in ``(-pi/2, pi/2]``.

    Correct rounding makes the tables exactly symmetric (``sin`` odd, ``cos``
    even, ``cos(pi/3) == 0.5``), which the direct sums rely on for exact
    cancellation on symmetry rays.
    """
    n = _check_n(n)
    cos_full = np.empty(2 * n)
    sin_full = np.empty(2 * n)
    cos_half = np.empty(2 * n)
    sin_half = np.empty(2 * n)
    with mpmath.workprec(120):
        for m in range(2 * n):
            ms = m if m <= n else m - 2 * n
            x = mpmath.mpf(ms) / n
            cos_full[m] = float(mpmath.cospi(x))
            sin_full[m] = float(mpmath.sinpi(x))
            cos_half[m] = float(mpmath.cospi(x / 2))
            sin_half[m] = float(mpmath.sinpi(x / 2))
    for arr in (cos_full, sin_full, cos_half, sin_half):
        arr.setflags(write=False)
    return cos_full, sin_full, cos_half, sin_half


def vertex_angles(n):
    n = _check_n(n)
    return tuple(sorted(reduce_angle(TWO_PI * j / n) for j in range(1, n + 1)))


def bisector_angles(n):
    """Angles pi*k/n, k odd in 1..2n-1, of the rays through the side midpoints."""
    n = _check_n(n)
    return tuple(math.pi * k / n for k in range(1, 2 * n, 2))


@dataclass(frozen=True)
class ChargeConfiguration:
    """n unit charges at the vertices of a regular n-gon inscribed in the unit circle."""

    n: int
    vertex_angles: tuple = field(repr=False)
    bisector_angles: tuple = field(repr=False)

    def __post_init__(self):
        _check_n(self.n)
        if len(self.vertex_angles) != self.n or len(self.bisector_angles) != self.n:
            raise DomainError("angle lists must have exactly n entries")

    @property
    def apothem(self):
        return math.cos(math.pi / self.n)


def regular_polygon(n):
    n = _check_n(n)
    return ChargeConfiguration(n, vertex_angles(n), bisector_angles(n))


@dataclass(frozen=True)
class PolarPoint:
    """A point ``r * exp(i*theta)`` of the open unit disk."""

    r: float
    theta: float = 0.0

    def __post_init__(self):
        r = float(self.r)
        if not (0.0 <= r < 1.0):
            raise DomainError(f"radius must lie in [0, 1), got r={self.r!r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", reduce_angle(float(self.theta)))


class DomainTag(str, enum.Enum):
    FRACTIONAL = "fractional"
    UNIT = "unit"
    GENERAL = "general"


@dataclass(frozen=True)
class RieszExponent:
    """The Riesz parameter beta > 0 with its validity tag.

    The integral representation needs a ``fractional`` exponent (0 < beta < 1);
    the closed forms need ``unit`` (beta == 1); direct sums accept any tag.
    """

    beta: float

    def __post_init__(self):
        b = float(self.beta)
        if not (b > 0.0) or math.isinf(b):
            raise DomainError(f"Riesz parameter must be a finite positive number, got {self.beta!r}")
        object.__setattr__(self, "beta", b)

    @property
    def domain_tag(self):
        if self.beta == 1.0:
            return DomainTag.UNIT
        if self.beta < 1.0:
            return DomainTag.FRACTIONAL
        return DomainTag.GENERAL

    def require(self, tag):
        if self.domain_tag is not tag:
            raise DomainError(f"beta={self.beta} is {self.domain_tag.value}; operation needs {tag.value}")
        return self.beta


def as_exponent(beta):
    return beta if isinstance(beta, RieszExponent) else RieszExponent(beta)
