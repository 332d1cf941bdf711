"""Event types and the fixed basis change between isotropic and orthonormal-analog bases.

The isotropic coordinates are ``xi = A x`` with the integer matrix

    A = [[1,  1,  1,  1],
         [1,  1, -1, -1],
         [1, -1,  1, -1],
         [1, -1, -1,  1]]

which satisfies ``A @ A == 4 I``, so the inverse is ``A / 4``. The conversions are
written out component by component, so every field may be a float or a numpy
array (all of equal shape) and the result is bit-reproducible.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

BASIS_MATRIX = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))

CONE_TOLERANCE = 1e-12


class Event4(NamedTuple):
    """Space-time point in the orthonormal-analog basis (c = 1)."""

    x0: float
    x1: float
    x2: float
    x3: float


class IsotropicEvent4(NamedTuple):
    """Space-time point in the isotropic basis."""

    xi1: float
    xi2: float
    xi3: float
    xi4: float


class Velocity3(NamedTuple):
    """Three-velocity in units of c; the time component is implicitly 1."""

    v1: float
    v2: float
    v3: float

    def cone_factors(self) -> IsotropicEvent4:
        """Isotropic image of the world-line direction (1, v1, v2, v3)."""
        return to_isotropic(Event4(1.0, self.v1, self.v2, self.v3))

    def is_subluminal(self) -> bool:
        return bool(np.all(np.asarray(self.cone_factors()) > 0.0))


class Cone(str, enum.Enum):
    INSIDE_FUTURE = "inside_future"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


def basis_matrix() -> np.ndarray:
    """Return a fresh integer copy of ``A``."""
    return np.array(BASIS_MATRIX, dtype=np.int64)


def to_isotropic(e: Event4) -> IsotropicEvent4:
    x0, x1, x2, x3 = e
    return IsotropicEvent4(
        x0 + x1 + x2 + x3,
        x0 + x1 - x2 - x3,
        x0 - x1 + x2 - x3,
        x0 - x1 - x2 + x3,
    )


def from_isotropic(xi: IsotropicEvent4) -> Event4:
    a, b, c, d = xi
    return Event4(
        (a + b + c + d) / 4.0,
        (a + b - c - d) / 4.0,
        (a - b + c - d) / 4.0,
        (a - b - c + d) / 4.0,
    )


def cone_classify(xi: IsotropicEvent4, tolerance: float = CONE_TOLERANCE) -> Cone:
    """Classify a (scalar) isotropic vector against the flat-sided future cone.

    The boundary band is ``tolerance * max|xi_i|`` wide around zero.
    """
    values = [float(c) for c in xi]
    band = tolerance * max(abs(c) for c in values)
    lowest = min(values)
    if abs(lowest) <= band:
        return Cone.ON_BOUNDARY
    if lowest > band:
        return Cone.INSIDE_FUTURE
    return Cone.OUTSIDE
