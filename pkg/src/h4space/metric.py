"""Interval (metric) functions.

Covers the Berwald-Moor interval in both bases, its three-parameter exponent
generalisation, the cubic H3 form, the pseudo-Euclidean plane, and the
Minkowski interval written both as a quadratic and as an expanded quartic.

Functions returning an :class:`Interval` enforce the real domain; the raw
``interval4_*`` / ``interval2_*`` polynomials return signed values because the
simultaneity solver needs them unclamped.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .algebra import Event4, IsotropicEvent4, to_isotropic
from .errors import DomainError, NegativeForm, NegativeQuarticForm

# Eq. (5) pulled back through xi = A x gives 6 x0^2 - 2 (x1^2 + x2^2 + x3^2):
# no single constant relates it to the Minkowski square. Both coefficients are
# recovered by a least-squares fit in the tests.
PAIRWISE_UNDER_A = (6.0, -2.0)

_INV_SQRT6 = 1.0 / math.sqrt(6.0)
_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class Interval(NamedTuple):
    value: float
    fourth_power: float


class ExponentWeights(NamedTuple):
    r1: float = 0.0
    r2: float = 0.0
    r3: float = 0.0

    def exponents(self) -> tuple[float, float, float, float]:
        r1, r2, r3 = self
        return (
            (1 + r1 + r2 + r3) / 4,
            (1 + r1 - r2 - r3) / 4,
            (1 - r1 + r2 - r3) / 4,
            (1 - r1 - r2 + r3) / 4,
        )


def fourth_root(p):
    """Nonnegative fourth root as ``exp(ln(p)/4)``, exactly 0 at ``p == 0``."""
    p = np.asarray(p, dtype=float)
    positive = p > 0
    out = np.exp(np.log(np.where(positive, p, 1.0)) / 4.0)
    out = np.where(positive, out, 0.0)
    return out[()] if out.ndim == 0 else out


def interval_h4_isotropic(xi: IsotropicEvent4) -> Interval:
    product = xi[0] * xi[1] * xi[2] * xi[3]
    if np.any(np.asarray(product) < 0):
        raise NegativeQuarticForm(
            "xi1*xi2*xi3*xi4 < 0: the event is space-like, S is not real"
        )
    return Interval(fourth_root(product), product)


def interval4_h4_orthonormal(e: Event4):
    """Signed fourth power of the H4 interval in the orthonormal-analog basis."""
    x0, x1, x2, x3 = e
    a, b, c = x1 * x1, x2 * x2, x3 * x3
    return (
        x0**4
        - 2 * x0 * x0 * (a + b + c)
        + 8 * x0 * x1 * x2 * x3
        + a * a + b * b + c * c
        - 2 * a * b - 2 * a * c - 2 * b * c
    )


def interval_general(xi: IsotropicEvent4, w: ExponentWeights = ExponentWeights()) -> Interval:
    arr = np.asarray(xi, dtype=float)
    if np.any(arr <= 0):
        raise DomainError("interval_general needs every isotropic coordinate > 0")
    k = w.exponents()
    log_value = sum(k[i] * np.log(xi[i]) for i in range(4))
    value = np.exp(log_value)
    return Interval(value, value**4)


def interval2_minkowski(e: Event4):
    x0, x1, x2, x3 = e
    return x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3


def interval4_minkowski(e: Event4):
    """Square of the Minkowski interval, expanded term by term.

    Differs from :func:`interval4_h4_orthonormal` only by the ``8 x0 x1 x2 x3``
    term and the sign of the three mixed spatial terms.
    """
    x0, x1, x2, x3 = e
    a, b, c = x1 * x1, x2 * x2, x3 * x3
    return (
        x0**4
        - 2 * x0 * x0 * (a + b + c)
        + a * a + b * b + c * c
        + 2 * a * b + 2 * a * c + 2 * b * c
    )


def interval2_minkowski_isotropiclike(xi: IsotropicEvent4):
    """Sum of the six pairwise products of the coordinates."""
    a, b, c, d = xi
    return a * b + a * c + a * d + b * c + b * d + c * d


def minkowski_null_coordinates(e: Event4) -> IsotropicEvent4:
    """Coordinates along four null vectors of Minkowski space.

    ``xi_i = x0/sqrt(6) + (A (0, x1, x2, x3))_i / sqrt(2)``; with these,
    :func:`interval2_minkowski_isotropiclike` equals :func:`interval2_minkowski`
    (proportionality constant exactly 1).
    """
    s = to_isotropic(Event4(0.0, e[1], e[2], e[3]))
    t = e[0] * _INV_SQRT6
    return IsotropicEvent4(*(t + si * _INV_SQRT2 for si in s))


def interval_h3(xi1, xi2, xi3):
    product = xi1 * xi2 * xi3
    if np.any(np.asarray(product) < 0):
        raise NegativeForm("xi1*xi2*xi3 < 0: the H3 interval is not real")
    return np.cbrt(product)


def interval2_plane(xi1, xi2):
    return xi1 * xi2
