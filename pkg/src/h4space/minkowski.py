"""Special-relativity reference constructions.

The two-hyperboloid construction of a 3-distance and the velocity modulus in
Minkowski space, kept as the comparison baseline for the H4 versions.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .algebra import Event4, Velocity3
from .errors import DomainError


class HyperboloidPair(NamedTuple):
    """Hyperboloids of radius ``s_radius`` centred at (-T,0,0,0) and (T,0,0,0)."""

    t_half: float
    s_radius: float


def mink_intersection_residuals(p: HyperboloidPair, e: Event4) -> tuple[float, float]:
    """Half-sum and half-difference residuals of the two hyperboloid equations."""
    T, S = p
    x0, x1, x2, x3 = e
    return (
        S * S - (T * T + x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3),
        2 * T * x0,
    )


def mink_distance(p: HyperboloidPair):
    T, S = p
    if np.any(np.asarray(S) > np.asarray(T)):
        raise DomainError("mink_distance needs s_radius <= t_half")
    return np.sqrt((T - S) * (T + S))


def mink_distance_euclid(e: Event4):
    _, x1, x2, x3 = e
    return np.sqrt(x1 * x1 + x2 * x2 + x3 * x3)


def mink_velocity_modulus(v: Velocity3):
    v1, v2, v3 = v
    return np.sqrt(v1 * v1 + v2 * v2 + v3 * v3)


def mink_interval_factor(v: Velocity3):
    """``sqrt(1 - v^2)``; NaN-free only for |v| <= 1."""
    return np.sqrt(1.0 - mink_velocity_modulus(v) ** 2)


def mink_interval_from_velocity(dt, v: Velocity3):
    if np.any(np.asarray(dt) <= 0):
        raise DomainError("dt must be > 0")
    v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    if np.any(np.asarray(v2) > 1.0):
        raise DomainError("|v| > 1: outside the light cone")
    return dt * np.sqrt(1.0 - v2)
