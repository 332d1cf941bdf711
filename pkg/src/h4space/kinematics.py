"""Three-velocity, the W form and the H4 velocity modulus.

A displacement ``dt * (1, v1, v2, v3)`` has H4 interval ``dt * W**(1/4)`` where
W is the product of its four isotropic components. Writing that interval as
``dt * sqrt(1 - v**2)``, the same function of the modulus as in special
relativity, defines the modulus ``v = sqrt(1 - sqrt(W))``.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .algebra import Event4, IsotropicEvent4, Velocity3
from .errors import DegenerateError, DomainError, SuperluminalError
from .metric import fourth_root

BOUNDARY_TOLERANCE = 1e-12


class WForm(NamedTuple):
    factors: IsotropicEvent4
    w: float


def w_form(v: Velocity3) -> WForm:
    f = Velocity3(*v).cone_factors()
    return WForm(f, f[0] * f[1] * f[2] * f[3])


def _one_minus_w(v: Velocity3):
    # 1 - W expanded, so that small velocities keep full relative precision
    v1, v2, v3 = v
    a, b, c = v1 * v1, v2 * v2, v3 * v3
    return 2 * (a + b + c) - 8 * v1 * v2 * v3 - (a * a + b * b + c * c - 2 * (a * b + a * c + b * c))


def _on_axis(v: Velocity3):
    v1, v2, v3 = (np.asarray(c) for c in v)
    nonzero = (v1 != 0).astype(int) + (v2 != 0).astype(int) + (v3 != 0).astype(int)
    return nonzero <= 1, np.abs(v1) + np.abs(v2) + np.abs(v3)


def velocity_modulus_h4(v: Velocity3, tolerance: float = BOUNDARY_TOLERANCE):
    """H4 modulus of a three-velocity, in [0, 1) inside the cone and 1 on it.

    Velocities along one coordinate axis return ``|v_i|`` exactly.

    Raises:
        SuperluminalError: some cone factor is below ``-tolerance``.
    """
    form = w_form(v)
    lowest = np.min(np.asarray(form.factors, dtype=float), axis=0)
    if np.any(lowest < -tolerance):
        raise SuperluminalError(
            "velocity lies outside the future cone (a factor 1 +- v1 +- v2 +- v3 is negative)"
        )
    boundary = lowest <= tolerance
    w = np.where(boundary, 1.0, form.w)
    one_minus_w = np.where(boundary, 0.0, _one_minus_w(v))
    modulus = np.sqrt(np.maximum(one_minus_w, 0.0) / (1.0 + np.sqrt(w)))
    axis, axis_value = _on_axis(v)
    modulus = np.where(axis, axis_value, modulus)
    modulus = np.where(boundary, 1.0, modulus)
    return modulus[()] if modulus.ndim == 0 else modulus


def interval_from_velocity_h4(dt, v: Velocity3):
    if np.any(np.asarray(dt) <= 0):
        raise DomainError("dt must be > 0")
    w = w_form(v).w
    if np.any(np.asarray(w) < 0):
        raise DomainError("W < 0: the displacement is space-like")
    return dt * fourth_root(w)


def velocity_from_events(e1: Event4, e2: Event4) -> Velocity3:
    dt = e2[0] - e1[0]
    if np.any(np.asarray(dt) == 0):
        raise DegenerateError("events have equal time components")
    if np.any(np.asarray(dt) < 0):
        raise DomainError("second event must be later than the first")
    return Velocity3((e2[1] - e1[1]) / dt, (e2[2] - e1[2]) / dt, (e2[3] - e1[3]) / dt)


def velocity_modulus_nonrel(v: Velocity3):
    v1, v2, v3 = v
    return np.sqrt(v1 * v1 + v2 * v2 + v3 * v3)
