"""The three-parameter Abelian symmetry group of H4 and velocity composition.

A group element is stored by its exponents ``eps`` (summing to zero): it acts
diagonally in the isotropic basis, ``xi_i -> exp(eps_i) xi_i``, i.e. as
``x -> (1/4) A diag(exp(eps)) A x`` in the orthonormal-analog basis.

Direction conventions
---------------------
=================================  ==========================================
``group_from_velocity(V)``         carries a body at rest to velocity V
``apply_group(g, x)``              new coordinates from old, ``x' = M(g) x``
``boost_matrix(V)``                old coordinates from new for the frame
                                   moving with V (equals ``M(group_from_velocity(V))``)
``inverse_group_from_velocity(V)`` new coordinates from old for that frame;
                                   the exact inverse of the above
=================================  ==========================================

Negating V does not give the inverse transition unless V lies on a coordinate
axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import Event4, IsotropicEvent4, Velocity3, basis_matrix, from_isotropic, to_isotropic
from .errors import DegenerateError, DomainError, SuperluminalError
from .kinematics import velocity_modulus_h4, w_form
from .metric import fourth_root

SUM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class GroupElement:
    eps: tuple

    def __post_init__(self):
        eps = tuple(self.eps)
        if len(eps) != 4:
            raise DomainError("a group element has exactly four exponents")
        scale = np.maximum(1.0, np.max(np.abs(np.asarray(eps, dtype=float)), axis=0))
        if np.any(np.abs(eps[0] + eps[1] + eps[2] + eps[3]) > SUM_TOLERANCE * scale):
            raise DomainError("group exponents must sum to zero")
        object.__setattr__(self, "eps", eps)

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls((0.0, 0.0, 0.0, 0.0))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        """Composition (the group is Abelian, so order does not matter)."""
        return GroupElement(tuple(a + b for a, b in zip(self.eps, other.eps)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.eps))

    def matrix(self) -> np.ndarray:
        A = basis_matrix()
        return A @ np.diag(np.exp(np.asarray(self.eps, dtype=float))) @ A / 4.0


@dataclass(frozen=True)
class FrameVelocity:
    """Velocity of a frame, validated to be strictly inside the cone."""

    V1: float
    V2: float
    V3: float
    modulus: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        factors = np.asarray(self.velocity.cone_factors(), dtype=float)
        if np.any(factors <= 0):
            raise SuperluminalError("frame velocity must be strictly inside the future cone")
        object.__setattr__(self, "modulus", velocity_modulus_h4(self.velocity))

    @property
    def velocity(self) -> Velocity3:
        return Velocity3(self.V1, self.V2, self.V3)


def _frame(V) -> FrameVelocity:
    return V if isinstance(V, FrameVelocity) else FrameVelocity(*V)


def _contraction(V: FrameVelocity):
    # sqrt(1 - V**2) == W(V)**(1/4)
    return fourth_root(w_form(V.velocity).w)


def group_from_velocity(V: FrameVelocity) -> GroupElement:
    """Element with ``exp(eps_i) = (A (1, V))_i / sqrt(1 - V**2)``.

    ``sqrt(1 - V**2)`` is the fourth root of the product of the four factors, so
    the exponents are the logs of the factors minus their mean.
    """
    V = _frame(V)
    logs = [np.log(f) for f in V.velocity.cone_factors()]
    mean = (logs[0] + logs[1] + logs[2] + logs[3]) / 4.0
    return GroupElement(tuple(lf - mean for lf in logs))


def inverse_group_from_velocity(V: FrameVelocity) -> GroupElement:
    return -group_from_velocity(V)


def apply_group(g: GroupElement, e: Event4) -> Event4:
    xi = to_isotropic(Event4(*e))
    return from_isotropic(IsotropicEvent4(*(np.exp(k) * c for k, c in zip(g.eps, xi))))


def _dot(v: Velocity3, V: FrameVelocity):
    return 1.0 + v[0] * V.V1 + v[1] * V.V2 + v[2] * V.V3


def _denominator(v: Velocity3, V: FrameVelocity):
    den = _dot(v, V)
    if np.any(np.asarray(den) <= 0):
        raise DegenerateError("1 + v.V <= 0: the pair is outside the mutual subluminal domain")
    return den


def add_velocities(v: Velocity3, V: FrameVelocity) -> Velocity3:
    """Velocity, after the transformation parametrised by V, of a body moving with v."""
    V = _frame(V)
    v1, v2, v3 = v
    den = _denominator(v, V)
    return Velocity3(
        (v1 + V.V1 + v2 * V.V3 + v3 * V.V2) / den,
        (v2 + V.V2 + v1 * V.V3 + v3 * V.V1) / den,
        (v3 + V.V3 + v1 * V.V2 + v2 * V.V1) / den,
    )


def modulus_after_boost(v: Velocity3, V: FrameVelocity):
    """Modulus of the composed velocity from the two moduli and ``v.V``."""
    V = _frame(V)
    den = _denominator(v, V)
    if not Velocity3(*v).is_subluminal():
        raise SuperluminalError("v must be strictly inside the future cone")
    vm = velocity_modulus_h4(v)
    ratio = (1.0 - vm * vm) * (1.0 - V.modulus * V.modulus) / (den * den)
    return np.sqrt(np.maximum(1.0 - ratio, 0.0))


def time_dilation_factor(v: Velocity3, V: FrameVelocity):
    """Ratio of transformed to original time separation along a world line with velocity v."""
    V = _frame(V)
    return _denominator(v, V) / _contraction(V)


def boost_matrix(V: FrameVelocity) -> np.ndarray:
    """Matrix expressing old coordinates through those of the frame moving with V."""
    V = _frame(V)
    A = basis_matrix()
    factors = np.asarray(V.velocity.cone_factors(), dtype=float)
    return A @ np.diag(factors) @ A / (4.0 * _contraction(V))


def lorentz_boost_sr(V1: float) -> np.ndarray:
    """Special-relativity boost along x1 in the same direction convention as :func:`boost_matrix`."""
    if not abs(V1) < 1:
        raise DomainError("|V1| must be < 1")
    gamma = 1.0 / np.sqrt((1.0 - V1) * (1.0 + V1))
    m = np.eye(4)
    m[0, 0] = m[1, 1] = gamma
    m[0, 1] = m[1, 0] = gamma * V1
    return m
