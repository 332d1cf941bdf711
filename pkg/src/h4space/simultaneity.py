"""Relative-simultaneity surfaces and the H4 three-dimensional distance.

An observer on the x0 axis intersects two equal-radius H4 "spheres" centred at
(-T,0,0,0) and (T,0,0,0). Half the difference of the two quartic equations is
the cubic

    x0**3 + (T**2 - r**2) * x0 + 2 * x1 * x2 * x3 = 0,

whose real root places the offset (x1, x2, x3) on the simultaneity surface; half
the sum gives S**4 there, and the distance is ``l = sqrt(T**2 - sqrt(S**4))``.

Inside the open ball r < T the cubic coefficient p = T**2 - r**2 is positive,
so the discriminant is negative and the real root is unique. Outside that ball
the functions raise instead of picking one of three roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import Event4, to_isotropic
from .errors import ConfigError, OutsideCausalRegion, OutsideDomain
from .metric import interval4_h4_orthonormal
from .minkowski import HyperboloidPair, mink_distance, mink_intersection_residuals

RESIDUAL_TOLERANCE = 1e-12
CAUSAL_TOLERANCE = 1e-12
MAX_GRID_NODES = 10**6

STATUS_OK = "ok"
STATUS_OUTSIDE_DOMAIN = "outside_domain"
STATUS_OUTSIDE_CAUSAL = "outside_causal_region"
STATUS_RESIDUAL = "residual_exceeded"


class ObserverScale(NamedTuple):
    """Half the interval ``T`` between the two hyperboloid centres."""

    t_half: float


class SpatialOffset(NamedTuple):
    """Offset of a parallel world line from the observer's world line."""

    x1: float
    x2: float
    x3: float

    def __neg__(self) -> "SpatialOffset":
        return SpatialOffset(-self.x1, -self.x2, -self.x3)


class AxisRange(NamedTuple):
    min: float
    max: float
    count: int

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)


class GridSpec(NamedTuple):
    x1: AxisRange
    x2: AxisRange
    x3: AxisRange

    @property
    def size(self) -> int:
        return self.x1.count * self.x2.count * self.x3.count

    def validate(self, max_nodes: int = MAX_GRID_NODES) -> None:
        for name, axis in zip(("x1", "x2", "x3"), self):
            if int(axis.count) != axis.count or axis.count < 1:
                raise ConfigError(f"{name}: count must be an integer >= 1, got {axis.count}")
            if not (np.isfinite(axis.min) and np.isfinite(axis.max)):
                raise ConfigError(f"{name}: range bounds must be finite")
            if axis.min > axis.max:
                raise ConfigError(f"{name}: inverted range min={axis.min} > max={axis.max}")
        if self.size > max_nodes:
            raise ConfigError(f"grid has {self.size} nodes, cap is {max_nodes}")

    def nodes(self) -> SpatialOffset:
        """All nodes as flat arrays, x3 varying fastest."""
        g1, g2, g3 = np.meshgrid(self.x1.values(), self.x2.values(), self.x3.values(), indexing="ij")
        return SpatialOffset(g1.ravel(), g2.ravel(), g3.ravel())


@dataclass(frozen=True)
class SurfaceSample:
    offset: SpatialOffset
    x0: float
    s4: float
    l: float
    status: str = STATUS_OK

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


def solve_depressed_cubic(p, q):
    """Real root of ``x**3 + p*x + q = 0`` for ``p > 0`` (elementwise).

    Cardano's form with ``u*v = -p/3``, ``u**3 + v**3 = -q``. The cube-root
    argument takes the sign of -q so it never cancels, and the root is
    evaluated as ``-q / (u**2 + p/3 + v**2)``, a sum of positive terms. One
    Newton step follows. ``q == 0`` returns exactly +0.0.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    s = np.sqrt(0.25 * q * q + p * p * p / 27.0)
    u = np.cbrt(-0.5 * q - np.copysign(s, q))
    v = -p / (3.0 * u)
    x = -q / (u * u + p / 3.0 + v * v)
    x = x - (x * x * x + p * x + q) / (3.0 * x * x + p)
    x = x + 0.0
    return x[()] if x.ndim == 0 else x


def cubic_discriminant(p, q):
    """``-4 p**3 - 27 q**2``; negative means exactly one real root."""
    return -4.0 * p * p * p - 27.0 * q * q


def _cubic_coefficients(T, d: SpatialOffset):
    x1, x2, x3 = d
    r2 = x1 * x1 + x2 * x2 + x3 * x3
    return T * T - r2, 2.0 * x1 * x2 * x3


def simultaneity_residual(scale: ObserverScale, d: SpatialOffset, x0):
    p, q = _cubic_coefficients(scale.t_half, d)
    return x0 * x0 * x0 + p * x0 + q


def _check_scale(scale: ObserverScale) -> None:
    if not np.all(np.asarray(scale.t_half) > 0):
        raise OutsideDomain("T must be > 0")


def simultaneity_x0(scale: ObserverScale, d: SpatialOffset):
    """Time coordinate of the offset's point on the H4 simultaneity surface."""
    _check_scale(scale)
    p, q = _cubic_coefficients(scale.t_half, d)
    if np.any(np.asarray(p) <= 0):
        raise OutsideDomain("x1^2 + x2^2 + x3^2 must be < T^2 for a unique real root")
    return solve_depressed_cubic(p, q)


def s4_on_surface(scale: ObserverScale, d: SpatialOffset, x0):
    """Half-sum of the two hyperboloid quartics (the S**4 of the surface point)."""
    T = scale.t_half
    x1, x2, x3 = d
    a, b, c = x1 * x1, x2 * x2, x3 * x3
    r2 = a + b + c
    return (
        x0**4
        + 2 * x0 * x0 * (3 * T * T - r2)
        + 8 * x0 * x1 * x2 * x3
        + T**4
        - 2 * T * T * r2
        + a * a + b * b + c * c
        - 2 * (a * b + a * c + b * c)
    )


def hyperboloid_quartics(scale: ObserverScale, d: SpatialOffset, x0):
    """The two quartics whose half-sum/difference give the surface equations."""
    T = scale.t_half
    x1, x2, x3 = d
    return (
        interval4_h4_orthonormal(Event4(T + x0, x1, x2, x3)),
        interval4_h4_orthonormal(Event4(T - x0, -x1, -x2, -x3)),
    )


def _s4_factored(T, d: SpatialOffset, x0):
    # identical polynomial to s4_on_surface for every x0, evaluated as products of
    # isotropic components; much better conditioned near |d| -> T
    x1, x2, x3 = d
    a = to_isotropic(Event4(T + x0, x1, x2, x3))
    b = to_isotropic(Event4(T - x0, -x1, -x2, -x3))
    return 0.5 * (a[0] * a[1] * a[2] * a[3] + b[0] * b[1] * b[2] * b[3])


def _surface_gap(T, d: SpatialOffset, x0):
    # T**4 - S**4 with the T**4 term cancelled symbolically; keeps l accurate for small offsets
    x1, x2, x3 = d
    a, b, c = x1 * x1, x2 * x2, x3 * x3
    r2 = a + b + c
    return (
        2 * T * T * r2
        - x0**4
        - 2 * x0 * x0 * (3 * T * T - r2)
        - 8 * x0 * x1 * x2 * x3
        - (a * a + b * b + c * c - 2 * (a * b + a * c + b * c))
    )


def _distance_from_surface(T, d, x0):
    """Distance and out-of-region mask; S^4 within ``band`` of 0 or T^4 is put on that bound."""
    s4 = _s4_factored(T, d, x0)
    gap = _surface_gap(T, d, x0)
    band = CAUSAL_TOLERANCE * T**4
    bad = (np.asarray(s4) < -band) | (np.asarray(gap) < -band)
    s4 = np.where(bad, 0.0, np.maximum(s4, 0.0))
    gap = np.where(bad, 0.0, np.maximum(gap, 0.0))
    l = np.sqrt(gap / (T * T + np.sqrt(s4)))
    return l, s4, bad


def distance_h4(scale: ObserverScale, d: SpatialOffset):
    """Three-dimensional H4 distance from the x0 axis to the parallel world line at ``d``."""
    return surface_point(scale, d)[2]


def surface_point(scale: ObserverScale, d: SpatialOffset):
    """``(x0, S4, l)`` for an offset; S4 is the value the distance is computed from."""
    x0 = simultaneity_x0(scale, d)
    l, s4, bad = _distance_from_surface(scale.t_half, d, x0)
    if np.any(bad):
        raise OutsideCausalRegion("S^4 on the simultaneity surface is outside [0, T^4]")
    if np.ndim(l) == 0:
        return x0, s4[()], l[()]
    return x0, s4, l


def distance_asymmetry(scale: ObserverScale, d: SpatialOffset):
    """Distances to the world lines at ``d`` and at ``-d``."""
    return distance_h4(scale, d), distance_h4(scale, -SpatialOffset(*d))


def distance_minkowski(scale: ObserverScale, d: SpatialOffset):
    """Same two-hyperboloid pipeline with the Minkowski quadratics.

    The half-difference equation is 2 T x0 = 0, so the surface is x0 = 0 and
    S**2 = T**2 - r**2 there.
    """
    _check_scale(scale)
    T = scale.t_half
    x1, x2, x3 = d
    s2 = T * T - (x1 * x1 + x2 * x2 + x3 * x3)
    if np.any(np.asarray(s2) < 0):
        raise OutsideDomain("x1^2 + x2^2 + x3^2 must be <= T^2")
    s = np.sqrt(s2)
    x0 = np.zeros_like(s)
    res = mink_intersection_residuals(HyperboloidPair(T, s), Event4(x0, x1, x2, x3))
    assert np.all(np.abs(res[1]) == 0.0)
    return mink_distance(HyperboloidPair(T, s))


def _samples(d: SpatialOffset, x0, s4, l, status) -> list[SurfaceSample]:
    return [
        SurfaceSample(
            SpatialOffset(float(d.x1[i]), float(d.x2[i]), float(d.x3[i])),
            float(x0[i]), float(s4[i]), float(l[i]), str(status[i]),
        )
        for i in range(len(status))
    ]


def sample_surface(
    scale: ObserverScale,
    grid: GridSpec,
    tolerance: float = RESIDUAL_TOLERANCE,
    max_nodes: int = MAX_GRID_NODES,
) -> list[SurfaceSample]:
    """Solve every grid node; nodes outside the domain are kept with a skip status."""
    _check_scale(scale)
    grid.validate(max_nodes)
    T = float(scale.t_half)
    d = grid.nodes()
    p, q = _cubic_coefficients(T, d)
    inside = p > 0
    x0 = np.where(inside, solve_depressed_cubic(np.where(inside, p, 1.0), np.where(inside, q, 0.0)), np.nan)
    l, s4, bad = _distance_from_surface(T, d, np.where(inside, x0, 0.0))
    residual = np.abs(x0 * x0 * x0 + p * x0 + q)
    too_big = inside & ~(residual <= tolerance * max(T**3, 1.0))

    status = np.full(len(p), STATUS_OK, dtype=object)
    status[too_big] = STATUS_RESIDUAL
    status[inside & bad] = STATUS_OUTSIDE_CAUSAL
    status[~inside] = STATUS_OUTSIDE_DOMAIN
    ok = status == STATUS_OK
    l = np.where(ok, l, np.nan)
    s4 = np.where(ok | too_big, s4, np.nan)
    x0 = np.where(inside, x0, np.nan)
    return _samples(d, x0, s4, l, status)


def sample_surface_minkowski(
    scale: ObserverScale, grid: GridSpec, max_nodes: int = MAX_GRID_NODES
) -> list[SurfaceSample]:
    """Flat Minkowski simultaneity surface x0 = 0 on the same grid."""
    _check_scale(scale)
    grid.validate(max_nodes)
    T = float(scale.t_half)
    d = grid.nodes()
    s2 = T * T - (d.x1**2 + d.x2**2 + d.x3**2)
    inside = s2 >= 0
    x0 = np.where(inside, 0.0, np.nan)
    s4 = np.where(inside, s2 * s2, np.nan)
    l = np.where(inside, mink_distance(HyperboloidPair(T, np.sqrt(np.where(inside, s2, 0.0)))), np.nan)
    status = np.where(inside, STATUS_OK, STATUS_OUTSIDE_DOMAIN).astype(object)
    return _samples(d, x0, s4, l, status)
