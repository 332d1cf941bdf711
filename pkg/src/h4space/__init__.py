"""Distance, velocity modulus and frame transformations in the Berwald-Moor space H4."""

from .algebra import Cone, Event4, IsotropicEvent4, Velocity3, cone_classify, from_isotropic, to_isotropic
from .errors import (
    ConfigError,
    DegenerateError,
    DomainError,
    H4Error,
    NegativeForm,
    NegativeQuarticForm,
    OutsideCausalRegion,
    OutsideDomain,
    SuperluminalError,
)
from .kinematics import (
    WForm,
    interval_from_velocity_h4,
    velocity_from_events,
    velocity_modulus_h4,
    velocity_modulus_nonrel,
    w_form,
)
from .metric import (
    ExponentWeights,
    Interval,
    interval2_minkowski,
    interval2_minkowski_isotropiclike,
    interval2_plane,
    interval4_h4_orthonormal,
    interval4_minkowski,
    interval_general,
    interval_h3,
    interval_h4_isotropic,
)
from .simultaneity import (
    AxisRange,
    GridSpec,
    ObserverScale,
    SpatialOffset,
    SurfaceSample,
    distance_asymmetry,
    distance_h4,
    s4_on_surface,
    sample_surface,
    simultaneity_x0,
)
from .transforms import (
    FrameVelocity,
    GroupElement,
    add_velocities,
    apply_group,
    boost_matrix,
    group_from_velocity,
    inverse_group_from_velocity,
    lorentz_boost_sr,
    modulus_after_boost,
    time_dilation_factor,
)

__version__ = "0.1.0"
