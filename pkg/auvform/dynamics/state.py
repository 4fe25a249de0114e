"""Value records exchanged by the dynamics, the environment and the learner."""
import math
from collections import namedtuple

import numpy as np

from ..environment.geometry import wrap_angle


__all__ = (
    "VehicleState",
    "ControlInput",
    "ControlLimits",
    "CurrentSample",
    "CONTROL_LIMITS",
    "saturate",
)


class VehicleState(namedtuple("BaseVehicleState", ("x", "y", "psi", "u", "v", "r"))):
    """Pose (x, y, psi) in the earth frame and body velocities (u, v, r) of
       one AUV. Build through `VehicleState.create` to get psi wrapped to
       [-pi, pi).
    """

    __slots__ = ()

    @classmethod
    def create(cls, x=0.0, y=0.0, psi=0.0, u=0.0, v=0.0, r=0.0):
        return cls(float(x), float(y), wrap_angle(float(psi)), float(u), float(v), float(r))

    @classmethod
    def from_array(cls, values):
        x, y, psi, u, v, r = (float(value) for value in values)
        return cls(x, y, wrap_angle(psi), u, v, r)

    def as_array(self):
        return np.array(self, dtype=np.float64)

    @property
    def position(self):
        return (self.x, self.y)

    @property
    def speed(self):
        """Resultant speed sqrt(u^2 + v^2) (m/s)."""
        return math.hypot(self.u, self.v)

    def is_finite(self):
        return all(math.isfinite(value) for value in self)


class ControlInput(namedtuple("BaseControlInput", ("x_prop", "delta_r"))):
    """Propeller thrust (N) and rudder deflection (rad)."""

    __slots__ = ()


class ControlLimits(
    namedtuple("BaseControlLimits", ("thrust_min", "thrust_max", "rudder_max"))
):
    """Closed actuator ranges: thrust in [thrust_min, thrust_max] N and
       rudder in [-rudder_max, rudder_max] rad.
    """

    __slots__ = ()

    def contains(self, ctrl, tolerance=1e-12):
        return (
            self.thrust_min - tolerance <= ctrl.x_prop <= self.thrust_max + tolerance
            and abs(ctrl.delta_r) <= self.rudder_max + tolerance
        )

    def to_control(self, action):
        """Affine map of a normalized action in [-1, 1]^2 onto the ranges."""
        mid = 0.5 * (self.thrust_max + self.thrust_min)
        half = 0.5 * (self.thrust_max - self.thrust_min)
        return ControlInput(mid + half * float(action[0]), self.rudder_max * float(action[1]))


class CurrentSample(namedtuple("BaseCurrentSample", ("speed", "direction"))):
    """Ocean current speed (m/s, >= 0) and earth-frame direction (rad)."""

    __slots__ = ()


CONTROL_LIMITS = ControlLimits(3.0, 13.0, math.radians(20.0))


def saturate(ctrl, limits=CONTROL_LIMITS):
    """Hard-clamp a control input into the authorized actuator ranges."""
    x_prop = min(max(float(ctrl.x_prop), limits.thrust_min), limits.thrust_max)
    delta_r = min(max(float(ctrl.delta_r), -limits.rudder_max), limits.rudder_max)
    return ControlInput(x_prop, delta_r)
