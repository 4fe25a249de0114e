import math

from ..dynamics.state import CurrentSample
from .ar1 import Ar1Process, ar1_step


__all__ = ("CurrentModel", "sample_current")


class CurrentModel(object):
    """Randomly varying ocean current: one AR(1) process for the speed and one
       for the earth-frame direction.
    """

    def __init__(self, speed, direction, enabled=True):
        self.speed = speed
        self.direction = direction
        self.enabled = enabled

    @classmethod
    def from_config(cls, cfg):
        """Build from the ``disturbances.current`` config section (angles in
           degrees there, radians here).
        """
        speed = Ar1Process(
            cfg["speed_range"][0],
            cfg["speed_range"][1],
            rho=cfg["rho"],
            scale=cfg["scale"],
        )
        direction = Ar1Process(
            math.radians(cfg["direction_range_deg"][0]),
            math.radians(cfg["direction_range_deg"][1]),
            rho=cfg["rho"],
            scale=cfg["scale"],
        )
        return cls(speed, direction, enabled=cfg["enabled"])


def sample_current(model, rng):
    """Advance the current processes by one step and return the sample.
       A disabled model always reports zero speed and draws nothing.
    """
    if not model.enabled:
        return CurrentSample(0.0, model.direction.value)
    return CurrentSample(ar1_step(model.speed, rng), ar1_step(model.direction, rng))
