import math

from ..environment.geometry import wrap_angle
from .ar1 import Ar1Process, ar1_step


__all__ = ("NavErrorModel", "apply_nav_error")


class NavErrorModel(object):
    """Additive navigation errors on x, y (m) and psi (rad) of one AUV."""

    def __init__(self, x, y, psi, enabled=True):
        self.x = x
        self.y = y
        self.psi = psi
        self.enabled = enabled

    @classmethod
    def from_config(cls, cfg):
        bound = cfg["position_bound"]
        heading = math.radians(cfg["heading_bound_deg"])
        make = lambda lo, hi: Ar1Process(  # noqa: E731
            lo, hi, rho=cfg["rho"], scale=cfg["scale"], value=0.0
        )
        return cls(
            make(-bound, bound),
            make(-bound, bound),
            make(-heading, heading),
            enabled=cfg["enabled"],
        )

    @property
    def errors(self):
        return (self.x.value, self.y.value, self.psi.value)


def apply_nav_error(model, true_state, rng):
    """Return the measured state: true pose plus the next error sample, psi
       re-wrapped, velocities untouched. `true_state` is never modified.
    """
    if not model.enabled:
        return true_state
    ex = ar1_step(model.x, rng)
    ey = ar1_step(model.y, rng)
    epsi = ar1_step(model.psi, rng)
    return true_state._replace(
        x=true_state.x + ex,
        y=true_state.y + ey,
        psi=wrap_angle(true_state.psi + epsi),
    )
