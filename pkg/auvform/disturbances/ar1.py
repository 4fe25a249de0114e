"""Clamped first-order Markov (AR(1)) process used for slowly varying
perturbations: current speed/direction and navigation errors.

Each step draws a uniform innovation x ~ U(lo, hi) and moves the value a
fraction (1 - rho) * scale of the way towards it:

    v <- clamp(v + (1 - rho) * scale * (x - v), lo, hi)

With scale = 1 this is the moving average rho * v + (1 - rho) * x; scale = 0
freezes the process at its current value.
"""
from ..exceptions import ConfigurationError


__all__ = ("Ar1Process", "ar1_step")


class Ar1Process(object):
    __slots__ = ("value", "rho", "scale", "lo", "hi")

    def __init__(self, lo, hi, rho=0.95, scale=1.0, value=None):
        if not lo <= hi:
            raise ConfigurationError("AR(1) clamp range is empty: [%r, %r]" % (lo, hi))
        if not 0.0 <= rho < 1.0:
            raise ConfigurationError("AR(1) persistence must lie in [0, 1), got %r" % rho)
        if scale < 0.0:
            raise ConfigurationError("AR(1) innovation scale must be >= 0, got %r" % scale)
        self.lo = float(lo)
        self.hi = float(hi)
        self.rho = float(rho)
        self.scale = float(scale)
        if value is None:
            value = 0.5 * (self.lo + self.hi)
        self.value = min(max(float(value), self.lo), self.hi)

    def __repr__(self):
        return "%s(value=%r, rho=%r, scale=%r, lo=%r, hi=%r)" % (
            type(self).__name__,
            self.value,
            self.rho,
            self.scale,
            self.lo,
            self.hi,
        )


def ar1_step(proc, rng):
    """Advance `proc` by one step in place and return the new value."""
    innovation = rng.uniform(proc.lo, proc.hi)
    value = proc.value + (1.0 - proc.rho) * proc.scale * (innovation - proc.value)
    proc.value = min(max(value, proc.lo), proc.hi)
    return proc.value
