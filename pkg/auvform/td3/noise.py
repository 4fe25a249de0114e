"""Exploration and target-smoothing noise."""
import numpy as np


__all__ = ("OuState", "ou_step", "smoothing_noise")


class OuState(object):
    """Current value of a discrete Ornstein-Uhlenbeck process, one
       component per action dimension.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = np.array(value, dtype=np.float64)

    @classmethod
    def constant(cls, dim, mu=0.0):
        return cls(np.full(dim, mu, dtype=np.float64))

    def __repr__(self):
        return "OuState(%r)" % (self.value.tolist(),)


def ou_step(state, alpha, mu, sigma, rng):
    """N_{k+1} = N_k + alpha * (mu - N_k) + sigma * N(0, 1), per component.
       Returns a new `OuState`; `state` is left untouched. With sigma = 0 no
       random numbers are drawn.
    """
    value = state.value + alpha * (mu - state.value)
    if sigma:
        value = value + sigma * rng.standard_normal(state.value.shape)
    return OuState(value)


def smoothing_noise(rng, shape, sigma, clip):
    """Clipped Gaussian noise added to target-policy actions."""
    return np.clip(sigma * rng.standard_normal(shape), -clip, clip)
