"""Named, independent random streams derived from one base seed.

Every consumer of randomness asks for its own stream, keyed by purpose and
an index (episode number, agent slot, ...). Switching a perturbation on or
off therefore never shifts the numbers any other component sees.
"""
import numpy as np

from .exceptions import ConfigurationError


__all__ = ("STREAMS", "stream", "stream_seed")

STREAMS = {
    "scenario": 1,
    "current": 2,
    "delay": 3,
    "nav_error": 4,
    "exploration": 5,
    "learner": 6,
    "init": 7,
    "evaluation": 8,
}


def stream_seed(seed, purpose, *index):
    try:
        key = STREAMS[purpose]
    except KeyError:
        raise ValueError("Unknown random stream %r" % (purpose,))
    if seed < 0 or any(i < 0 for i in index):
        raise ConfigurationError(
            "Seeds must be non-negative, got %r" % ((seed,) + index,), field="seed"
        )
    return np.random.SeedSequence([int(seed), key] + [int(i) for i in index])


def stream(seed, purpose, *index):
    """A fresh PCG64 generator for (seed, purpose, *index)."""
    return np.random.default_rng(stream_seed(seed, purpose, *index))
