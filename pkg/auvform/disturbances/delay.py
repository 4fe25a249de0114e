"""Acoustic link with a random, time-varying transmission delay.

Delays follow a Rayleigh distribution truncated by rejection, and are
quantized up to the simulation step grid. A reader always gets the freshest
payload delivered so far (hold-last-sample), never a future one and never one
older than a previous read.
"""
import logging
import math
from collections import deque, namedtuple

from ..exceptions import ConfigurationError


__all__ = ("DelayChannel", "sample_delay")

logger = logging.getLogger(__name__)

TIME_EPSILON = 1e-9

Message = namedtuple("Message", ("send_time", "delivery_time", "payload"))


def sample_delay(rng, sigma=0.1, truncation=1.2):
    """Draw one Rayleigh(sigma) delay (s), resampling values above `truncation`."""
    while True:
        delay = rng.rayleigh(sigma)
        if delay <= truncation:
            return delay


class DelayChannel(object):
    """
    One-directional link between two AUVs.

    Parameters
    ----------
    initial_payload : object
        What a reader sees before the first delivery (the sender's state at
        t = 0).
    sigma : float
        Rayleigh scale (s); the most likely delay.
    truncation : float
        Largest admissible delay (s).
    grid : float
        Simulation step (s); delays are rounded up to a multiple of it.
    enabled : bool
        When False every payload is delivered immediately and no random
        numbers are drawn.
    """

    def __init__(self, initial_payload, sigma=0.1, truncation=1.2, grid=0.1, enabled=True):
        if sigma <= 0 or truncation <= 0 or grid <= 0:
            raise ConfigurationError(
                "Delay channel needs positive sigma, truncation and grid",
                field="disturbances.delay",
            )
        self.sigma = sigma
        self.truncation = truncation
        self.grid = grid
        self.enabled = enabled
        self._queue = deque()
        self._last = initial_payload
        self._last_send_time = 0.0

    def quantize(self, delay):
        steps = math.ceil(delay / self.grid - TIME_EPSILON)
        return round(max(steps, 0) * self.grid, 12)

    def send(self, payload, t_now, rng=None, delay=None):
        """Queue `payload` sent at `t_now`; returns the applied delay (s).

        `delay` forces a specific (pre-quantization) delay; otherwise one is
        drawn from `rng` when the channel is enabled.
        """
        if delay is None:
            delay = sample_delay(rng, self.sigma, self.truncation) if self.enabled else 0.0
        delay = self.quantize(delay)
        self._queue.append(Message(t_now, t_now + delay, payload))
        return delay

    def read(self, t_now):
        """Latest payload whose delivery time is <= t_now."""
        best = None
        for message in self._queue:
            if message.delivery_time <= t_now + TIME_EPSILON and (
                best is None or message.send_time > best.send_time
            ):
                best = message
        if best is not None and best.send_time >= self._last_send_time:
            self._last = best.payload
            self._last_send_time = best.send_time
            # Anything sent earlier can no longer be shown without going back
            # in time.
            self._queue = deque(m for m in self._queue if m.send_time > best.send_time)
        return self._last

    @property
    def pending(self):
        return len(self._queue)
