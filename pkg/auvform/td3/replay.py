from collections import namedtuple

import numpy as np

from ..exceptions import ContractViolation, NotReady


__all__ = ("Transition", "Batch", "ReplayBuffer", "store", "sample_minibatch")


Transition = namedtuple("Transition", ("s", "a", "r", "s_next", "done"))

Batch = namedtuple("Batch", ("states", "actions", "rewards", "next_states", "dones", "indices"))


class ReplayBuffer(object):
    """
    Fixed-capacity FIFO memory of transitions.

    Storage is preallocated: one array per field with `capacity` rows. Once
    full, each new transition overwrites the oldest one.
    """

    def __init__(self, capacity, obs_dim, act_dim):
        if capacity < 1:
            raise ValueError("Replay capacity must be >= 1, got %r" % (capacity,))
        self.capacity = int(capacity)
        self.obs_dim = obs_dim
        self.act_dim = act_dim
        self.states = np.empty((self.capacity, obs_dim), dtype=np.float64)
        self.actions = np.empty((self.capacity, act_dim), dtype=np.float64)
        self.rewards = np.empty(self.capacity, dtype=np.float64)
        self.next_states = np.empty((self.capacity, obs_dim), dtype=np.float64)
        self.dones = np.empty(self.capacity, dtype=np.bool_)
        self.cursor = 0
        self.fill = 0

    def __len__(self):
        return self.fill

    def store(self, transition):
        s = np.asarray(transition.s, dtype=np.float64)
        a = np.asarray(transition.a, dtype=np.float64)
        s_next = np.asarray(transition.s_next, dtype=np.float64)
        if s.shape != (self.obs_dim,) or s_next.shape != (self.obs_dim,):
            raise ContractViolation(
                "Observation width %r does not match buffer width %d" % (s.shape, self.obs_dim)
            )
        if a.shape != (self.act_dim,):
            raise ContractViolation(
                "Action width %r does not match buffer width %d" % (a.shape, self.act_dim)
            )
        i = self.cursor
        self.states[i] = s
        self.actions[i] = a
        self.rewards[i] = transition.r
        self.next_states[i] = s_next
        self.dones[i] = bool(transition.done)
        self.cursor = (i + 1) % self.capacity
        self.fill = min(self.fill + 1, self.capacity)

    def transition(self, index):
        if not 0 <= index < self.fill:
            raise IndexError(index)
        return Transition(
            self.states[index].copy(),
            self.actions[index].copy(),
            float(self.rewards[index]),
            self.next_states[index].copy(),
            bool(self.dones[index]),
        )

    def sample_minibatch(self, batch_size, rng):
        """Draw `batch_size` transitions uniformly, with replacement.

        Raises
        ------
        NotReady
            Fewer than `batch_size` transitions stored.
        """
        if self.fill < batch_size:
            raise NotReady("Replay holds %d transitions, %d needed" % (self.fill, batch_size))
        indices = rng.integers(0, self.fill, size=batch_size)
        return Batch(
            self.states[indices],
            self.actions[indices],
            self.rewards[indices],
            self.next_states[indices],
            self.dones[indices],
            indices,
        )


def store(buffer, transition):
    buffer.store(transition)


def sample_minibatch(buffer, batch_size, rng):
    return buffer.sample_minibatch(batch_size, rng)
