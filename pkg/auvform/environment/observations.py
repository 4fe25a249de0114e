"""MDP state vectors of the leader and the followers."""
import math

import numpy as np

from .geometry import bearing, distance, wrap_angle
from .sensing import sense_obstacles


__all__ = (
    "Observation",
    "observation_labels",
    "observation_size",
    "formation_angle",
    "leader_observation",
    "follower_observation",
)

LEADER = "leader"
FOLLOWER = "follower"

LEADER_FIELDS = ("e_A", "u", "v", "r")
FOLLOWER_FIELDS = ("e_d", "e_A", "psi_L", "psi_F", "vL_scaled", "vF_scaled")


def observation_labels(role, approach, k):
    """Column names of the observation vector for `role` ("leader" or
       "follower"). Obstacle slots are named obs_1 .. obs_k; approach 2
       followers carry none.
    """
    obstacle_slots = tuple("obs_%d" % (i + 1) for i in range(k))
    if role == LEADER:
        return LEADER_FIELDS + obstacle_slots
    if role == FOLLOWER:
        return FOLLOWER_FIELDS + (obstacle_slots if approach == 1 else ())
    raise ValueError("Unknown agent role %r" % (role,))


def observation_size(role, approach, k):
    return len(observation_labels(role, approach, k))


class Observation(object):
    """A labelled, fixed-length observation vector.

    Values are accessible by position or by label: ``obs[0]`` and
    ``obs["e_d"]`` are the same number for a follower.
    """

    __slots__ = ("labels", "values")

    def __init__(self, labels, values):
        if len(labels) != len(values):
            raise ValueError("%d labels for %d values" % (len(labels), len(values)))
        self.labels = tuple(labels)
        self.values = tuple(float(value) for value in values)

    def __getitem__(self, key):
        if isinstance(key, str):
            try:
                return self.values[self.labels.index(key)]
            except ValueError:
                raise KeyError(key)
        return self.values[key]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, Observation)
            and self.labels == other.labels
            and self.values == other.values
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Observation(%s)" % ", ".join(
            "%s=%r" % item for item in zip(self.labels, self.values)
        )

    def as_array(self):
        return np.array(self.values, dtype=np.float64)

    @property
    def obstacle_slots(self):
        return tuple(
            v for label, v in zip(self.labels, self.values) if label.startswith("obs_")
        )


def formation_angle(leader_state, follower_state):
    """Angle from the leader's heading to the leader->follower line,
       positive counterclockwise, in [-pi, pi).
    """
    return wrap_angle(bearing(leader_state.position, follower_state.position) - leader_state.psi)


def leader_observation(leader_state, target_pos, obstacles, spec):
    line_of_sight = bearing(leader_state.position, target_pos)
    values = [
        wrap_angle(line_of_sight - leader_state.psi),
        leader_state.u,
        leader_state.v,
        leader_state.r,
    ]
    values.extend(
        sense_obstacles(leader_state.position, obstacles, spec.r_det, spec.obstacle_slots)
    )
    return Observation(observation_labels(LEADER, None, spec.obstacle_slots), values)


def follower_observation(
    follower_state, leader_state, spec, approach, lambda_desired=None, obstacles=()
):
    """
    Build a follower's observation.

    Parameters
    ----------
    follower_state, leader_state : VehicleState
        The follower's own (measured) state and the leader state it last
        received.
    spec : FormationSpec
    approach : int
        1 includes the follower's own obstacle slots, 2 omits them.
    lambda_desired : float, optional
        Formation angle of this follower (rad); defaults to
        ``spec.lambda_desired``.
    obstacles : sequence of Obstacle
        Only used under approach 1.
    """
    if lambda_desired is None:
        lambda_desired = spec.lambda_desired
    d_fl = distance(leader_state.position, follower_state.position)
    v_d = spec.v_desired
    values = [
        (d_fl - spec.d_desired) / spec.d_desired,
        wrap_angle(formation_angle(leader_state, follower_state) - lambda_desired),
        leader_state.psi,
        follower_state.psi,
        (math.hypot(leader_state.u, leader_state.v) - v_d) / v_d,
        (math.hypot(follower_state.u, follower_state.v) - v_d) / v_d,
    ]
    if approach == 1:
        values.extend(
            sense_obstacles(
                follower_state.position, obstacles, spec.r_det, spec.obstacle_slots
            )
        )
    return Observation(observation_labels(FOLLOWER, approach, spec.obstacle_slots), values)
