"""
Reward terms of the leader and follower MDPs. Every term is a penalty
(<= 0); the totals are weighted sums of the terms.
"""
import math
from collections import namedtuple

from .geometry import enclosing_circle, wrap_angle


__all__ = (
    "RewardComponents",
    "reward_target",
    "reward_obstacle_a1",
    "reward_obstacle_a2",
    "reward_collision",
    "collision_penalty",
    "reward_effort",
    "reward_formation_distance",
    "reward_formation_angle",
    "leader_total_reward",
    "follower_total_reward",
)


class RewardComponents(
    namedtuple(
        "BaseRewardComponents",
        (
            "target",
            "formation_distance",
            "formation_angle",
            "obstacle",
            "collision",
            "effort",
        ),
    )
):
    """Unweighted reward terms of one agent for one step. Terms that do not
       apply to the agent's role are 0; `effort` is a (thrust, rudder) pair.
    """

    __slots__ = ()

    @classmethod
    def create(
        cls,
        target=0.0,
        formation_distance=0.0,
        formation_angle=0.0,
        obstacle=0.0,
        collision=0.0,
        effort=(0.0, 0.0),
    ):
        return cls(target, formation_distance, formation_angle, obstacle, collision, tuple(effort))


def reward_target(lambda_lg, psi_l):
    return -abs(wrap_angle(lambda_lg - psi_l))


def _shell_penalty(d, d_avoid):
    # Strictly farther than d_avoid costs nothing.
    if d > d_avoid:
        return 0.0
    return -abs(d_avoid - d)


def reward_obstacle_a1(position, obstacles, shell_radius, d_safe, r_det=None):
    """Sum of shell penalties of one AUV against `obstacles`. With `r_det`
       given, obstacles beyond the sensor range are ignored; otherwise the
       caller passes only detected ones.
    """
    total = 0.0
    for ob in obstacles:
        d = math.hypot(ob.cx - position[0], ob.cy - position[1])
        if r_det is not None and d > r_det:
            continue
        total += _shell_penalty(d, shell_radius + d_safe + ob.radius)
    return total


def reward_obstacle_a2(leader_pos, follower_positions, obstacles, d_safe, r_det=None):
    """Penalty of the circle circumscribing the leader and its two
       followers against the obstacles the leader senses. Collinear
       formations use the centroid circle instead.
    """
    if r_det is not None:
        obstacles = [
            ob
            for ob in obstacles
            if math.hypot(ob.cx - leader_pos[0], ob.cy - leader_pos[1]) <= r_det
        ]
    if not obstacles:
        return 0.0
    f1, f2 = follower_positions
    center, r_cir = enclosing_circle(leader_pos, f1, f2)
    total = 0.0
    for ob in obstacles:
        d = math.hypot(ob.cx - center[0], ob.cy - center[1])
        total += _shell_penalty(d, r_cir + d_safe + ob.radius)
    return total


def reward_collision(d_aa, shell_radius, d_safe):
    return _shell_penalty(d_aa, 2.0 * (shell_radius + d_safe))


def collision_penalty(position, others, shell_radius, d_safe):
    """`reward_collision` summed over every other AUV position."""
    total = 0.0
    for other in others:
        d = math.hypot(other[0] - position[0], other[1] - position[1])
        total += reward_collision(d, shell_radius, d_safe)
    return total


def reward_effort(ctrl):
    return (-abs(ctrl.x_prop), -abs(ctrl.delta_r))


def reward_formation_distance(e_d):
    return -abs(e_d)


def reward_formation_angle(lambda_fl, lambda_desired):
    return -abs(wrap_angle(lambda_fl - lambda_desired))


def leader_total_reward(components, weights):
    return (
        weights.w_A * components.target
        + weights.w_OA * components.obstacle
        + weights.w_CA * components.collision
        + weights.w_E1 * components.effort[0]
        + weights.w_E2 * components.effort[1]
    )


def follower_total_reward(components, weights, approach):
    total = (
        weights.w_Fd * components.formation_distance
        + weights.w_FA * components.formation_angle
    )
    if approach == 1:
        total += weights.w_OA * components.obstacle
    return (
        total
        + weights.w_CA * components.collision
        + weights.w_E1 * components.effort[0]
        + weights.w_E2 * components.effort[1]
    )
