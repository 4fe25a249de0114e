"""Scenario description: formation parameters, reward weights, agents,
target and obstacle layout.
"""
import logging
import math
from collections import namedtuple

from ..exceptions import ConfigurationError, ScenarioError
from .geometry import distance


__all__ = (
    "Obstacle",
    "FormationSpec",
    "RewardWeights",
    "AgentSlot",
    "LEADER",
    "FOLLOWER_LEFT",
    "FOLLOWER_RIGHT",
    "agent_slots",
    "sample_target",
    "place_obstacles",
    "scenario_obstacles",
)

logger = logging.getLogger(__name__)

LEADER = "leader"
FOLLOWER_LEFT = "follower_left"
FOLLOWER_RIGHT = "follower_right"


class Obstacle(namedtuple("BaseObstacle", ("cx", "cy", "radius"))):
    """Static circular obstacle: centre (m) and radius (m)."""

    __slots__ = ()

    @property
    def center(self):
        return (self.cx, self.cy)


class FormationSpec(
    namedtuple(
        "BaseFormationSpec",
        (
            "d_desired",
            "lambda_desired",
            "v_desired",
            "shell_radius",
            "d_safe",
            "r_det",
            "obstacle_slots",
        ),
    )
):
    __slots__ = ()

    @classmethod
    def from_config(cls, formation):
        spec = cls(
            d_desired=float(formation["d_desired"]),
            lambda_desired=math.radians(formation["lambda_left_deg"]),
            v_desired=float(formation["v_desired"]),
            shell_radius=float(formation["shell_radius"]),
            d_safe=float(formation["d_safe"]),
            r_det=float(formation["r_det"]),
            obstacle_slots=int(formation["obstacle_slots"]),
        )
        for name in ("d_desired", "v_desired", "shell_radius", "d_safe", "r_det"):
            if not getattr(spec, name) > 0:
                raise ConfigurationError("must be > 0", field="formation." + name)
        if spec.obstacle_slots < 0:
            raise ConfigurationError("must be >= 0", field="formation.obstacle_slots")
        return spec


class RewardWeights(
    namedtuple("BaseRewardWeights", ("w_A", "w_Fd", "w_FA", "w_OA", "w_CA", "w_E1", "w_E2"))
):
    __slots__ = ()

    @classmethod
    def from_config(cls, rewards):
        weights = cls(**dict((name, float(rewards[name])) for name in cls._fields))
        for name, value in zip(cls._fields, weights):
            if value < 0:
                raise ConfigurationError("must be >= 0", field="rewards." + name)
        return weights

    def for_follower(self, approach):
        """Weights a follower trains with; approach 2 followers ignore
           obstacles entirely.
        """
        return self._replace(w_OA=0.0) if approach == 2 else self


class AgentSlot(namedtuple("BaseAgentSlot", ("name", "role", "start", "lambda_desired"))):
    """One AUV of the formation: name, role ("leader" | "follower"),
       initial pose (x, y, psi) and, for followers, formation angle (rad).
    """

    __slots__ = ()


def agent_slots(config):
    """The AUVs of a scenario, leader first."""
    agents = config["agents"]
    formation = config["formation"]
    slots = [AgentSlot(LEADER, "leader", _pose(agents["leader_start"]), None)]
    followers = (
        (FOLLOWER_LEFT, "follower_left_start", "lambda_left_deg"),
        (FOLLOWER_RIGHT, "follower_right_start", "lambda_right_deg"),
    )
    for name, start_key, angle_key in followers[: agents["followers"]]:
        slots.append(
            AgentSlot(
                name,
                "follower",
                _pose(agents[start_key]),
                math.radians(formation[angle_key]),
            )
        )
    return slots


def _pose(values):
    x, y, psi_deg = values
    return (float(x), float(y), math.radians(psi_deg))


def sample_target(arena, rng):
    """Target centre: the configured fixed point, or a point drawn uniformly
       on the arena boundary (optionally one side only).
    """
    if arena["target"] is not None:
        return (float(arena["target"][0]), float(arena["target"][1]))
    w, h = float(arena["width"]), float(arena["height"])
    side = arena["target_side"]
    if side == "north":
        return (rng.uniform(0.0, w), h)
    if side == "south":
        return (rng.uniform(0.0, w), 0.0)
    if side == "east":
        return (w, rng.uniform(0.0, h))
    if side == "west":
        return (0.0, rng.uniform(0.0, h))
    s = rng.uniform(0.0, 2.0 * (w + h))
    if s < w:
        return (s, 0.0)
    s -= w
    if s < h:
        return (w, s)
    s -= h
    if s < w:
        return (w - s, h)
    return (0.0, h - (s - w))


def _clear(candidate, placed, agent_positions, target, arena, shell_radius, target_radius):
    cx, cy, radius = candidate
    if not (radius <= cx <= arena["width"] - radius and radius <= cy <= arena["height"] - radius):
        return False
    for position in agent_positions:
        if distance((cx, cy), position) <= radius + shell_radius:
            return False
    if distance((cx, cy), target) <= radius + target_radius:
        return False
    for ob in placed:
        if distance((cx, cy), ob.center) <= radius + ob.radius:
            return False
    return True


def place_obstacles(config, agent_positions, target, rng, existing=()):
    """
    Draw the random obstacle field.

    All obstacles share one cluster: its anchor is a random point on the
    segment between the leader's start and the target (fraction drawn from
    ``obstacles.corridor``), and each centre is uniform in the disc of radius
    ``obstacles.cluster_radius`` around it. Candidates overlapping an AUV
    shell, the target disc, another obstacle or the arena edge are redrawn.

    Raises
    ------
    ScenarioError
        An obstacle could not be placed within ``obstacles.max_retries``
        draws.
    """
    section = config["obstacles"]
    count = section["count"]
    if count == 0:
        return []
    radius = float(section["radius"])
    lo, hi = section["corridor"]
    leader = agent_positions[0]
    fraction = rng.uniform(lo, hi)
    anchor = (
        leader[0] + fraction * (target[0] - leader[0]),
        leader[1] + fraction * (target[1] - leader[1]),
    )
    shell_radius = config["formation"]["shell_radius"]
    target_radius = config["arena"]["target_radius"]
    placed = list(existing)
    for index in range(count):
        for _ in range(section["max_retries"]):
            rho = section["cluster_radius"] * math.sqrt(rng.uniform())
            theta = rng.uniform(-math.pi, math.pi)
            candidate = (
                anchor[0] + rho * math.cos(theta),
                anchor[1] + rho * math.sin(theta),
                radius,
            )
            if _clear(
                candidate, placed, agent_positions, target, config["arena"],
                shell_radius, target_radius,
            ):
                placed.append(Obstacle(*candidate))
                break
        else:
            raise ScenarioError(
                "Could not place obstacle %d of %d near (%.1f, %.1f) after %d attempts"
                % (index + 1, count, anchor[0], anchor[1], section["max_retries"])
            )
    return placed[len(existing):]


def scenario_obstacles(config, agent_positions, target, rng, episode=0):
    """Fixed obstacles plus the random field; both are withheld before
       ``obstacles.start_episode``.
    """
    section = config["obstacles"]
    if episode < section["start_episode"]:
        return []
    obstacles = [Obstacle(float(cx), float(cy), float(r)) for cx, cy, r in section["fixed"]]
    obstacles.extend(place_obstacles(config, agent_positions, target, rng, obstacles))
    logger.debug("Episode %d: %d obstacles", episode, len(obstacles))
    return obstacles
