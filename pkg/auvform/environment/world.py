"""
The multi-AUV episode: true vehicle states, the target, static obstacles
and the perturbation processes, advanced one control period at a time.

Rewards are computed from true states, except the approach 2 leader
obstacle term: its formation circle uses the follower positions the leader
received over the reverse links. Observations are built from what each
agent can know: its own measured (navigation-error) state, the leader
broadcast received over a delayed acoustic link and, for the leader under
approach 2, the follower positions received over the reverse links.
"""
import logging
from collections import namedtuple

from .. import seeding
from ..disturbances import (
    CurrentModel,
    DelayChannel,
    NavErrorModel,
    apply_nav_error,
    sample_current,
)
from ..dynamics import CONTROL_LIMITS, VehicleState, integrate_step, load_coefficients, saturate
from ..exceptions import ContractViolation, SimulationFault
from .geometry import bearing, distance, enclosing_circle, wrap_angle
from .observations import follower_observation, formation_angle, leader_observation
from .rewards import (
    RewardComponents,
    collision_penalty,
    follower_total_reward,
    leader_total_reward,
    reward_effort,
    reward_formation_angle,
    reward_formation_distance,
    reward_obstacle_a1,
    reward_obstacle_a2,
    reward_target,
)
from .scenario import (
    LEADER,
    FormationSpec,
    RewardWeights,
    agent_slots,
    sample_target,
    scenario_obstacles,
)


__all__ = (
    "World",
    "StepOutcome",
    "TARGET_REACHED",
    "STEP_LIMIT",
    "reset_scenario",
    "step",
    "target_reached",
)

logger = logging.getLogger(__name__)

TARGET_REACHED = "target-reached"
STEP_LIMIT = "step-limit"


class StepOutcome(
    namedtuple(
        "BaseStepOutcome",
        ("observations", "rewards", "components", "controls", "terminal", "cause"),
    )
):
    """Result of one `World.step`: per-agent observations, total rewards,
       reward components and applied (saturated) controls, keyed by agent
       name, plus the terminal flag and its cause (or ``None``).
    """

    __slots__ = ()


def _disabled(section):
    section = dict(section)
    section["enabled"] = False
    return section


class World(object):
    """One episode of the formation task. Create through `reset_scenario`."""

    def __init__(self, config, seed, episode=0, perturbed=True, max_steps=None):
        self.config = config
        self.seed = seed
        self.episode = episode
        self.approach = config["approach"]
        self.dt = config["dynamics"]["dt"]
        self.integrator = config["dynamics"]["integrator"]
        self.coeffs = load_coefficients(
            config["dynamics"]["coefficients"], config["dynamics"]["overrides"]
        )
        self.limits = CONTROL_LIMITS
        self.spec = FormationSpec.from_config(config["formation"])
        self.weights = RewardWeights.from_config(config["rewards"])
        self.max_steps = config["episode"]["max_steps"] if max_steps is None else max_steps
        self.target_radius = config["arena"]["target_radius"]

        self.slots = agent_slots(config)
        self.names = tuple(slot.name for slot in self.slots)
        self.followers = tuple(slot for slot in self.slots if slot.role == "follower")
        self.states = dict(
            (slot.name, VehicleState.create(*slot.start)) for slot in self.slots
        )

        scenario_rng = seeding.stream(seed, "scenario", episode)
        self.target = sample_target(config["arena"], scenario_rng)
        self.obstacles = scenario_obstacles(
            config,
            [slot.start[:2] for slot in self.slots],
            self.target,
            scenario_rng,
            episode,
        )

        disturbances = config["disturbances"]
        current_cfg = disturbances["current"]
        delay_cfg = disturbances["delay"]
        nav_cfg = disturbances["nav_error"]
        if not perturbed:
            current_cfg, delay_cfg, nav_cfg = (
                _disabled(current_cfg),
                _disabled(delay_cfg),
                _disabled(nav_cfg),
            )
        self.current = CurrentModel.from_config(current_cfg)
        self.current_sample = None
        self._current_rng = seeding.stream(seed, "current", episode)
        self.nav = dict(
            (slot.name, NavErrorModel.from_config(nav_cfg)) for slot in self.slots
        )
        self._nav_rng = dict(
            (slot.name, seeding.stream(seed, "nav_error", episode, index))
            for index, slot in enumerate(self.slots)
        )

        self.step_index = 0
        self.t = 0.0
        self.traces = {"current": [], "nav_error": [], "delay": []}
        self.measured = self._measure()

        # Leader -> follower links, and follower -> leader links for the
        # circumscribed-circle term of approach 2.
        self.channels = {}
        self._delay_rng = {}
        links = [(LEADER, slot.name) for slot in self.followers]
        if self.approach == 2:
            links.extend((slot.name, LEADER) for slot in self.followers)
        for index, (sender, receiver) in enumerate(links):
            self.channels[(sender, receiver)] = DelayChannel(
                self.measured[sender],
                sigma=delay_cfg["sigma"],
                truncation=delay_cfg["truncation"],
                grid=self.dt,
                enabled=delay_cfg["enabled"],
            )
            self._delay_rng[(sender, receiver)] = seeding.stream(seed, "delay", episode, index)

        self.controls = dict((name, None) for name in self.names)
        self.done = target_reached(self)
        self.cause = TARGET_REACHED if self.done else None
        self.observations = self._observe()

    @property
    def leader(self):
        return self.states[LEADER]

    def _measure(self):
        measured = {}
        for name in self.names:
            model = self.nav[name]
            measured[name] = apply_nav_error(model, self.states[name], self._nav_rng[name])
            if model.enabled:
                self.traces["nav_error"].append((self.t, name) + model.errors)
        return measured

    def _received(self, sender, receiver):
        return self.channels[(sender, receiver)].read(self.t)

    def _observe(self):
        observations = {
            LEADER: leader_observation(
                self.measured[LEADER], self.target, self.obstacles, self.spec
            )
        }
        for slot in self.followers:
            observations[slot.name] = follower_observation(
                self.measured[slot.name],
                self._received(LEADER, slot.name),
                self.spec,
                self.approach,
                lambda_desired=slot.lambda_desired,
                obstacles=self.obstacles,
            )
        return observations

    def _components(self, controls):
        spec = self.spec
        positions = dict((name, self.states[name].position) for name in self.names)
        components = {}
        for slot in self.slots:
            name = slot.name
            state = self.states[name]
            others = [positions[other] for other in self.names if other != name]
            collision = collision_penalty(state.position, others, spec.shell_radius, spec.d_safe)
            effort = reward_effort(controls[name])
            if slot.role == "leader":
                if self.approach == 2 and len(self.followers) == 2:
                    received = [
                        self._received(f.name, LEADER).position for f in self.followers
                    ]
                    obstacle = reward_obstacle_a2(
                        state.position, received, self.obstacles, spec.d_safe, spec.r_det
                    )
                else:
                    obstacle = reward_obstacle_a1(
                        state.position, self.obstacles, spec.shell_radius, spec.d_safe, spec.r_det
                    )
                components[name] = RewardComponents.create(
                    target=reward_target(bearing(state.position, self.target), state.psi),
                    obstacle=obstacle,
                    collision=collision,
                    effort=effort,
                )
            else:
                leader = self.states[LEADER]
                e_d = (distance(leader.position, state.position) - spec.d_desired) / spec.d_desired
                obstacle = 0.0
                if self.approach == 1:
                    obstacle = reward_obstacle_a1(
                        state.position, self.obstacles, spec.shell_radius, spec.d_safe, spec.r_det
                    )
                components[name] = RewardComponents.create(
                    formation_distance=reward_formation_distance(e_d),
                    formation_angle=reward_formation_angle(
                        formation_angle(leader, state), slot.lambda_desired
                    ),
                    obstacle=obstacle,
                    collision=collision,
                    effort=effort,
                )
        return components

    def step(self, actions):
        """
        Advance every AUV by one control period.

        Parameters
        ----------
        actions : dict
            Agent name -> `ControlInput`; values outside the actuator
            ranges are clamped here.

        Returns
        -------
        StepOutcome

        Raises
        ------
        ContractViolation
            The episode already ended or an agent has no action.
        SimulationFault
            Non-finite dynamics, tagged with the agent name and step index.
        """
        if self.done:
            raise ContractViolation("Episode already terminated (%s)" % self.cause)
        missing = [name for name in self.names if name not in actions]
        if missing:
            raise ContractViolation("No action for %s" % ", ".join(missing))
        controls = dict((name, saturate(actions[name], self.limits)) for name in self.names)

        current = None
        if self.current.enabled:
            current = sample_current(self.current, self._current_rng)
            self.traces["current"].append((self.t, current.speed, current.direction))
        self.current_sample = current

        next_states = {}
        for name in self.names:
            try:
                next_states[name] = integrate_step(
                    self.states[name],
                    controls[name],
                    self.coeffs,
                    current,
                    self.dt,
                    method=self.integrator,
                    limits=self.limits,
                )
            except SimulationFault as e:
                e.agent = name
                e.step = self.step_index
                raise
        self.states = next_states
        self.controls = controls
        self.step_index += 1
        self.t = round(self.step_index * self.dt, 12)

        self.measured = self._measure()
        for (sender, receiver), channel in sorted(self.channels.items()):
            delay = channel.send(
                self.measured[sender], self.t, self._delay_rng[(sender, receiver)]
            )
            if channel.enabled:
                self.traces["delay"].append((self.t, delay, "%s->%s" % (sender, receiver)))
        self.observations = self._observe()

        components = self._components(controls)
        rewards = {}
        for slot in self.slots:
            if slot.role == "leader":
                rewards[slot.name] = leader_total_reward(components[slot.name], self.weights)
            else:
                rewards[slot.name] = follower_total_reward(
                    components[slot.name], self.weights.for_follower(self.approach), self.approach
                )

        if target_reached(self):
            self.done, self.cause = True, TARGET_REACHED
        elif self.step_index >= self.max_steps:
            self.done, self.cause = True, STEP_LIMIT
        return StepOutcome(
            self.observations, rewards, components, controls, self.done, self.cause
        )

    def formation_errors(self):
        """Follower name -> (d_FL - d_desired (m), wrapped angle error (rad))
           on true states.
        """
        leader = self.leader
        errors = {}
        for slot in self.followers:
            state = self.states[slot.name]
            errors[slot.name] = (
                distance(leader.position, state.position) - self.spec.d_desired,
                wrap_angle(formation_angle(leader, state) - slot.lambda_desired),
            )
        return errors

    def obstacle_clearance(self):
        """Smallest gap between any AUV shell and any obstacle disc (m);
           negative means overlap, ``None`` without obstacles.
        """
        if not self.obstacles:
            return None
        return min(
            distance(state.position, ob.center) - ob.radius - self.spec.shell_radius
            for state in self.states.values()
            for ob in self.obstacles
        )

    def circle_clearance(self):
        """Gap between the formation's circumscribed circle and the nearest
           obstacle disc, ``None`` unless three AUVs and obstacles exist.
        """
        if not self.obstacles or len(self.followers) != 2:
            return None
        center, radius = enclosing_circle(*(self.states[name].position for name in self.names))
        return min(distance(center, ob.center) - ob.radius - radius for ob in self.obstacles)

    def collisions(self):
        """Number of AUV pairs whose shells overlap."""
        positions = [self.states[name].position for name in self.names]
        count = 0
        for i in range(len(positions)):
            for j in range(i + 1, len(positions)):
                if distance(positions[i], positions[j]) < 2.0 * self.spec.shell_radius:
                    count += 1
        return count


def target_reached(world):
    return distance(world.leader.position, world.target) <= world.target_radius


def reset_scenario(config, rng_seed, episode=0, perturbed=True, max_steps=None):
    """Build the world of episode `episode` and return it with the initial
       per-agent observations. Everything random derives from
       (`rng_seed`, `episode`).
    """
    world = World(config, rng_seed, episode, perturbed=perturbed, max_steps=max_steps)
    return world, world.observations


def step(world, actions):
    return world.step(actions)
