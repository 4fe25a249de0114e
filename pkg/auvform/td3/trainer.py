"""
The training loop: every AUV of the formation learns with its own TD3
instance while the shared world is the only synchronization point.
"""
import logging
import math
from collections import deque, namedtuple
from concurrent.futures import ThreadPoolExecutor

from ..environment.observations import observation_size
from ..environment.world import TARGET_REACHED, reset_scenario
from ..exceptions import DimensionMismatch, TrainingDiverged
from .agent import Td3Agent, Td3Settings


__all__ = (
    "AVERAGE_WINDOW",
    "EpisodeRecord",
    "TrainingResult",
    "build_agents",
    "trajectory_rows",
    "train",
)

logger = logging.getLogger(__name__)

# Episodes in the running average reported next to each return.
AVERAGE_WINDOW = 100


EpisodeRecord = namedtuple("EpisodeRecord", ("episode", "steps", "cause", "returns", "averages"))


class TrainingResult(object):
    """
    What `train` hands back.

    :ivar agents: `dict` agent name -> trained `Td3Agent`.
    :ivar log: `list` of `EpisodeRecord`, one per finished episode.
    :ivar trajectory: Trajectory rows of the last episode (see
                      `trajectory_rows`).
    :ivar observations: `dict` agent name -> list of (t, Observation) of the
                        last episode.
    :ivar status: ``"completed"`` or ``"diverged"``.
    :ivar error: The `TrainingDiverged` that stopped training, if any.
    """

    def __init__(self, agents):
        self.agents = agents
        self.log = []
        self.trajectory = []
        self.observations = dict((name, []) for name in agents)
        self.status = "completed"
        self.error = None

    @property
    def completed(self):
        return self.status == "completed"


def build_agents(config, seed, networks=None):
    """One fresh `Td3Agent` per AUV of the scenario, leader first.

    `networks` optionally maps agent names to restored `AgentNetworks`;
    their widths must match the scenario.
    """
    from ..environment.scenario import agent_slots

    settings = Td3Settings.from_config(config["td3"])
    k = config["formation"]["obstacle_slots"]
    agents = {}
    for index, slot in enumerate(agent_slots(config)):
        obs_dim = observation_size(slot.role, config["approach"], k)
        restored = (networks or {}).get(slot.name)
        if restored is not None and restored.obs_dim != obs_dim:
            raise DimensionMismatch(
                "%s: checkpoint observation width %d, scenario needs %d"
                % (slot.name, restored.obs_dim, obs_dim),
                expected=obs_dim,
                found=restored.obs_dim,
            )
        agents[slot.name] = Td3Agent(
            slot.name, slot.role, obs_dim, settings, seed, index, networks=restored
        )
    return agents


def trajectory_rows(world, outcome):
    """One row per agent after a step: t, agent, pose, velocities, applied
       controls and reward.
    """
    rows = []
    for name in world.names:
        state = world.states[name]
        ctrl = outcome.controls[name]
        rows.append(
            (world.t, name) + tuple(state) + (ctrl.x_prop, ctrl.delta_r, outcome.rewards[name])
        )
    return rows


def _check_finite(agent, losses, episode, step):
    bad = [key for key, value in losses.items() if not math.isfinite(value)]
    if bad or not agent.networks.is_finite():
        what = "loss %s" % ", ".join(sorted(bad)) if bad else "network parameters"
        raise TrainingDiverged(
            "Non-finite %s" % what, agent=agent.name, episode=episode, step=step
        )


def _learn(agent):
    return agent.learn()


def train(config, seed, episodes=None, agents=None, record_last=True):
    """
    Train every agent of the scenario.

    Parameters
    ----------
    config : dict
        Resolved configuration.
    seed : int
        Base seed; scenarios, exploration and learners derive from it.
    episodes : int, optional
        Overrides ``td3.episodes``.
    agents : dict, optional
        Pre-built agents (e.g. resumed from checkpoints).
    record_last : bool
        Keep the trajectory and observations of the final episode.

    Returns
    -------
    TrainingResult
        On divergence the result is returned with ``status="diverged"`` and
        the error attached; nothing is raised.
    """
    if episodes is None:
        episodes = config["td3"]["episodes"]
    if agents is None:
        agents = build_agents(config, seed)
    result = TrainingResult(agents)
    perturbed = config["disturbances"]["train"]
    log_every = config["td3"]["log_every"]
    history = dict((name, deque(maxlen=AVERAGE_WINDOW)) for name in agents)
    pool = None
    if config["td3"]["parallel_learners"] and len(agents) > 1:
        pool = ThreadPoolExecutor(max_workers=len(agents))

    try:
        for episode in range(episodes):
            last = record_last and episode == episodes - 1
            try:
                record = _run_episode(config, seed, episode, agents, perturbed, pool, result, last)
            except TrainingDiverged as e:
                logger.error("Training diverged: %s", e)
                result.status = "diverged"
                result.error = e
                break
            for name, value in record.returns.items():
                history[name].append(value)
            record = record._replace(
                averages=dict(
                    (name, sum(values) / len(values)) for name, values in history.items()
                )
            )
            result.log.append(record)
            if (episode + 1) % log_every == 0 or episode == episodes - 1:
                logger.info(
                    "Episode %d/%d: %d steps (%s), %s",
                    episode + 1,
                    episodes,
                    record.steps,
                    record.cause,
                    ", ".join(
                        "%s %.2f (avg %.2f)" % (name, record.returns[name], record.averages[name])
                        for name in agents
                    ),
                )
    finally:
        if pool is not None:
            pool.shutdown(wait=True)
    return result


def _run_episode(config, seed, episode, agents, perturbed, pool, result, record):
    world, observations = reset_scenario(config, seed, episode, perturbed=perturbed)
    for agent in agents.values():
        agent.reset_noise()
    returns = dict((name, 0.0) for name in agents)
    if record:
        for name in agents:
            result.observations[name].append((world.t, observations[name]))

    while not world.done:
        actions, controls = {}, {}
        for name, agent in agents.items():
            if agent.warming_up:
                actions[name], controls[name] = agent.random_action()
            else:
                actions[name], controls[name] = agent.select_action(
                    observations[name].values, explore=True
                )
        outcome = world.step(controls)
        # Only reaching the target ends the task; running out of steps is a
        # truncation and keeps bootstrapping.
        done = outcome.cause == TARGET_REACHED
        for name, agent in agents.items():
            agent.remember(
                observations[name].values,
                actions[name],
                outcome.rewards[name],
                outcome.observations[name].values,
                done,
            )
            returns[name] += outcome.rewards[name]

        if pool is not None:
            all_losses = list(pool.map(_learn, agents.values()))
        else:
            all_losses = [agent.learn() for agent in agents.values()]
        for agent, losses in zip(agents.values(), all_losses):
            if losses is not None:
                _check_finite(agent, losses, episode, world.step_index)

        observations = outcome.observations
        if record:
            result.trajectory.extend(trajectory_rows(world, outcome))
            for name in agents:
                result.observations[name].append((world.t, observations[name]))

    return EpisodeRecord(episode, world.step_index, world.cause, returns, None)
