"""
Noise-free policy rollouts of trained agents, optionally under
perturbations and optionally replayed without them for comparison.
"""
import copy
import logging
import math
import os
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from ..checkpoint import checkpoint_read, restore_agent_state
from ..config import config_hash
from ..environment.observations import observation_size
from ..environment.scenario import agent_slots
from ..environment.world import TARGET_REACHED, reset_scenario
from ..exceptions import IntegrityError
from ..recording import (
    CURRENT_COLUMNS,
    DELAY_COLUMNS,
    EPISODE_COLUMNS,
    NAV_ERROR_COLUMNS,
    write_csv,
    write_json,
    write_trajectory,
)
from ..td3 import Td3Agent, Td3Settings
from ..td3.trainer import trajectory_rows
from .artifacts import RunArtifacts
from .metrics import EpisodeTracker, summarize


__all__ = (
    "EpisodeRun",
    "checkpoint_directory",
    "load_agents",
    "evaluation_config",
    "rollout",
    "evaluate",
    "run_evaluation",
)

logger = logging.getLogger(__name__)


EpisodeRun = namedtuple("EpisodeRun", ("metrics", "trajectory", "traces", "positions"))


def checkpoint_directory(path):
    """Accept either a training output directory or its checkpoints folder."""
    nested = os.path.join(path, "checkpoints")
    return nested if os.path.isdir(nested) else path


def load_agents(config, checkpoint_dir):
    """
    Rebuild one agent per AUV of the scenario from its checkpoint.

    Raises
    ------
    IntegrityError
        A checkpoint file is missing or corrupt.
    DimensionMismatch
        A checkpoint's observation width does not fit the scenario (for
        instance an approach 1 follower evaluated under approach 2).
    """
    directory = checkpoint_directory(checkpoint_dir)
    settings = Td3Settings.from_config(config["td3"])
    digest = config_hash(config)
    k = config["formation"]["obstacle_slots"]
    agents = {}
    for index, slot in enumerate(agent_slots(config)):
        path = os.path.join(directory, "%s.ckpt" % slot.name)
        if not os.path.isfile(path):
            raise IntegrityError("Missing checkpoint for %s: %s" % (slot.name, path))
        checkpoint = checkpoint_read(
            path,
            expected_hash=digest,
            expected_obs_dim=observation_size(slot.role, config["approach"], k),
        )
        agent = Td3Agent(
            slot.name,
            slot.role,
            checkpoint.obs_dim,
            settings._replace(memory_size=1),
            config["seed"],
            index,
            networks=checkpoint.networks,
        )
        agents[slot.name] = restore_agent_state(agent, checkpoint)
    return agents


def evaluation_config(config):
    """`config` with the obstacle curriculum off: every evaluation episode
       carries the scenario obstacles whatever its index.
    """
    if not config["obstacles"]["start_episode"]:
        return config
    config = copy.deepcopy(config)
    config["obstacles"]["start_episode"] = 0
    return config


def rollout(config, agents, seed, episode, max_steps, perturbed=True, record=False):
    """
    Run one deterministic episode (no exploration noise).

    Returns
    -------
    EpisodeRun
        ``positions`` holds the per-step agent positions, used to compare
        perturbed and nominal runs.
    """
    world, observations = reset_scenario(
        evaluation_config(config), seed, episode, perturbed=perturbed, max_steps=max_steps
    )
    tracker = EpisodeTracker(world.spec.d_desired, config["evaluation"]["final_window"])
    trajectory = []
    positions = []
    while not world.done:
        controls = {}
        for name, agent in agents.items():
            _, controls[name] = agent.select_action(observations[name].values, explore=False)
        outcome = world.step(controls)
        observations = outcome.observations
        tracker.observe(world)
        positions.append(dict((name, world.states[name].position) for name in world.names))
        if record:
            trajectory.extend(trajectory_rows(world, outcome))
    metrics = tracker.finish(episode, world.cause == TARGET_REACHED, world.step_index)
    return EpisodeRun(metrics, trajectory, world.traces, positions)


def _deviation(perturbed, nominal):
    gaps = []
    for a, b in zip(perturbed, nominal):
        for name, p in a.items():
            q = b[name]
            gaps.append(math.hypot(p[0] - q[0], p[1] - q[1]))
    if not gaps:
        return (0.0, 0.0)
    return (sum(gaps) / len(gaps), max(gaps))


def evaluate(config, agents, seed, episodes, max_steps, compare_nominal=False, workers=1):
    """
    Evaluate `episodes` seeded episodes.

    Episodes are independent worlds, so with ``workers > 1`` they run on a
    thread pool; results are ordered by episode index either way. Only the
    first episode's trajectory and traces are kept.

    Returns
    -------
    list of EpisodeRun
    """

    def one(episode):
        run = rollout(config, agents, seed, episode, max_steps, record=episode == 0)
        if compare_nominal:
            nominal = rollout(config, agents, seed, episode, max_steps, perturbed=False)
            mean_gap, max_gap = _deviation(run.positions, nominal.positions)
            run = run._replace(
                metrics=run.metrics._replace(
                    path_deviation_mean=mean_gap, path_deviation_max=max_gap
                )
            )
        logger.info(
            "Evaluation episode %d: %s after %d steps",
            episode,
            "reached target" if run.metrics.success else "missed target",
            run.metrics.steps,
        )
        return run._replace(positions=None)

    if workers > 1 and episodes > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, range(episodes)))
    return [one(episode) for episode in range(episodes)]


def run_evaluation(
    config, checkpoint_dir, out_dir, episodes=None, max_steps=None,
    compare_nominal=False, workers=1,
):
    """Load checkpoints, evaluate and write the evaluation artifacts.

    Returns ``(RunArtifacts, metrics dict)``.
    """
    if episodes is None:
        episodes = config["evaluation"]["episodes"]
    if max_steps is None:
        max_steps = config["evaluation"]["max_steps"]
    artifacts = RunArtifacts(out_dir)
    os.makedirs(out_dir, exist_ok=True)
    agents = load_agents(config, checkpoint_dir)
    runs = evaluate(
        config,
        agents,
        config["seed"],
        episodes,
        max_steps,
        compare_nominal=compare_nominal,
        workers=workers,
    )
    metrics = summarize(run.metrics for run in runs)
    write_json(artifacts.metrics, metrics)
    write_csv(artifacts.episodes, EPISODE_COLUMNS, (run.metrics.as_row() for run in runs))
    first = runs[0] if runs else None
    write_trajectory(artifacts.trajectory, first.trajectory if first else [])
    disturbances = config["disturbances"]
    traces = (
        ("current", CURRENT_COLUMNS),
        ("nav_error", NAV_ERROR_COLUMNS),
        ("delay", DELAY_COLUMNS),
    )
    for kind, columns in traces:
        if disturbances[kind]["enabled"]:
            write_csv(artifacts.trace(kind), columns, first.traces[kind] if first else [])
    logger.info(
        "Evaluated %d episodes: success rate %s",
        metrics["episodes"],
        "n/a" if metrics["success_rate"] is None else "%.2f" % metrics["success_rate"],
    )
    return artifacts, metrics
