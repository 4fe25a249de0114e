import logging
import time

from .. import __version__
from ..checkpoint import checkpoint_from_agent, checkpoint_write
from ..config import config_hash
from ..environment.observations import observation_labels
from ..recording import (
    observation_columns,
    observation_rows,
    reward_columns,
    reward_rows,
    write_csv,
    write_json,
    write_trajectory,
)
from ..td3 import build_agents, train
from .artifacts import RunArtifacts


__all__ = ("run_training",)

logger = logging.getLogger(__name__)


def run_training(config, out_dir, episodes=None):
    """
    Train the scenario of `config` and write every artifact under `out_dir`.

    Returns
    -------
    (RunArtifacts, TrainingResult)
        The result's status is ``"diverged"`` when training stopped early;
        the artifacts written up to that point are then flagged
        ``"aborted"`` in ``metadata.json``.
    """
    artifacts = RunArtifacts(out_dir).prepare()
    seed = config["seed"]
    digest = config_hash(config)
    write_json(artifacts.config, config)

    started = time.time()
    agents = build_agents(config, seed)
    logger.info(
        "Training %s (approach %d, %d agents, seed %d) into %s",
        config["name"],
        config["approach"],
        len(agents),
        seed,
        out_dir,
    )
    result = train(config, seed, episodes=episodes, agents=agents)
    elapsed = time.time() - started

    names = list(agents)
    write_csv(artifacts.rewards, reward_columns(names), reward_rows(result.log, names))
    write_trajectory(artifacts.trajectory, result.trajectory)
    k = config["formation"]["obstacle_slots"]
    for name, agent in agents.items():
        checkpoint_write(
            artifacts.checkpoint(name),
            checkpoint_from_agent(agent, config["approach"], digest),
        )
        labels = observation_labels(agent.role, config["approach"], k)
        write_csv(
            artifacts.observations(name),
            observation_columns(labels),
            observation_rows(result.observations[name]),
        )

    metadata = {
        "name": config["name"],
        "seed": seed,
        "version": __version__,
        "config_hash": digest.hex(),
        "episodes_completed": len(result.log),
        "wall_time_s": round(elapsed, 3),
        "status": "completed" if result.completed else "aborted",
    }
    if result.error is not None:
        metadata["error"] = str(result.error)
    write_json(artifacts.metadata, metadata)
    return artifacts, result
