"""
Agent checkpoint files.

Byte layout (all integers big-endian; types from `auvform.serialization`)::

    FixedBytes(4)   magic b"AUVF"
    UnsignedShort   container version (CHECKPOINT_FORMAT_VERSION)
    String          agent name
    String          role ("leader" | "follower")
    UnsignedByte    approach (1 | 2)
    VarInt          observation width
    VarInt          action width
    FixedBytes(32)  SHA-256 of the resolved configuration
    VarInt          learner steps taken
    DoubleArray     OU noise state
    6 x (String network name, network block)
                    actor, critic1, critic2 with Adam state;
                    actor_target, critic1_target, critic2_target without
    FixedBytes(32)  SHA-256 of every preceding byte
"""
import hashlib
import logging
from collections import namedtuple

from . import CHECKPOINT_FORMAT_VERSION, CHECKPOINT_MAGIC, SUPPORTED_CHECKPOINT_VERSIONS
from .exceptions import DimensionMismatch, IntegrityError, VersionMismatch
from .neuralnet import read_network, write_network
from .recording import atomic_write_bytes
from .serialization import (
    ByteBuffer,
    DoubleArray,
    FixedBytes,
    String,
    UnsignedByte,
    UnsignedShort,
    VarInt,
)
from .td3.agent import AgentNetworks
from .td3.noise import OuState


__all__ = (
    "Checkpoint",
    "checkpoint_bytes",
    "checkpoint_write",
    "parse_checkpoint",
    "checkpoint_read",
    "checkpoint_from_agent",
    "restore_agent_state",
)

logger = logging.getLogger(__name__)

DIGEST_SIZE = 32
_MAGIC = FixedBytes(len(CHECKPOINT_MAGIC))
_DIGEST = FixedBytes(DIGEST_SIZE)


Checkpoint = namedtuple(
    "Checkpoint",
    (
        "name",
        "role",
        "approach",
        "obs_dim",
        "act_dim",
        "config_hash",
        "learn_steps",
        "noise",
        "networks",
    ),
)


def checkpoint_from_agent(agent, approach, config_hash):
    return Checkpoint(
        agent.name,
        agent.role,
        approach,
        agent.obs_dim,
        agent.act_dim,
        config_hash,
        agent.learn_steps,
        OuState(agent.noise.value),
        agent.networks,
    )


def restore_agent_state(agent, checkpoint):
    """Carry the learner counter and noise state of `checkpoint` over to an
       agent built around its networks.
    """
    agent.learn_steps = checkpoint.learn_steps
    agent.noise = OuState(checkpoint.noise.value)
    return agent


def checkpoint_bytes(checkpoint):
    buffer = ByteBuffer()
    _MAGIC.send(CHECKPOINT_MAGIC, buffer)
    UnsignedShort.send(CHECKPOINT_FORMAT_VERSION, buffer)
    String.send(checkpoint.name, buffer)
    String.send(checkpoint.role, buffer)
    UnsignedByte.send(checkpoint.approach, buffer)
    VarInt.send(checkpoint.obs_dim, buffer)
    VarInt.send(checkpoint.act_dim, buffer)
    _DIGEST.send(checkpoint.config_hash, buffer)
    VarInt.send(checkpoint.learn_steps, buffer)
    DoubleArray.send(checkpoint.noise.value, buffer)
    networks = checkpoint.networks
    for name in AgentNetworks.NAMES:
        String.send(name, buffer)
        write_network(buffer, networks.network(name), networks.optimizer(name))
    body = buffer.get_writable()
    return body + hashlib.sha256(body).digest()


def checkpoint_write(path, checkpoint):
    atomic_write_bytes(path, checkpoint_bytes(checkpoint))
    logger.info("Saved checkpoint of %s to %s", checkpoint.name, path)


def parse_checkpoint(data, source="<checkpoint>"):
    """
    Decode checkpoint bytes.

    Raises
    ------
    IntegrityError
        Bad magic, digest mismatch, truncation or inconsistent content.
    VersionMismatch
        Container version not in `SUPPORTED_CHECKPOINT_VERSIONS`.
    """
    buffer = ByteBuffer(data)
    magic = _MAGIC.read(buffer)
    if magic != CHECKPOINT_MAGIC:
        raise IntegrityError("%s: not a checkpoint (magic %r)" % (source, magic))
    version = UnsignedShort.read(buffer)
    if version not in SUPPORTED_CHECKPOINT_VERSIONS:
        raise VersionMismatch(
            "%s: unsupported checkpoint version %d (supported: %s)"
            % (source, version, ", ".join(map(str, SUPPORTED_CHECKPOINT_VERSIONS))),
            expected=SUPPORTED_CHECKPOINT_VERSIONS,
            found=version,
        )
    if len(data) < DIGEST_SIZE + 6:
        raise IntegrityError("%s: truncated checkpoint" % source)
    body, digest = data[:-DIGEST_SIZE], data[-DIGEST_SIZE:]
    if hashlib.sha256(body).digest() != digest:
        raise IntegrityError("%s: checksum mismatch, file is corrupt" % source)

    buffer = ByteBuffer(body)
    buffer.read(len(CHECKPOINT_MAGIC) + 2)
    name = String.read(buffer)
    role = String.read(buffer)
    approach = UnsignedByte.read(buffer)
    obs_dim = VarInt.read(buffer)
    act_dim = VarInt.read(buffer)
    config_hash = _DIGEST.read(buffer)
    learn_steps = VarInt.read(buffer)
    noise = OuState(DoubleArray.read(buffer))
    blocks = {}
    for expected in AgentNetworks.NAMES:
        found = String.read(buffer)
        if found != expected:
            raise IntegrityError(
                "%s: expected network %r, found %r" % (source, expected, found)
            )
        blocks[expected] = read_network(buffer)
    if buffer.remaining():
        raise IntegrityError("%s: %d unexpected trailing bytes" % (source, buffer.remaining()))

    networks = AgentNetworks(
        blocks["actor"][0],
        blocks["critic1"][0],
        blocks["critic2"][0],
        blocks["actor_target"][0],
        blocks["critic1_target"][0],
        blocks["critic2_target"][0],
        blocks["actor"][1],
        blocks["critic1"][1],
        blocks["critic2"][1],
    )
    if networks.obs_dim != obs_dim or networks.act_dim != act_dim:
        raise IntegrityError(
            "%s: header widths %d/%d disagree with the actor %d/%d"
            % (source, obs_dim, act_dim, networks.obs_dim, networks.act_dim)
        )
    return Checkpoint(
        name, role, approach, obs_dim, act_dim, config_hash, learn_steps, noise, networks
    )


def checkpoint_read(path, expected_hash=None, expected_obs_dim=None):
    """
    Load a checkpoint file.

    Parameters
    ----------
    path : str
    expected_hash : bytes, optional
        Hash of the configuration the checkpoint is about to be used with;
        a difference is only logged.
    expected_obs_dim : int, optional
        Observation width of the scenario.

    Raises
    ------
    DimensionMismatch
        The stored observation width differs from `expected_obs_dim`.
    """
    with open(path, "rb") as f:
        data = f.read()
    checkpoint = parse_checkpoint(data, source=path)
    if expected_hash is not None and expected_hash != checkpoint.config_hash:
        logger.warning(
            "%s was trained under a different configuration (hash %s, now %s)",
            path,
            checkpoint.config_hash.hex()[:12],
            expected_hash.hex()[:12],
        )
    if expected_obs_dim is not None and expected_obs_dim != checkpoint.obs_dim:
        raise DimensionMismatch(
            "%s: %s checkpoint expects observation width %d, scenario provides %d"
            % (path, checkpoint.name, checkpoint.obs_dim, expected_obs_dim),
            expected=expected_obs_dim,
            found=checkpoint.obs_dim,
        )
    return checkpoint
