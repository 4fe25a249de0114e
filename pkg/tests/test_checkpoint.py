import os
import tempfile
import unittest

import numpy as np

from auvform import CHECKPOINT_MAGIC
from auvform.checkpoint import (
    checkpoint_bytes,
    checkpoint_from_agent,
    checkpoint_read,
    checkpoint_write,
    parse_checkpoint,
    restore_agent_state,
)
from auvform.config import config_hash, resolve_config
from auvform.exceptions import DimensionMismatch, IntegrityError, VersionMismatch
from auvform.td3 import AgentNetworks, Td3Agent, Td3Settings


def trained_agent(steps=5):
    config = resolve_config({"name": "ckpt", "approach": 1})
    settings = Td3Settings.from_config(config["td3"])._replace(
        hidden_sizes=(6, 5), batch_size=4, memory_size=50
    )
    agent = Td3Agent("leader", "leader", 9, settings, seed=2, index=0)
    rng = np.random.default_rng(0)
    for _ in range(10):
        agent.remember(rng.normal(size=9), rng.uniform(-1, 1, 2), -1.0, rng.normal(size=9), False)
    for _ in range(steps):
        agent.learn()
    agent.select_action(np.zeros(9), explore=True)
    return agent, config_hash(config)


class CheckpointTest(unittest.TestCase):
    def setUp(self):
        self.agent, self.digest = trained_agent()
        self.data = checkpoint_bytes(checkpoint_from_agent(self.agent, 1, self.digest))
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, "leader.ckpt")

    def tearDown(self):
        self.tmp.cleanup()

    def test_layout(self):
        self.assertEqual(self.data[:4], CHECKPOINT_MAGIC)
        self.assertEqual(self.data[4:6], b"\x00\x01")

    def test_bitwise_round_trip(self):
        checkpoint = parse_checkpoint(self.data)
        self.assertEqual(checkpoint_bytes(checkpoint), self.data)
        self.assertEqual(checkpoint.name, "leader")
        self.assertEqual(checkpoint.role, "leader")
        self.assertEqual((checkpoint.obs_dim, checkpoint.act_dim), (9, 2))
        self.assertEqual(checkpoint.config_hash, self.digest)
        self.assertEqual(checkpoint.learn_steps, 5)
        np.testing.assert_array_equal(checkpoint.noise.value, self.agent.noise.value)
        for name in AgentNetworks.NAMES:
            self.assertTrue(checkpoint.networks.network(name).equals(
                self.agent.networks.network(name)
            ))
        for name in ("actor", "critic1", "critic2"):
            self.assertTrue(checkpoint.networks.optimizer(name).equals(
                self.agent.networks.optimizer(name)
            ))

    def test_restored_agent_acts_identically(self):
        checkpoint = parse_checkpoint(self.data)
        clone = Td3Agent(
            "leader", "leader", 9, self.agent.settings, seed=99, index=0,
            networks=checkpoint.networks,
        )
        restore_agent_state(clone, checkpoint)
        self.assertEqual(clone.learn_steps, 5)
        obs = np.linspace(-2, 2, 9)
        np.testing.assert_array_equal(
            clone.select_action(obs)[0], self.agent.select_action(obs)[0]
        )

    def test_file_round_trip(self):
        checkpoint_write(self.path, checkpoint_from_agent(self.agent, 1, self.digest))
        self.assertEqual(os.listdir(self.tmp.name), ["leader.ckpt"])
        with open(self.path, "rb") as f:
            self.assertEqual(f.read(), self.data)
        self.assertEqual(checkpoint_read(self.path, self.digest, 9).learn_steps, 5)

    def test_corruption_detected(self):
        tampered = bytearray(self.data)
        tampered[len(tampered) // 2] ^= 0x01
        with self.assertRaises(IntegrityError):
            parse_checkpoint(bytes(tampered))
        with self.assertRaises(IntegrityError):
            parse_checkpoint(self.data[:-1])
        with self.assertRaises(IntegrityError):
            parse_checkpoint(self.data[:10])
        with self.assertRaises(IntegrityError):
            parse_checkpoint(b"NOPE" + self.data[4:])

    def test_unsupported_version(self):
        data = self.data[:4] + b"\x00\x07" + self.data[6:]
        with self.assertRaises(VersionMismatch) as caught:
            parse_checkpoint(data)
        self.assertEqual(caught.exception.found, 7)

    def test_dimension_mismatch(self):
        checkpoint_write(self.path, checkpoint_from_agent(self.agent, 1, self.digest))
        with self.assertRaises(DimensionMismatch) as caught:
            checkpoint_read(self.path, expected_obs_dim=11)
        self.assertEqual(caught.exception.expected, 11)
        self.assertEqual(caught.exception.found, 9)
        self.assertIn("9", str(caught.exception))
        self.assertIn("11", str(caught.exception))

    def test_hash_mismatch_only_warns(self):
        checkpoint_write(self.path, checkpoint_from_agent(self.agent, 1, self.digest))
        with self.assertLogs("auvform.checkpoint", level="WARNING") as logs:
            checkpoint = checkpoint_read(self.path, expected_hash=b"\x00" * 32)
        self.assertIn("different configuration", logs.output[0])
        self.assertEqual(checkpoint.obs_dim, 9)
