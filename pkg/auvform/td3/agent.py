"""
One TD3 learner: an actor, twin critics, their target copies, a replay
memory and an exploration process, owned by a single AUV.

Actions live in normalized units, [-1, 1] per component; `ControlLimits`
maps them onto thrust and rudder.
"""
import logging
from collections import namedtuple

import numpy as np

from .. import seeding
from ..dynamics import CONTROL_LIMITS
from ..exceptions import NotReady
from ..neuralnet import AdamState, adam_step, backward, forward, init
from .noise import OuState, ou_step, smoothing_noise
from .replay import ReplayBuffer, Transition


__all__ = (
    "ACTION_DIM",
    "Td3Settings",
    "AgentNetworks",
    "Td3Agent",
    "critic_forward",
    "target_value",
    "critic_update",
    "actor_update",
    "soft_update",
)

logger = logging.getLogger(__name__)

ACTION_DIM = 2


class Td3Settings(
    namedtuple(
        "BaseTd3Settings",
        (
            "actor_lr",
            "critic_lr",
            "gamma",
            "tau",
            "policy_delay",
            "target_noise_sigma",
            "target_noise_clip",
            "exploration_sigma",
            "ou_alpha",
            "ou_mu",
            "batch_size",
            "memory_size",
            "hidden_sizes",
        ),
    )
):
    """Learner hyper-parameters (the ``td3`` config section)."""

    __slots__ = ()

    @classmethod
    def from_config(cls, td3):
        values = dict((name, td3[name]) for name in cls._fields)
        values["hidden_sizes"] = tuple(int(n) for n in td3["hidden_sizes"])
        return cls(**values)


class AgentNetworks(object):
    """Online and target networks of one agent plus the optimizer state of
       each online network.
    """

    NAMES = (
        "actor",
        "critic1",
        "critic2",
        "actor_target",
        "critic1_target",
        "critic2_target",
    )

    def __init__(
        self, actor, critic1, critic2, actor_target, critic1_target, critic2_target,
        actor_opt, critic1_opt, critic2_opt,
    ):
        self.actor = actor
        self.critic1 = critic1
        self.critic2 = critic2
        self.actor_target = actor_target
        self.critic1_target = critic1_target
        self.critic2_target = critic2_target
        self.actor_opt = actor_opt
        self.critic1_opt = critic1_opt
        self.critic2_opt = critic2_opt

    @classmethod
    def create(cls, rng, obs_dim, act_dim, hidden_sizes, actor_lr, critic_lr):
        """Fresh networks; targets start as exact copies of the online ones."""
        hidden = list(hidden_sizes)
        actor = init(rng, [obs_dim] + hidden + [act_dim], output_activation="tanh")
        critic1 = init(rng, [obs_dim + act_dim] + hidden + [1])
        critic2 = init(rng, [obs_dim + act_dim] + hidden + [1])
        return cls(
            actor,
            critic1,
            critic2,
            actor.copy(),
            critic1.copy(),
            critic2.copy(),
            AdamState.zeros_like(actor, lr=actor_lr),
            AdamState.zeros_like(critic1, lr=critic_lr),
            AdamState.zeros_like(critic2, lr=critic_lr),
        )

    def network(self, name):
        return getattr(self, name)

    def optimizer(self, name):
        """Adam state of an online network, ``None`` for targets."""
        return getattr(self, name + "_opt", None)

    def is_finite(self):
        return all(self.network(name).is_finite() for name in self.NAMES)

    @property
    def obs_dim(self):
        return self.actor.input_size

    @property
    def act_dim(self):
        return self.actor.output_size


def critic_forward(critic, states, actions):
    """Q(s, a) for a batch; returns the (M,) values and the forward cache."""
    q, cache = forward(critic, np.concatenate([states, actions], axis=1))
    return q[:, 0], cache


def target_value(batch, networks, settings, rng):
    """Clipped double-Q targets with target-policy smoothing.

    y = r + gamma * min(Q1'(s', a'), Q2'(s', a')) with
    a' = clip(actor'(s') + clip(noise), -1, 1); terminal rows get y = r.
    """
    next_actions, _ = forward(networks.actor_target, batch.next_states)
    noise = smoothing_noise(
        rng, next_actions.shape, settings.target_noise_sigma, settings.target_noise_clip
    )
    next_actions = np.clip(next_actions + noise, -1.0, 1.0)
    q1, _ = critic_forward(networks.critic1_target, batch.next_states, next_actions)
    q2, _ = critic_forward(networks.critic2_target, batch.next_states, next_actions)
    bootstrap = batch.rewards + settings.gamma * np.minimum(q1, q2)
    return np.where(batch.dones, batch.rewards, bootstrap)


def _critic_step(critic, optimizer, batch, y):
    q, cache = critic_forward(critic, batch.states, batch.actions)
    residual = y - q
    loss = float(np.mean(residual * residual))
    grad_q = (-2.0 / len(y)) * residual
    grads, _ = backward(critic, cache, grad_q[:, np.newaxis])
    adam_step(critic, grads, optimizer)
    return loss


def critic_update(networks, batch, y):
    """One Adam step on each critic's mean squared Bellman error. Returns
       the two losses measured before the step.
    """
    loss1 = _critic_step(networks.critic1, networks.critic1_opt, batch, y)
    loss2 = _critic_step(networks.critic2, networks.critic2_opt, batch, y)
    return loss1, loss2


def actor_update(networks, batch):
    """One Adam ascent step of the actor on mean Q1(s, actor(s)). The
       critic only supplies gradients and stays unchanged. Returns the
       objective before the step.
    """
    actions, actor_cache = forward(networks.actor, batch.states)
    q, critic_cache = critic_forward(networks.critic1, batch.states, actions)
    m = len(q)
    _, grad_input = backward(
        networks.critic1, critic_cache, np.full((m, 1), -1.0 / m)
    )
    grad_actions = grad_input[:, networks.obs_dim:]
    grads, _ = backward(networks.actor, actor_cache, grad_actions)
    adam_step(networks.actor, grads, networks.actor_opt)
    return float(np.mean(q))


def soft_update(online, target, tau):
    """target <- tau * online + (1 - tau) * target, in place."""
    for p, t in zip(online.arrays(), target.arrays()):
        t *= 1.0 - tau
        t += tau * p
    target.touch()
    return target


class Td3Agent(object):
    """
    A TD3 learner bound to one AUV of the formation.

    Parameters
    ----------
    name : str
        Agent name, e.g. ``"follower_left"``.
    role : str
        ``"leader"`` or ``"follower"``.
    obs_dim : int
    settings : Td3Settings
    seed : int
        Base seed; the agent derives its own initialization, exploration
        and learner streams from it and `index`.
    index : int
        Position of the agent in the formation.
    networks : AgentNetworks, optional
        Restored networks, e.g. from a checkpoint.
    """

    def __init__(
        self, name, role, obs_dim, settings, seed, index, networks=None, limits=CONTROL_LIMITS
    ):
        self.name = name
        self.role = role
        self.settings = settings
        self.limits = limits
        if networks is None:
            networks = AgentNetworks.create(
                seeding.stream(seed, "init", index),
                obs_dim,
                ACTION_DIM,
                settings.hidden_sizes,
                settings.actor_lr,
                settings.critic_lr,
            )
        self.networks = networks
        self.obs_dim = networks.obs_dim
        self.act_dim = networks.act_dim
        self.buffer = ReplayBuffer(settings.memory_size, self.obs_dim, self.act_dim)
        self.explore_rng = seeding.stream(seed, "exploration", index)
        self.learn_rng = seeding.stream(seed, "learner", index)
        self.noise = OuState.constant(self.act_dim, settings.ou_mu)
        self.learn_steps = 0

    def __repr__(self):
        return "Td3Agent(%r, role=%r, obs_dim=%d, learn_steps=%d)" % (
            self.name,
            self.role,
            self.obs_dim,
            self.learn_steps,
        )

    def reset_noise(self):
        self.noise = OuState.constant(self.act_dim, self.settings.ou_mu)

    @property
    def warming_up(self):
        return self.buffer.fill < self.settings.batch_size

    def select_action(self, observation, explore=False):
        """Normalized action in [-1, 1]^2 and the matching `ControlInput`.

        With `explore` the OU process advances one step and its value is
        added to the policy output before clamping.
        """
        action, _ = forward(self.networks.actor, np.asarray(observation, dtype=np.float64))
        if explore:
            s = self.settings
            self.noise = ou_step(
                self.noise, s.ou_alpha, s.ou_mu, s.exploration_sigma, self.explore_rng
            )
            action = action + self.noise.value
        action = np.clip(action, -1.0, 1.0)
        return action, self.limits.to_control(action)

    def random_action(self):
        """Uniform random action, used while the replay memory warms up."""
        action = self.explore_rng.uniform(-1.0, 1.0, size=self.act_dim)
        return action, self.limits.to_control(action)

    def remember(self, s, a, r, s_next, done):
        self.buffer.store(
            Transition(np.asarray(s), np.asarray(a), float(r), np.asarray(s_next), done)
        )

    def learn(self):
        """
        One learner step: a critic update and, every `policy_delay` steps,
        an actor update followed by soft target updates.

        Returns
        -------
        dict or None
            Losses of this step (``critic1``, ``critic2`` and, on delayed
            steps, ``actor``), or ``None`` while the memory holds fewer than
            one mini-batch.
        """
        s = self.settings
        try:
            batch = self.buffer.sample_minibatch(s.batch_size, self.learn_rng)
        except NotReady:
            return None
        self.learn_steps += 1
        net = self.networks
        y = target_value(batch, net, s, self.learn_rng)
        loss1, loss2 = critic_update(net, batch, y)
        losses = {"critic1": loss1, "critic2": loss2}
        if self.learn_steps % s.policy_delay == 0:
            losses["actor"] = actor_update(net, batch)
            soft_update(net.actor, net.actor_target, s.tau)
            soft_update(net.critic1, net.critic1_target, s.tau)
            soft_update(net.critic2, net.critic2_target, s.tau)
        return losses
