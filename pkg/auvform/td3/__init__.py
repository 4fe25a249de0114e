from .noise import OuState, ou_step, smoothing_noise  # noqa: F401
from .replay import Transition, Batch, ReplayBuffer, store, sample_minibatch  # noqa: F401
from .agent import (  # noqa: F401
    ACTION_DIM,
    Td3Settings,
    AgentNetworks,
    Td3Agent,
    critic_forward,
    target_value,
    critic_update,
    actor_update,
    soft_update,
)
from .trainer import TrainingResult, EpisodeRecord, build_agents, train  # noqa: F401
