from .mlp import MlpParameters, ForwardCache, init, forward, backward  # noqa: F401
from .adam import AdamState, adam_step  # noqa: F401
from .storage import (  # noqa: F401
    write_network,
    read_network,
    serialize_network,
    deserialize_network,
)
