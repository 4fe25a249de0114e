"""
Leader-follower formation motion planning for under-actuated AUVs: a 3-DOF
vehicle simulator, a TD3 learner built on a small numpy MLP engine, two
obstacle-avoidance reward schemes and ocean/communication/navigation
perturbation models.
"""

# The version number of the most recent pyFormation release.
__version__ = "0.3.0"

# Magic bytes opening every agent checkpoint file.
CHECKPOINT_MAGIC = b"AUVF"

# The checkpoint container version written by this release. Readers accept
# every version listed in SUPPORTED_CHECKPOINT_VERSIONS.
CHECKPOINT_FORMAT_VERSION = 1
SUPPORTED_CHECKPOINT_VERSIONS = (1,)

# Version byte of a single serialized network block (weights, biases and,
# optionally, its Adam state).
NETWORK_FORMAT_VERSION = 1
