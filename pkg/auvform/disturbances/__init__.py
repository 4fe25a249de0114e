from .ar1 import Ar1Process, ar1_step  # noqa: F401
from .current import CurrentModel, sample_current  # noqa: F401
from .delay import DelayChannel, sample_delay  # noqa: F401
from .navigation import NavErrorModel, apply_nav_error  # noqa: F401
