from .coefficients import HydroCoefficients, REMUS_3DOF, load_coefficients  # noqa: F401
from .state import (  # noqa: F401
    VehicleState,
    ControlInput,
    ControlLimits,
    CurrentSample,
    CONTROL_LIMITS,
    saturate,
)
from .model import (  # noqa: F401
    mass_matrix,
    force_vector,
    compute_accelerations,
    kinematics_rates,
    body_frame_current,
)
from .integrator import integrate_step  # noqa: F401
