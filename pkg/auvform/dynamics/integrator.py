"""Fixed-step time integration of the vehicle model with zero-order-hold
controls.
"""
import logging

import numpy as np

from ..exceptions import ContractViolation, SimulationFault
from .model import state_derivative
from .state import CONTROL_LIMITS, VehicleState


__all__ = ("integrate_step", "INTEGRATORS")

logger = logging.getLogger(__name__)


def _rk4(z, ctrl, coeffs, current, dt):
    k1 = state_derivative(z, ctrl, coeffs, current)
    k2 = state_derivative(z + 0.5 * dt * k1, ctrl, coeffs, current)
    k3 = state_derivative(z + 0.5 * dt * k2, ctrl, coeffs, current)
    k4 = state_derivative(z + dt * k3, ctrl, coeffs, current)
    return z + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _euler(z, ctrl, coeffs, current, dt):
    return z + dt * state_derivative(z, ctrl, coeffs, current)


INTEGRATORS = {
    "rk4": _rk4,
    "euler": _euler,
}


def integrate_step(
    state, ctrl, coeffs, current=None, dt=0.1, method="rk4", limits=CONTROL_LIMITS
):
    """Advance one AUV by `dt` seconds with the control held constant.

    Parameters
    ----------
    state : VehicleState
    ctrl : ControlInput
        Must already be saturated into `limits`.
    coeffs : HydroCoefficients
    current : CurrentSample, optional
        Held constant over the step; its body-frame components follow the
        heading inside the step.
    dt : float
        Step length (s), > 0.
    method : str
        ``"rk4"`` (classical 4th order) or ``"euler"``.
    limits : ControlLimits or None
        Saturation ranges asserted on `ctrl`; ``None`` skips the check (used
        by reference integrations with arbitrary forcing).

    Returns
    -------
    VehicleState
        With psi wrapped to [-pi, pi).

    Raises
    ------
    ContractViolation
        Non-positive dt, unknown method or an unsaturated control.
    SimulationFault
        Non-finite input or result.
    """
    if not dt > 0:
        raise ContractViolation("Integration step must be positive, got %r" % (dt,))
    if limits is not None and not limits.contains(ctrl):
        raise ContractViolation(
            "Control %r outside authorized ranges %r" % (tuple(ctrl), tuple(limits))
        )
    try:
        scheme = INTEGRATORS[method]
    except KeyError:
        raise ContractViolation("Unknown integrator %r" % (method,))
    if not state.is_finite():
        raise SimulationFault("Non-finite state entering step", state=state, control=ctrl)

    z = scheme(state.as_array(), ctrl, coeffs, current, dt)
    if not np.all(np.isfinite(z)):
        logger.error("Integration produced non-finite values from %r", state)
        raise SimulationFault(
            "Non-finite state after %s step of %.3g s" % (method, dt),
            state=state,
            control=ctrl,
        )
    return VehicleState.from_array(z)
