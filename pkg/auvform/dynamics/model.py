"""3-DOF (surge, sway, yaw) manoeuvring model of an under-actuated AUV.

The equations of motion are kept in the form

    M [u', v', r']^T = f(u, v, r, X_prop, delta_r)

where `M` collects every acceleration-bearing term and `f` holds the
hydrodynamic, fin and propeller forces with the rigid-body velocity products
moved to the right-hand side. With an ocean current the hydrodynamic terms see
the relative velocities u_r = u - u_c and v_r = v - v_c; the rigid-body terms
keep the absolute velocities and r has no current component.
"""
import functools
import math

import numpy as np

from ..exceptions import ConfigurationError, SimulationFault


__all__ = (
    "mass_matrix",
    "force_vector",
    "compute_accelerations",
    "kinematics_rates",
    "body_frame_current",
)

SINGULAR_TOLERANCE = 1e-9


@functools.lru_cache(maxsize=16)
def _cached_mass_matrix(coeffs):
    c = coeffs
    M = np.array(
        [
            [c.m - c.Xudot, 0.0, -c.m * c.yg],
            [0.0, c.m - c.Yvdot, c.m * c.xg - c.Yrdot],
            [-c.m * c.yg, c.m * c.xg - c.Nvdot, c.Iz - c.Nrdot],
        ],
        dtype=np.float64,
    )
    det = np.linalg.det(M)
    if not abs(det) > SINGULAR_TOLERANCE:
        raise ConfigurationError(
            "Effective mass matrix is singular (det=%.3e)" % det,
            field="dynamics.coefficients",
        )
    M_inv = np.linalg.inv(M)
    M.flags.writeable = False
    M_inv.flags.writeable = False
    return M, M_inv


def mass_matrix(coeffs):
    """Effective (rigid body + added) mass matrix of the model.

    Raises
    ------
    ConfigurationError
        |det M| <= 1e-9.
    """
    return _cached_mass_matrix(coeffs)[0]


def body_frame_current(sample, psi):
    """Rotate an earth-frame current into body-frame components (u_c, v_c)."""
    angle = sample.direction - psi
    return sample.speed * math.cos(angle), sample.speed * math.sin(angle)


def _forces(u, v, r, psi, x_prop, delta_r, c, current):
    if current is not None and current.speed > 0.0:
        u_c, v_c = body_frame_current(current, psi)
        u_r, v_r = u - u_c, v - v_c
    else:
        u_r, v_r = u, v

    X = (
        c.Xu_abs_u * abs(u_r) * u_r
        + c.Xvr * v_r * r
        + c.Xrr * r * r
        + x_prop
        + c.m * (v * r + c.xg * r * r)
    )
    Y = (
        c.Yv_abs_v * abs(v_r) * v_r
        + c.Yr_abs_r * abs(r) * r
        + c.Yur * u_r * r
        + c.Yuv * u_r * v_r
        + c.Yuu_dr * u_r * u_r * delta_r
        - c.m * (u * r - c.yg * r * r)
    )
    N = (
        c.Nv_abs_v * abs(v_r) * v_r
        + c.Nr_abs_r * abs(r) * r
        + c.Nur * u_r * r
        + c.Nuv * u_r * v_r
        + c.Nuu_dr * u_r * u_r * delta_r
        - c.m * (c.xg * u * r + c.yg * v * r)
    )
    return np.array([X, Y, N], dtype=np.float64)


def force_vector(state, ctrl, coeffs, current=None):
    """Right-hand side f of the surge, sway and yaw equations."""
    return _forces(
        state.u, state.v, state.r, state.psi, ctrl.x_prop, ctrl.delta_r, coeffs, current
    )


def compute_accelerations(state, ctrl, coeffs, current=None):
    """Body-frame accelerations (u', v', r') = M^-1 f.

    Parameters
    ----------
    state : VehicleState
    ctrl : ControlInput
        Already saturated.
    coeffs : HydroCoefficients
    current : CurrentSample, optional
        Earth-frame ocean current; ``None`` for still water.

    Returns
    -------
    numpy.ndarray
        Shape (3,).

    Raises
    ------
    SimulationFault
        Non-finite state or control.
    """
    if not state.is_finite() or not all(math.isfinite(value) for value in ctrl):
        raise SimulationFault("Non-finite dynamics input", state=state, control=ctrl)
    M_inv = _cached_mass_matrix(coeffs)[1]
    return M_inv.dot(force_vector(state, ctrl, coeffs, current))


def kinematics_rates(state):
    """Earth-frame rates (x', y', psi') of a body-frame velocity."""
    c, s = math.cos(state.psi), math.sin(state.psi)
    return (c * state.u - s * state.v, s * state.u + c * state.v, state.r)


def state_derivative(z, ctrl, coeffs, current=None):
    """Time derivative of the joint 6-vector [x, y, psi, u, v, r]."""
    x, y, psi, u, v, r = z
    M_inv = _cached_mass_matrix(coeffs)[1]
    accel = M_inv.dot(_forces(u, v, r, psi, ctrl.x_prop, ctrl.delta_r, coeffs, current))
    c, s = math.cos(psi), math.sin(psi)
    return np.array(
        [c * u - s * v, s * u + c * v, r, accel[0], accel[1], accel[2]],
        dtype=np.float64,
    )
