"""Hydrodynamic and rigid-body coefficient sets for the 3-DOF vehicle model.

Symbols follow the usual manoeuvring notation: ``Xu_abs_u`` is X_{u|u|},
``Yuu_dr`` is Y_{uu delta_r}, ``Xudot`` is the added mass X_{u dot}, etc.
"""
import math
from collections import namedtuple

from ..exceptions import ConfigurationError


__all__ = (
    "HydroCoefficients",
    "REMUS_3DOF",
    "COEFFICIENT_SETS",
    "load_coefficients",
)


HYDRO_FIELDS = (
    "m",
    "Iz",
    "xg",
    "yg",
    "Xu_abs_u",
    "Xudot",
    "Xvr",
    "Xrr",
    "Yvdot",
    "Yrdot",
    "Yv_abs_v",
    "Yr_abs_r",
    "Yur",
    "Yuv",
    "Yuu_dr",
    "Nvdot",
    "Nrdot",
    "Nv_abs_v",
    "Nr_abs_r",
    "Nur",
    "Nuv",
    "Nuu_dr",
)


class HydroCoefficients(namedtuple("BaseHydroCoefficients", HYDRO_FIELDS)):
    """An immutable set of model coefficients (SI units, angles in rad).

       Being a namedtuple it is hashable, which lets `mass_matrix` results be
       cached per coefficient set.
    """

    __slots__ = ()

    def replace(self, **overrides):
        unknown = sorted(set(overrides) - set(self._fields))
        if unknown:
            raise ConfigurationError(
                "Unknown coefficient(s): %s" % ", ".join(unknown),
                field="dynamics.overrides",
            )
        for name, value in overrides.items():
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigurationError(
                    "Coefficient must be a finite number, got %r" % (value,),
                    field="dynamics.overrides.%s" % name,
                )
        return self._replace(**{k: float(v) for k, v in overrides.items()})


# REMUS AUV reduced to surge/sway/yaw. Yrdot is not published with the rest
# of the set; it takes the value of Nvdot by added-mass symmetry.
REMUS_3DOF = HydroCoefficients(
    m=30.51,
    Iz=3.45,
    xg=0.0,
    yg=0.0,
    Xu_abs_u=-1.62,
    Xudot=-0.94,
    Xvr=35.5,
    Xrr=-1.93,
    Yvdot=-35.5,
    Yrdot=1.93,
    Yv_abs_v=-1.31,
    Yr_abs_r=0.632,
    Yur=5.22,
    Yuv=-28.6,
    Yuu_dr=9.64,
    Nvdot=1.93,
    Nrdot=-4.88,
    Nv_abs_v=-3.18,
    Nr_abs_r=-94.0,
    Nur=-2.0,
    Nuv=-24.0,
    Nuu_dr=-6.15,
)

COEFFICIENT_SETS = {
    "remus3dof": REMUS_3DOF,
}


def load_coefficients(name="remus3dof", overrides=None):
    """Look up a named coefficient set and apply per-key overrides.

    Parameters
    ----------
    name : str
        Key into `COEFFICIENT_SETS`.
    overrides : dict, optional
        Coefficient name -> value.

    Returns
    -------
    HydroCoefficients

    Raises
    ------
    ConfigurationError
        Unknown set or coefficient name, non-finite value, or a singular
        effective mass matrix.
    """
    from .model import mass_matrix

    try:
        coeffs = COEFFICIENT_SETS[name]
    except KeyError:
        raise ConfigurationError(
            "Unknown coefficient set %r (known: %s)"
            % (name, ", ".join(sorted(COEFFICIENT_SETS))),
            field="dynamics.coefficients",
        )
    if overrides:
        coeffs = coeffs.replace(**overrides)
    # Validates invertibility.
    mass_matrix(coeffs)
    return coeffs
