import json

"""
Parsers turning command line text into configuration overrides.

ParseOverride - "td3.batch_size=64" style assignments, values read as JSON
FlagOverrides - the dedicated flags (--seed, --approach, ...) as assignments
"""


def ParseOverride(text):
    """Parse one ``--set`` assignment.

    Parameters
    ----------
    text : str
        ``dotted.key=value``. The value is read as a JSON literal
        (``64``, ``0.5``, ``true``, ``[1, 2]``, ``null``); anything that is
        not valid JSON is kept as a plain string.

    Returns
    -------
    (str, object)
        The key path and the value.

    Raises
    ------
    ValueError
        No ``=`` or an empty key.
    """
    key, sep, value = text.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ValueError("expected KEY=VALUE, got %r" % text)
    value = value.strip()
    try:
        return key, json.loads(value)
    except ValueError:
        return key, value


def FlagOverrides(args, keys=None, perturbations_in_training=False):
    """Collect the overrides implied by the dedicated command line flags.

    Parameters
    ----------
    args : argparse.Namespace
    keys : dict, optional
        Extra flag attribute -> config key pairs, e.g.
        ``{"episodes": "td3.episodes"}``. Flags left at `None` are skipped.
    perturbations_in_training : bool
        When set, any perturbation flag also turns on
        ``disturbances.train``.

    Returns
    -------
    list of (str, object)
        Flag overrides first, then ``--set`` assignments in order, so
        ``--set`` wins.
    """
    overrides = []
    mapping = [("seed", "seed"), ("approach", "approach")]
    mapping.extend(sorted((keys or {}).items()))
    for attribute, key in mapping:
        value = getattr(args, attribute, None)
        if value is not None:
            overrides.append((key, value))
    perturbed = False
    for flag, key in (
        ("current", "disturbances.current.enabled"),
        ("delay", "disturbances.delay.enabled"),
        ("nav_error", "disturbances.nav_error.enabled"),
    ):
        if getattr(args, flag, False):
            overrides.append((key, True))
            perturbed = True
    if perturbed and perturbations_in_training:
        overrides.append(("disturbances.train", True))
    for assignment in getattr(args, "set", None) or ():
        overrides.append(assignment)
    return overrides
