"""
Run configuration: the key schema, JSON parsing with line-accurate errors,
strict validation, dotted-path overrides, provenance listing and the
configuration hash stored in checkpoints.

A resolved configuration is a plain nested `dict` holding every key of the
schema, so it can be written back as JSON and reproduces the run exactly.
"""
import copy
import hashlib
import json
import logging
import math
from collections import namedtuple

from .exceptions import ConfigurationError


__all__ = (
    "Field",
    "FIELDS",
    "REQUIRED",
    "defaults",
    "parse_config",
    "resolve_config",
    "load_config_text",
    "apply_overrides",
    "get_path",
    "explain",
    "canonical_json",
    "config_hash",
)

logger = logging.getLogger(__name__)

REFERENCE = "[REFERENCE] "
DESIGN = "[DESIGN] "


class Field(namedtuple("BaseField", ("path", "default", "kind", "provenance", "validator"))):
    """
    One configuration key.

    :param str path: Dotted key path, e.g. ``"td3.batch_size"``.
    :param default: Value used when the key is absent.
    :param str kind: One of ``int``, ``float``, ``bool``, ``str``, ``list``,
                     ``dict`` or ``any``.
    :param str provenance: Where the default comes from.
    :param validator: Callable taking the value and returning an error
                      message, or `None` when the value is acceptable.
    """

    __slots__ = ()


def _positive(value):
    return None if value > 0 else "must be > 0"


def _non_negative(value):
    return None if value >= 0 else "must be >= 0"


def _unit_interval(value):
    return None if 0.0 <= value <= 1.0 else "must lie in [0, 1]"


def _choice(*options):
    def check(value):
        return None if value in options else "must be one of %s" % ", ".join(map(repr, options))

    return check


def _numbers(count, positive=False):
    def check(value):
        if len(value) != count or not all(_is_number(v) for v in value):
            return "must be a list of %d numbers" % count
        if positive and not all(v > 0 for v in value):
            return "entries must be > 0"
        return None

    return check


def _range(lo=None, hi=None):
    def check(value):
        message = _numbers(2)(value)
        if message:
            return message
        if value[0] > value[1]:
            return "lower bound exceeds upper bound"
        if (lo is not None and value[0] < lo) or (hi is not None and value[1] > hi):
            return "must lie within [%s, %s]" % (lo, hi)
        return None

    return check


def _optional_point(value):
    return None if value is None else _numbers(2)(value)


def _formation_angle(value):
    return None if 0.0 < abs(value) < 180.0 else "must satisfy 0 < |angle| < 180 degrees"


def _fixed_obstacles(value):
    for entry in value:
        if not isinstance(entry, list) or _numbers(3)(entry) or entry[2] <= 0:
            return "entries must be [cx, cy, radius] with radius > 0"
    return None


def _hidden_sizes(value):
    if not value or not all(_is_int(v) and v >= 1 for v in value):
        return "must be a non-empty list of positive integers"
    return None


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


F = Field
FIELDS = (
    F("name", None, "str", DESIGN + "label of the run, required", None),
    F("approach", None, "int", DESIGN + "obstacle-avoidance scheme: 1 individual shells, "
      "2 circumscribed formation circle; required", _choice(1, 2)),
    F("seed", 0, "int", DESIGN + "base seed of every random stream", _non_negative),
    F("arena.width", 500.0, "float", REFERENCE + "500 x 500 m training zone", _positive),
    F("arena.height", 500.0, "float", REFERENCE + "500 x 500 m training zone", _positive),
    F("arena.target_radius", 3.0, "float", REFERENCE + "target area is a 3 m circle",
      _positive),
    F("arena.target", None, "any", DESIGN + "fixed target centre [x, y]; null samples the "
      "boundary", _optional_point),
    F("arena.target_side", "any", "str", DESIGN + "boundary side targets are drawn from",
      _choice("any", "north", "south", "east", "west")),
    F("agents.followers", 2, "int", REFERENCE + "one leader and two followers",
      _choice(0, 1, 2)),
    F("agents.leader_start", [250.0, 250.0, 0.0], "list", REFERENCE + "leader starts at "
      "(250, 250), heading 0 [x, y, psi_deg]", _numbers(3)),
    F("agents.follower_left_start", [220.0, 220.0, 0.0], "list", REFERENCE + "follower "
      "starts at (220, 220), heading 0", _numbers(3)),
    F("agents.follower_right_start", [280.0, 220.0, 0.0], "list", REFERENCE + "follower "
      "starts at (280, 220), heading 0", _numbers(3)),
    F("formation.d_desired", 25.0, "float", REFERENCE + "desired leader-follower distance "
      "25 m", _positive),
    F("formation.lambda_left_deg", 150.0, "float", REFERENCE + "desired formation angle "
      "150 deg", _formation_angle),
    F("formation.lambda_right_deg", -150.0, "float", DESIGN + "mirror of the left "
      "follower's angle", _formation_angle),
    F("formation.v_desired", 1.5, "float", REFERENCE + "desired formation speed 1.5 m/s",
      _positive),
    F("formation.shell_radius", 0.5, "float", REFERENCE + "AUV inscribed in a 0.5 m circle",
      _positive),
    F("formation.d_safe", 1.0, "float", DESIGN + "safety margin around shells", _positive),
    F("formation.r_det", 20.0, "float", DESIGN + "sensor range, well beyond the avoidance "
      "distance at 1.5 m/s", _positive),
    F("formation.obstacle_slots", 5, "int", DESIGN + "nearest obstacles kept in an "
      "observation", _non_negative),
    F("rewards.w_A", 1.0, "float", DESIGN + "target heading weight", _non_negative),
    F("rewards.w_Fd", 1.0, "float", DESIGN + "formation distance weight", _non_negative),
    F("rewards.w_FA", 0.5, "float", DESIGN + "formation angle weight", _non_negative),
    F("rewards.w_OA", 2.0, "float", DESIGN + "obstacle weight, above the formation "
      "weights", _non_negative),
    F("rewards.w_CA", 2.0, "float", DESIGN + "inter-vehicle collision weight",
      _non_negative),
    F("rewards.w_E1", 0.01, "float", DESIGN + "thrust effort weight", _non_negative),
    F("rewards.w_E2", 0.05, "float", DESIGN + "rudder effort weight", _non_negative),
    F("obstacles.count", 4, "int", DESIGN + "random obstacles per episode", _non_negative),
    F("obstacles.radius", 1.0, "float", DESIGN + "obstacle radius", _positive),
    F("obstacles.cluster_radius", 14.0, "float", REFERENCE + "obstacles spread within a "
      "14 m radius", _positive),
    F("obstacles.corridor", [0.3, 0.7], "list", DESIGN + "cluster anchor position along "
      "the leader-target segment (fractions)", _range(0.0, 1.0)),
    F("obstacles.fixed", [], "list", DESIGN + "extra obstacles [[cx, cy, radius], ...]",
      _fixed_obstacles),
    F("obstacles.start_episode", 0, "int", DESIGN + "first training episode with "
      "obstacles", _non_negative),
    F("obstacles.max_retries", 1000, "int", DESIGN + "placement draws per obstacle",
      _positive),
    F("dynamics.coefficients", "remus3dof", "str", REFERENCE + "REMUS AUV coefficient "
      "table", None),
    F("dynamics.overrides", {}, "dict", DESIGN + "per-coefficient replacements", None),
    F("dynamics.integrator", "rk4", "str", DESIGN + "fixed-step scheme",
      _choice("rk4", "euler")),
    F("dynamics.dt", 0.1, "float", REFERENCE + "time step 0.1 s", _positive),
    F("episode.max_steps", 300, "int", REFERENCE + "300 steps per training episode",
      _positive),
    F("evaluation.episodes", 50, "int", DESIGN + "evaluation episodes", _non_negative),
    F("evaluation.max_steps", 3000, "int", DESIGN + "evaluation horizon; a boundary "
      "target 250 m away needs ~900 steps", _positive),
    F("evaluation.final_window", 100, "int", DESIGN + "steps averaged for final formation "
      "errors", _positive),
    F("disturbances.train", False, "bool", REFERENCE + "perturbations are left out of "
      "training", None),
    F("disturbances.current.enabled", False, "bool", DESIGN + "ocean current toggle", None),
    F("disturbances.current.speed_range", [0.0, 0.3], "list", REFERENCE + "current speed "
      "0 to 0.3 m/s", _range(0.0)),
    F("disturbances.current.direction_range_deg", [80.0, 140.0], "list", REFERENCE +
      "current direction 80 to 140 deg", _range()),
    F("disturbances.current.rho", 0.95, "float", DESIGN + "AR(1) persistence",
      lambda v: None if 0.0 <= v < 1.0 else "must lie in [0, 1)"),
    F("disturbances.current.scale", 1.0, "float", DESIGN + "AR(1) innovation scale",
      _non_negative),
    F("disturbances.delay.enabled", False, "bool", DESIGN + "communication delay toggle",
      None),
    F("disturbances.delay.sigma", 0.1, "float", REFERENCE + "delay peak at 0.1 s "
      "(Rayleigh scale)", _positive),
    F("disturbances.delay.truncation", 1.2, "float", REFERENCE + "delay decays after 1.2 s",
      _positive),
    F("disturbances.nav_error.enabled", False, "bool", DESIGN + "navigation error toggle",
      None),
    F("disturbances.nav_error.position_bound", 2.0, "float", DESIGN + "position error "
      "clamp (m)", _non_negative),
    F("disturbances.nav_error.heading_bound_deg", 5.0, "float", DESIGN + "heading error "
      "clamp (deg)", _non_negative),
    F("disturbances.nav_error.rho", 0.95, "float", DESIGN + "AR(1) persistence",
      lambda v: None if 0.0 <= v < 1.0 else "must lie in [0, 1)"),
    F("disturbances.nav_error.scale", 1.0, "float", DESIGN + "AR(1) innovation scale",
      _non_negative),
    F("td3.episodes", 2000, "int", DESIGN + "training episodes", _non_negative),
    F("td3.actor_lr", 1e-3, "float", REFERENCE + "actor learning rate 0.001", _positive),
    F("td3.critic_lr", 1e-4, "float", REFERENCE + "critic learning rate 0.0001", _positive),
    F("td3.gamma", 0.99, "float", REFERENCE + "discount factor 0.99", _unit_interval),
    F("td3.tau", 0.005, "float", REFERENCE + "smooth update 0.005",
      lambda v: None if 0.0 < v <= 1.0 else "must lie in (0, 1]"),
    F("td3.policy_delay", 2, "int", REFERENCE + "policy delay 2", _positive),
    F("td3.target_noise_sigma", 0.2, "float", REFERENCE + "target policy noise 0.2",
      _non_negative),
    F("td3.target_noise_clip", 0.5, "float", DESIGN + "smoothing noise clip",
      _non_negative),
    F("td3.exploration_sigma", 0.1, "float", REFERENCE + "exploration variance 0.1 read as "
      "the OU sigma", _non_negative),
    F("td3.ou_alpha", 0.15, "float", REFERENCE + "OU mean reversion 0.15", _unit_interval),
    F("td3.ou_mu", 0.0, "float", REFERENCE + "OU mean 0", None),
    F("td3.batch_size", 128, "int", DESIGN + "mini-batch size", _positive),
    F("td3.memory_size", 1000000, "int", REFERENCE + "memory size 1e6", _positive),
    F("td3.hidden_sizes", [400, 300], "list", REFERENCE + "two hidden layers of 400 and "
      "300 rectifier units", _hidden_sizes),
    F("td3.parallel_learners", False, "bool", DESIGN + "run per-agent learner steps on a "
      "thread pool", None),
    F("td3.log_every", 10, "int", DESIGN + "episodes between progress log lines", _positive),
)
del F

REQUIRED = ("name", "approach")

_FIELD_INDEX = dict((field.path, field) for field in FIELDS)


def defaults():
    """A nested dict with every key at its default (required keys `None`)."""
    config = {}
    for field in FIELDS:
        _set_path(config, field.path, copy.deepcopy(field.default))
    return config


def _set_path(config, path, value):
    parts = path.split(".")
    node = config
    for part in parts[:-1]:
        node = node.setdefault(part, {})
    node[parts[-1]] = value


def get_path(config, path):
    node = config
    for part in path.split("."):
        node = node[part]
    return node


def _flatten(raw, prefix=""):
    """Yield (dotted path, value) for every leaf of `raw`. Dicts are
       descended into unless the schema declares the key itself a dict.
    """
    for key, value in raw.items():
        path = prefix + key
        field = _FIELD_INDEX.get(path)
        if isinstance(value, dict) and (field is None or field.kind != "dict"):
            if field is not None:
                yield path, value
            else:
                for item in _flatten(value, path + "."):
                    yield item
        else:
            yield path, value


def _locate(text, path):
    """Best-effort line number of the key `path` in the JSON `text`."""
    if text is None:
        return None
    needle = '"%s"' % path.split(".")[-1]
    for number, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return number
    return None


def _check_kind(field, value):
    kind = field.kind
    if kind == "any":
        return None
    if kind == "int":
        ok = _is_int(value)
    elif kind == "float":
        ok = _is_number(value)
    elif kind == "bool":
        ok = isinstance(value, bool)
    elif kind == "str":
        ok = isinstance(value, str)
    elif kind == "list":
        ok = isinstance(value, list)
    else:
        ok = isinstance(value, dict)
    return None if ok else "expected %s, got %s" % (kind, type(value).__name__)


def parse_config(text, source="<config>"):
    """Parse JSON text into a raw dict; syntax errors carry the line."""
    try:
        raw = json.loads(text)
    except ValueError as e:
        raise ConfigurationError(
            "%s: invalid JSON: %s" % (source, getattr(e, "msg", e)),
            line=getattr(e, "lineno", None),
        )
    if not isinstance(raw, dict):
        raise ConfigurationError("%s: top level must be a JSON object" % source)
    return raw


def apply_overrides(raw, overrides):
    """Set dotted-path values on a raw config dict (before validation).
       Unknown paths are rejected.
    """
    raw = copy.deepcopy(raw)
    for path, value in overrides:
        if path not in _FIELD_INDEX:
            raise ConfigurationError("unknown configuration key", field=path)
        _set_path(raw, path, value)
    return raw


def resolve_config(raw, text=None):
    """
    Validate a raw configuration and merge it over the defaults.

    Parameters
    ----------
    raw : dict
        Parsed JSON (plus any overrides).
    text : str, optional
        Source text, used to point errors at a line.

    Returns
    -------
    dict
        The fully resolved configuration.

    Raises
    ------
    ConfigurationError
        Missing required key, unknown key, wrong type or value out of range,
        with the dotted field path.
    """
    try:
        return _resolve(raw)
    except ConfigurationError as e:
        if e.line is None and e.field is not None:
            e.line = _locate(text, e.field)
        raise


def _resolve(raw):
    config = defaults()
    seen = set()
    for path, value in _flatten(raw):
        field = _FIELD_INDEX.get(path)
        if field is None:
            raise ConfigurationError("unknown configuration key", field=path)
        message = _check_kind(field, value)
        if message is None and field.validator is not None and value is not None:
            message = field.validator(value)
        if message is None and field.kind == "float":
            value = float(value)
        if message is not None:
            raise ConfigurationError(message, field=path)
        _set_path(config, path, copy.deepcopy(value))
        seen.add(path)
    for path in REQUIRED:
        if path not in seen or get_path(config, path) is None:
            raise ConfigurationError("required key is missing", field=path)
    _cross_check(config)
    return config


def _cross_check(config):
    from .dynamics import load_coefficients

    if config["approach"] == 2 and config["agents"]["followers"] != 2:
        raise ConfigurationError(
            "approach 2 needs a leader and two followers", field="agents.followers"
        )
    arena = config["arena"]
    if arena["target"] is not None:
        x, y = arena["target"]
        if not (0.0 <= x <= arena["width"] and 0.0 <= y <= arena["height"]):
            raise ConfigurationError("target lies outside the arena", field="arena.target")
    for cx, cy, radius in config["obstacles"]["fixed"]:
        if not (0.0 <= cx <= arena["width"] and 0.0 <= cy <= arena["height"]):
            raise ConfigurationError(
                "obstacle centre (%r, %r) lies outside the arena" % (cx, cy),
                field="obstacles.fixed",
            )
    if config["td3"]["memory_size"] < config["td3"]["batch_size"]:
        raise ConfigurationError(
            "memory must hold at least one mini-batch", field="td3.memory_size"
        )
    dynamics = config["dynamics"]
    load_coefficients(dynamics["coefficients"], dynamics["overrides"])


def load_config_text(text, source="<config>", overrides=()):
    """Parse, override and resolve a configuration in one go."""
    raw = apply_overrides(parse_config(text, source), overrides)
    return resolve_config(raw, text)


def explain(config):
    """(path, resolved value, provenance) for every key, in schema order."""
    return [(field.path, get_path(config, field.path), field.provenance) for field in FIELDS]


def canonical_json(config):
    return json.dumps(config, sort_keys=True, separators=(",", ":"), allow_nan=False)


def config_hash(config):
    """SHA-256 of the canonical JSON form, as 32 raw bytes."""
    return hashlib.sha256(canonical_json(config).encode("utf-8")).digest()
