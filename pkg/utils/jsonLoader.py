import os
from pathlib import Path

from auvform.config import apply_overrides, parse_config, resolve_config
from auvform.exceptions import ConfigurationError

# Helper functions for reading/writing json files in ./run_config


def get_path():
    """
    A function to get the current path to run.py

    Returns:
     - cwd (string) : Path to run.py directory
    """
    cwd = Path(__file__).parents[1]
    cwd = str(cwd)
    return cwd


def config_file(name):
    """
    Map a preset name or a file path to the file to read.

    Params:
     - name (string) : A preset in ./run_config ("smoke") or a path to a json file

    Returns:
     - path (string) : The file to open
    """
    if name.endswith(".json") or os.sep in name or "/" in name:
        return name
    return os.path.join(get_path(), "run_config", name + ".json")


def read_json(name):
    """
    A function to read a configuration file.

    Params:
     - name (string) : Preset name or path, see config_file()

    Returns:
     - data (dict) : The parsed, not yet validated, configuration
     - text (string) : The file content, used to point errors at a line
    """
    path = config_file(name)
    try:
        with open(path, "r") as file:
            text = file.read()
    except OSError as e:
        raise ConfigurationError("cannot read configuration %s: %s" % (path, e.strerror))
    return parse_config(text, source=path), text


def load_config(name, overrides=()):
    """
    Read, override and validate a configuration.

    Params:
     - name (string) : Preset name or path
     - overrides (list) : (dotted key, value) pairs applied after the file

    Returns:
     - config (dict) : The resolved configuration
    """
    raw, text = read_json(name)
    return resolve_config(apply_overrides(raw, overrides), text)
