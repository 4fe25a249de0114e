import logging
import os

LOG_LEVEL_VARIABLE = "AUVFORM_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level=None):
    """
    Configure the root logger once for the command line tool.

    Params:
     - level (string) : Optional level name, defaults to $AUVFORM_LOG_LEVEL or INFO

    Returns:
     - level (int) : The numeric level in effect
    """
    name = (level or os.environ.get(LOG_LEVEL_VARIABLE) or "INFO").upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        numeric = logging.INFO
    logging.basicConfig(level=numeric, format=LOG_FORMAT)
    return numeric


def default_out_dir(config, kind):
    """
    Where a run writes when --out is not given: runs/<config name>/<kind>

    Params:
     - config (dict) : Resolved configuration
     - kind (string) : "train", "eval" or "export"
    """
    return os.path.join("runs", config["name"], kind)
