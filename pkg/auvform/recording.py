"""
CSV and JSON artifacts of training and evaluation runs.

Floats are written with `repr`, so reading a file back and writing it again
reproduces it byte for byte. Every file is written to a temporary sibling
first and moved into place with `os.replace`.
"""
import csv
import io
import json
import logging
import os
import tempfile

from .exceptions import IntegrityError


__all__ = (
    "TRAJECTORY_COLUMNS",
    "EPISODE_COLUMNS",
    "CURRENT_COLUMNS",
    "NAV_ERROR_COLUMNS",
    "DELAY_COLUMNS",
    "PATH_COLUMNS",
    "FORMATION_ERROR_COLUMNS",
    "atomic_write_bytes",
    "atomic_write_text",
    "csv_text",
    "write_csv",
    "write_json",
    "read_trajectory",
    "write_trajectory",
    "reward_columns",
    "reward_rows",
    "observation_columns",
    "observation_rows",
)

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = (
    "t", "agent", "x", "y", "psi", "u", "v", "r", "x_prop", "delta_r", "reward",
)
EPISODE_COLUMNS = (
    "episode",
    "success",
    "steps",
    "final_distance_error",
    "final_angle_error_deg",
    "max_abs_e_d",
    "min_obstacle_clearance",
    "min_circle_clearance",
    "collisions",
    "path_deviation_mean",
    "path_deviation_max",
)
CURRENT_COLUMNS = ("t", "speed", "direction")
NAV_ERROR_COLUMNS = ("t", "agent", "ex", "ey", "epsi")
DELAY_COLUMNS = ("t_send", "delay", "channel")
PATH_COLUMNS = ("t", "x", "y", "psi")
FORMATION_ERROR_COLUMNS = ("t", "agent", "distance_error", "angle_error")


def _format(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def atomic_write_bytes(path, data):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.debug("Wrote %s (%d bytes)", path, len(data))


def atomic_write_text(path, text):
    atomic_write_bytes(path, text.encode("utf-8"))


def csv_text(header, rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format(value) for value in row])
    return out.getvalue()


def write_csv(path, header, rows):
    atomic_write_text(path, csv_text(header, rows))


def write_json(path, payload):
    atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def write_trajectory(path, rows):
    write_csv(path, TRAJECTORY_COLUMNS, rows)


def read_trajectory(path):
    """
    Parse a trajectory CSV into rows of (float t, str agent, 9 floats).

    Raises
    ------
    IntegrityError
        Header differs from `TRAJECTORY_COLUMNS` or a row is malformed.
    """
    with open(path, "r", newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise IntegrityError("%s: empty file, expected a header row" % path)
        if tuple(header) != TRAJECTORY_COLUMNS:
            raise IntegrityError(
                "%s: columns %s do not match %s"
                % (path, ",".join(header), ",".join(TRAJECTORY_COLUMNS))
            )
        rows = []
        for number, record in enumerate(reader, 2):
            if len(record) != len(TRAJECTORY_COLUMNS):
                raise IntegrityError(
                    "%s line %d: expected %d fields" % (path, number, len(TRAJECTORY_COLUMNS))
                )
            try:
                values = [float(record[0]), record[1]] + [float(v) for v in record[2:]]
            except ValueError as e:
                raise IntegrityError("%s line %d: %s" % (path, number, e))
            rows.append(tuple(values))
    return rows


def reward_columns(agent_names):
    return (
        ("episode", "steps", "cause")
        + tuple("return_%s" % name for name in agent_names)
        + tuple("average_%s" % name for name in agent_names)
    )


def reward_rows(log, agent_names):
    for record in log:
        yield (
            (record.episode, record.steps, record.cause)
            + tuple(record.returns[name] for name in agent_names)
            + tuple(record.averages[name] for name in agent_names)
        )


def observation_columns(labels):
    return ("t",) + tuple(labels)


def observation_rows(samples):
    for t, observation in samples:
        yield (t,) + observation.values
