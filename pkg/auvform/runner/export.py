"""Plot-ready files derived from a trajectory CSV."""
import logging
import math
import os
from collections import OrderedDict

from ..environment.geometry import wrap_angle
from ..environment.scenario import FOLLOWER_LEFT, FOLLOWER_RIGHT, LEADER
from ..recording import (
    FORMATION_ERROR_COLUMNS,
    PATH_COLUMNS,
    read_trajectory,
    write_csv,
)


__all__ = ("formation_error_rows", "path_rows", "run_export")

logger = logging.getLogger(__name__)


def path_rows(rows):
    """Agent name -> [(t, x, y, psi), ...] in file order."""
    paths = OrderedDict()
    for row in rows:
        paths.setdefault(row[1], []).append((row[0], row[2], row[3], row[4]))
    return paths


def formation_error_rows(rows, formation):
    """(t, follower, d_FL - d_desired, wrapped angle error) for every time
       at which both the leader and the follower were logged.
    """
    desired = {
        FOLLOWER_LEFT: math.radians(formation["lambda_left_deg"]),
        FOLLOWER_RIGHT: math.radians(formation["lambda_right_deg"]),
    }
    by_time = OrderedDict()
    for row in rows:
        by_time.setdefault(row[0], {})[row[1]] = row
    out = []
    for t, agents in by_time.items():
        leader = agents.get(LEADER)
        if leader is None:
            continue
        for name in (FOLLOWER_LEFT, FOLLOWER_RIGHT):
            follower = agents.get(name)
            if follower is None:
                continue
            dx, dy = follower[2] - leader[2], follower[3] - leader[3]
            angle = wrap_angle(math.atan2(dy, dx) - leader[4])
            out.append(
                (
                    t,
                    name,
                    math.hypot(dx, dy) - formation["d_desired"],
                    wrap_angle(angle - desired[name]),
                )
            )
    return out


def run_export(trajectory_path, out_dir, formation):
    """Write ``path_<agent>.csv`` and ``formation_error.csv`` under
       `out_dir`. An empty trajectory yields a header-only
       ``formation_error.csv`` and no path files.
    """
    rows = read_trajectory(trajectory_path)
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for name, samples in path_rows(rows).items():
        path = os.path.join(out_dir, "path_%s.csv" % name)
        write_csv(path, PATH_COLUMNS, samples)
        written.append(path)
    path = os.path.join(out_dir, "formation_error.csv")
    write_csv(path, FORMATION_ERROR_COLUMNS, formation_error_rows(rows, formation))
    written.append(path)
    logger.info("Exported %d rows from %s into %d files", len(rows), trajectory_path, len(written))
    return written
