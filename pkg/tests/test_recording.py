import math
import os
import tempfile
import unittest

from auvform.config import resolve_config
from auvform.exceptions import IntegrityError
from auvform.recording import (
    FORMATION_ERROR_COLUMNS,
    PATH_COLUMNS,
    TRAJECTORY_COLUMNS,
    csv_text,
    observation_columns,
    read_trajectory,
    reward_columns,
    reward_rows,
    write_csv,
    write_trajectory,
)
from auvform.runner import formation_error_rows, path_rows, run_export
from auvform.td3 import EpisodeRecord

FORMATION = resolve_config({"name": "x", "approach": 1})["formation"]


def pose_row(t, agent, x, y, psi):
    return (t, agent, x, y, psi, 1.5, 0.0, 0.0, 8.0, 0.0, -0.25)


def formation_rows(t, d=25.0):
    left = math.radians(150.0)
    return [
        pose_row(t, "leader", 10.0, 20.0, 0.0),
        pose_row(t, "follower_left", 10.0 + d * math.cos(left), 20.0 + d * math.sin(left), 0.0),
        pose_row(t, "follower_right", 10.0 + d * math.cos(-left), 20.0 + d * math.sin(-left), 0.0),
    ]


class CsvTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def test_header_only(self):
        self.assertEqual(csv_text(("a", "b"), []), "a,b\n")

    def test_value_formatting(self):
        text = csv_text(("a", "b", "c", "d"), [(True, None, 0.1, "leader"), (False, 3, 1e-20, "")])
        self.assertEqual(text, "a,b,c,d\n1,,0.1,leader\n0,3,1e-20,\n")

    def test_trajectory_round_trip(self):
        rows = formation_rows(0.1) + formation_rows(0.2)
        write_trajectory(self.path("trajectory.csv"), rows)
        loaded = read_trajectory(self.path("trajectory.csv"))
        self.assertEqual(loaded, rows)
        write_trajectory(self.path("again.csv"), loaded)
        with open(self.path("trajectory.csv")) as a, open(self.path("again.csv")) as b:
            self.assertEqual(a.read(), b.read())

    def test_no_temporary_files_left(self):
        write_csv(self.path("x.csv"), ("t",), [(0.1,)])
        self.assertEqual(os.listdir(self.tmp.name), ["x.csv"])

    def test_bad_header(self):
        write_csv(self.path("bad.csv"), ("t", "agent"), [])
        with self.assertRaises(IntegrityError):
            read_trajectory(self.path("bad.csv"))
        with open(self.path("empty.csv"), "w"):
            pass
        with self.assertRaises(IntegrityError):
            read_trajectory(self.path("empty.csv"))

    def test_malformed_row(self):
        with open(self.path("short.csv"), "w") as f:
            f.write(",".join(TRAJECTORY_COLUMNS) + "\n0.1,leader,1.0\n")
        with self.assertRaises(IntegrityError) as caught:
            read_trajectory(self.path("short.csv"))
        self.assertIn("line 2", str(caught.exception))
        with open(self.path("text.csv"), "w") as f:
            f.write(",".join(TRAJECTORY_COLUMNS) + "\n0.1,leader" + ",x" * 9 + "\n")
        with self.assertRaises(IntegrityError):
            read_trajectory(self.path("text.csv"))

    def test_reward_columns(self):
        names = ["leader", "follower_left"]
        self.assertEqual(
            reward_columns(names),
            (
                "episode", "steps", "cause", "return_leader", "return_follower_left",
                "average_leader", "average_follower_left",
            ),
        )
        record = EpisodeRecord(
            0, 300, "step_limit", {"leader": -1.5, "follower_left": -2.0},
            {"leader": -1.5, "follower_left": -2.0},
        )
        self.assertEqual(
            list(reward_rows([record], names)),
            [(0, 300, "step_limit", -1.5, -2.0, -1.5, -2.0)],
        )
        self.assertEqual(observation_columns(("a", "b")), ("t", "a", "b"))


class ExportTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def test_path_rows(self):
        paths = path_rows(formation_rows(0.1) + formation_rows(0.2))
        self.assertEqual(list(paths), ["leader", "follower_left", "follower_right"])
        self.assertEqual(paths["leader"], [(0.1, 10.0, 20.0, 0.0), (0.2, 10.0, 20.0, 0.0)])

    def test_formation_errors(self):
        errors = formation_error_rows(formation_rows(0.1) + formation_rows(0.2, d=30.0), FORMATION)
        self.assertEqual(len(errors), 4)
        for t, name, distance_error, angle_error in errors:
            self.assertIn(name, ("follower_left", "follower_right"))
            self.assertAlmostEqual(distance_error, 0.0 if t == 0.1 else 5.0, places=9)
            self.assertAlmostEqual(angle_error, 0.0, places=9)

    def test_follower_without_leader_skipped(self):
        rows = [pose_row(0.1, "follower_left", 0.0, 0.0, 0.0)]
        self.assertEqual(formation_error_rows(rows, FORMATION), [])

    def test_run_export(self):
        source = os.path.join(self.tmp.name, "trajectory.csv")
        write_trajectory(source, formation_rows(0.1))
        out = os.path.join(self.tmp.name, "export")
        written = run_export(source, out, FORMATION)
        self.assertEqual(
            sorted(os.path.basename(p) for p in written),
            [
                "formation_error.csv",
                "path_follower_left.csv",
                "path_follower_right.csv",
                "path_leader.csv",
            ],
        )
        with open(os.path.join(out, "path_leader.csv")) as f:
            self.assertEqual(f.readline().strip(), ",".join(PATH_COLUMNS))

    def test_empty_trajectory(self):
        source = os.path.join(self.tmp.name, "trajectory.csv")
        write_trajectory(source, [])
        out = os.path.join(self.tmp.name, "export")
        written = run_export(source, out, FORMATION)
        self.assertEqual(written, [os.path.join(out, "formation_error.csv")])
        with open(written[0]) as f:
            self.assertEqual(f.read(), ",".join(FORMATION_ERROR_COLUMNS) + "\n")
