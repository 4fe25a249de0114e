"""Full-length training runs on the shipped presets. They take minutes to
   hours and only run with AUVFORM_RUN_SLOW_TESTS=1.
"""
import os
import tempfile
import unittest

from auvform.runner import evaluate, load_agents, run_evaluation, run_training

from utils.jsonLoader import load_config

skipUnlessSlowTestsEnabled = unittest.skipUnless(
    os.environ.get("AUVFORM_RUN_SLOW_TESTS"),
    "Training benchmarks are disabled.",
)


def train(test, config, tmp):
    out = os.path.join(tmp, "train")
    _, result = run_training(config, out)
    test.assertTrue(result.completed)
    return out


@skipUnlessSlowTestsEnabled
class SanityBenchmarkTest(unittest.TestCase):
    def test_leader_learns_fixed_target(self):
        config = load_config("sanity")
        with tempfile.TemporaryDirectory() as tmp:
            _, result = run_training(config, os.path.join(tmp, "train"))
            self.assertTrue(result.completed)
            returns = [record.returns["leader"] for record in result.log]
            self.assertEqual(len(returns), 500)
            first = sum(returns[:50]) / 50.0
            last = sum(returns[-50:]) / 50.0
            self.assertGreater(last, first)

            _, metrics = run_evaluation(
                config, os.path.join(tmp, "train"), os.path.join(tmp, "eval")
            )
            self.assertEqual(metrics["episodes"], 50)
            self.assertGreaterEqual(metrics["success_rate"], 0.8)


@skipUnlessSlowTestsEnabled
class FormationBenchmarkTest(unittest.TestCase):
    def test_followers_hold_formation(self):
        config = load_config("formation")
        self.assertEqual(config["agents"]["followers"], 2)
        self.assertEqual(config["evaluation"]["final_window"], 100)
        with tempfile.TemporaryDirectory() as tmp:
            checkpoints = train(self, config, tmp)
            runs = evaluate(
                config,
                load_agents(config, checkpoints),
                config["seed"],
                50,
                config["evaluation"]["max_steps"],
            )
        held = [
            run.metrics
            for run in runs
            if run.metrics.success
            and run.metrics.final_distance_error < 2.5
            and run.metrics.final_angle_error_deg < 15.0
        ]
        self.assertEqual(len(runs), 50)
        self.assertGreaterEqual(len(held) / 50.0, 0.7)


@skipUnlessSlowTestsEnabled
class ObstacleBenchmarkTest(unittest.TestCase):
    def evaluate_preset(self, name):
        config = load_config(name)
        self.assertGreater(config["obstacles"]["count"], 0)
        with tempfile.TemporaryDirectory() as tmp:
            checkpoints = train(self, config, tmp)
            _, metrics = run_evaluation(
                config, checkpoints, os.path.join(tmp, "eval"), episodes=50
            )
        self.assertEqual(metrics["episodes"], 50)
        return metrics

    def test_every_auv_avoids(self):
        metrics = self.evaluate_preset("obstacles_a1")
        self.assertGreaterEqual(metrics["obstacle_free_rate"], 0.95)

    def test_leader_steers_formation_circle(self):
        metrics = self.evaluate_preset("obstacles_a2")
        self.assertGreaterEqual(metrics["obstacle_free_rate"], 0.95)
        self.assertGreaterEqual(metrics["circle_clear_rate"], 0.9)


@skipUnlessSlowTestsEnabled
class RobustnessBenchmarkTest(unittest.TestCase):
    def check(self, metrics):
        self.assertEqual(metrics["episodes"], 50)
        self.assertGreaterEqual(metrics["success_rate"], 0.7)
        self.assertLess(metrics["max_abs_e_d"], 1.0)

    def test_nominal_checkpoint_under_perturbations(self):
        config = load_config("robustness")
        self.assertFalse(config["disturbances"]["train"])
        current_only = load_config(
            "robustness",
            [("disturbances.delay.enabled", False), ("disturbances.nav_error.enabled", False)],
        )
        link_and_navigation = load_config(
            "robustness", [("disturbances.current.enabled", False)]
        )
        current = current_only["disturbances"]["current"]
        self.assertEqual(current["speed_range"], [0.0, 0.3])
        delay = link_and_navigation["disturbances"]["delay"]
        self.assertEqual((delay["sigma"], delay["truncation"]), (0.1, 1.2))
        with tempfile.TemporaryDirectory() as tmp:
            checkpoints = train(self, config, tmp)
            _, metrics = run_evaluation(
                current_only, checkpoints, os.path.join(tmp, "current"), episodes=50
            )
            self.check(metrics)
            _, metrics = run_evaluation(
                link_and_navigation, checkpoints, os.path.join(tmp, "perturbed"), episodes=50
            )
            self.check(metrics)
