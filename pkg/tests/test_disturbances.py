import math
import unittest

import numpy as np

from auvform.config import defaults
from auvform.disturbances import (
    Ar1Process,
    CurrentModel,
    DelayChannel,
    NavErrorModel,
    apply_nav_error,
    ar1_step,
    sample_current,
    sample_delay,
)
from auvform.dynamics import VehicleState
from auvform.exceptions import ConfigurationError
from auvform.seeding import stream, stream_seed


def current_config(**changes):
    cfg = defaults()["disturbances"]["current"]
    cfg.update({"enabled": True, **changes})
    return cfg


def nav_config(**changes):
    cfg = defaults()["disturbances"]["nav_error"]
    cfg.update({"enabled": True, **changes})
    return cfg


class Ar1Test(unittest.TestCase):
    def test_zero_scale_is_a_fixed_point(self):
        proc = Ar1Process(0.0, 1.0, scale=0.0, value=0.25)
        rng = np.random.default_rng(0)
        for _ in range(100):
            self.assertEqual(ar1_step(proc, rng), 0.25)

    def test_zero_persistence_returns_the_innovation(self):
        proc = Ar1Process(-1.0, 1.0, rho=0.0)
        value = ar1_step(proc, np.random.default_rng(4))
        self.assertEqual(value, np.random.default_rng(4).uniform(-1.0, 1.0))

    def test_update_rule(self):
        proc = Ar1Process(0.0, 10.0, rho=0.9, scale=0.5, value=2.0)
        innovation = np.random.default_rng(8).uniform(0.0, 10.0)
        value = ar1_step(proc, np.random.default_rng(8))
        self.assertAlmostEqual(value, 2.0 + 0.1 * 0.5 * (innovation - 2.0), places=12)

    def test_initial_value_defaults_to_midpoint(self):
        self.assertEqual(Ar1Process(0.0, 0.3).value, 0.15)
        self.assertEqual(Ar1Process(0.0, 0.3, value=5.0).value, 0.3)

    def test_invalid_parameters(self):
        with self.assertRaises(ConfigurationError):
            Ar1Process(1.0, 0.0)
        with self.assertRaises(ConfigurationError):
            Ar1Process(0.0, 1.0, rho=1.0)
        with self.assertRaises(ConfigurationError):
            Ar1Process(0.0, 1.0, scale=-1.0)


class CurrentTest(unittest.TestCase):
    def test_disabled_current_is_still_water(self):
        model = CurrentModel.from_config(current_config(enabled=False))
        rng = np.random.default_rng(1)
        before = rng.bit_generator.state
        for _ in range(10):
            self.assertEqual(sample_current(model, rng).speed, 0.0)
        self.assertEqual(rng.bit_generator.state, before)

    def test_long_run_bounds_and_mean(self):
        model = CurrentModel.from_config(current_config())
        rng = np.random.default_rng(12)
        speeds = np.empty(200000)
        directions = np.empty(200000)
        for i in range(len(speeds)):
            sample = sample_current(model, rng)
            speeds[i] = sample.speed
            directions[i] = sample.direction
        self.assertGreaterEqual(speeds.min(), 0.0)
        self.assertLessEqual(speeds.max(), 0.3)
        self.assertGreaterEqual(directions.min(), math.radians(80.0))
        self.assertLessEqual(directions.max(), math.radians(140.0))
        self.assertLess(abs(math.degrees(directions.mean()) - 110.0), 5.0)


class DelayTest(unittest.TestCase):
    def test_forced_zero_delay_is_readable_next_step(self):
        channel = DelayChannel("initial")
        self.assertEqual(channel.send("a", 0.1, delay=0.0), 0.0)
        self.assertEqual(channel.read(0.1), "a")

    def test_delivery_time(self):
        channel = DelayChannel("initial")
        channel.send("late", 1.0, delay=0.3)
        self.assertEqual(channel.read(1.2), "initial")
        self.assertEqual(channel.read(1.3), "late")

    def test_quantized_up_to_the_grid(self):
        channel = DelayChannel(None)
        self.assertEqual(channel.quantize(0.01), 0.1)
        self.assertEqual(channel.quantize(0.1), 0.1)
        self.assertEqual(channel.quantize(0.21), 0.3)
        self.assertEqual(channel.quantize(0.0), 0.0)

    def test_reads_never_go_back_in_time(self):
        channel = DelayChannel(0)
        channel.send(1, 0.1, delay=0.5)
        channel.send(2, 0.2, delay=0.1)
        self.assertEqual(channel.read(0.3), 2)
        # payload 1 arrives later but is older than what was already shown
        self.assertEqual(channel.read(0.6), 2)
        self.assertEqual(channel.pending, 0)

    def test_hold_last_sample(self):
        channel = DelayChannel(0)
        channel.send(1, 0.1, delay=0.0)
        channel.send(2, 0.2, delay=1.0)
        self.assertEqual(channel.read(0.5), 1)
        self.assertEqual(channel.read(0.9), 1)
        self.assertEqual(channel.read(1.2), 2)

    def test_monotonic_with_random_delays(self):
        rng = np.random.default_rng(3)
        channel = DelayChannel(-1)
        last = -1
        for step in range(1, 2000):
            t = round(step * 0.1, 12)
            channel.send(step, t, rng)
            value = channel.read(t)
            self.assertGreaterEqual(value, last)
            self.assertLessEqual(value, step)
            last = value

    def test_disabled_channel_draws_nothing(self):
        rng = np.random.default_rng(2)
        before = rng.bit_generator.state
        channel = DelayChannel("x", enabled=False)
        self.assertEqual(channel.send("y", 0.1, rng), 0.0)
        self.assertEqual(channel.read(0.1), "y")
        self.assertEqual(rng.bit_generator.state, before)

    def test_delay_distribution(self):
        rng = np.random.default_rng(21)
        draws = np.array([sample_delay(rng, 0.1, 1.2) for _ in range(100000)])
        self.assertLessEqual(draws.max(), 1.2)
        counts, _ = np.histogram(draws, bins=[0.0, 0.05, 0.15, 0.25, 0.35, 1.2])
        self.assertEqual(int(np.argmax(counts)), 1)
        self.assertEqual(counts.sum(), len(draws))

    def test_invalid_channel(self):
        with self.assertRaises(ConfigurationError):
            DelayChannel(None, sigma=0.0)


class NavigationErrorTest(unittest.TestCase):
    def setUp(self):
        self.state = VehicleState.create(100.0, 200.0, 3.1, 1.5, 0.1, 0.02)

    def test_zero_scale_leaves_state_alone(self):
        model = NavErrorModel.from_config(nav_config(scale=0.0))
        measured = apply_nav_error(model, self.state, np.random.default_rng(0))
        self.assertEqual(measured, self.state)

    def test_velocities_untouched_and_heading_wrapped(self):
        model = NavErrorModel.from_config(nav_config())
        rng = np.random.default_rng(6)
        for _ in range(200):
            measured = apply_nav_error(model, self.state, rng)
            self.assertEqual(measured[3:], self.state[3:])
            self.assertGreaterEqual(measured.psi, -math.pi)
            self.assertLess(measured.psi, math.pi)
        self.assertEqual(self.state.x, 100.0)

    def test_errors_stay_bounded(self):
        model = NavErrorModel.from_config(nav_config())
        rng = np.random.default_rng(7)
        bound = math.radians(5.0)
        for _ in range(100000):
            apply_nav_error(model, self.state, rng)
            ex, ey, epsi = model.errors
            self.assertLessEqual(abs(ex), 2.0)
            self.assertLessEqual(abs(ey), 2.0)
            self.assertLessEqual(abs(epsi), bound)

    def test_disabled_returns_true_state(self):
        model = NavErrorModel.from_config(nav_config(enabled=False))
        self.assertIs(apply_nav_error(model, self.state, None), self.state)


class SeedingTest(unittest.TestCase):
    def test_streams_are_reproducible(self):
        a = stream(5, "scenario", 3).uniform(size=4)
        b = stream(5, "scenario", 3).uniform(size=4)
        np.testing.assert_array_equal(a, b)

    def test_streams_are_independent(self):
        a = stream(5, "scenario", 3).uniform(size=4)
        self.assertFalse(np.array_equal(a, stream(5, "current", 3).uniform(size=4)))
        self.assertFalse(np.array_equal(a, stream(5, "scenario", 4).uniform(size=4)))
        self.assertFalse(np.array_equal(a, stream(6, "scenario", 3).uniform(size=4)))

    def test_bad_requests(self):
        with self.assertRaises(ValueError):
            stream_seed(0, "weather")
        with self.assertRaises(ConfigurationError):
            stream_seed(-1, "scenario")
