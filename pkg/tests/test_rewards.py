import math
import unittest

import numpy as np

from auvform.dynamics import ControlInput
from auvform.environment.geometry import enclosing_circle, wrap_angle
from auvform.environment.rewards import (
    RewardComponents,
    collision_penalty,
    follower_total_reward,
    leader_total_reward,
    reward_collision,
    reward_effort,
    reward_formation_angle,
    reward_formation_distance,
    reward_obstacle_a1,
    reward_obstacle_a2,
    reward_target,
)
from auvform.environment.scenario import Obstacle, RewardWeights


RANDOM_CASES = 10000


def piecewise(d, d_avoid):
    if d <= d_avoid:
        return -abs(d_avoid - d)
    return 0.0


def random_obstacles(rng, centre, spread, count):
    return [
        Obstacle(
            float(centre[0] + rng.uniform(-spread, spread)),
            float(centre[1] + rng.uniform(-spread, spread)),
            float(rng.uniform(0.5, 3.0)),
        )
        for _ in range(count)
    ]


class TargetRewardTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(reward_target(0.3, 0.3), 0.0)
        self.assertAlmostEqual(reward_target(math.pi / 2, 0.0), -math.pi / 2)
        self.assertAlmostEqual(reward_target(0.1, 6.2), -0.1832, places=4)

    def test_against_oracle(self):
        rng = np.random.default_rng(1)
        for lam, psi in rng.uniform(-10, 10, size=(RANDOM_CASES, 2)):
            lam, psi = float(lam), float(psi)
            self.assertEqual(reward_target(lam, psi), -abs(wrap_angle(lam - psi)))
            self.assertLessEqual(reward_target(lam, psi), 0.0)
            self.assertGreaterEqual(reward_target(lam, psi), -math.pi)


class ObstacleRewardTest(unittest.TestCase):
    def test_far_obstacles_cost_nothing(self):
        obstacles = [Obstacle(50.0, 0.0, 1.0), Obstacle(0.0, -40.0, 2.0)]
        self.assertEqual(reward_obstacle_a1((0.0, 0.0), obstacles, 0.5, 1.0), 0.0)

    def test_single_obstacle(self):
        # d_avoid = 0.5 + 1.0 + 1.0 = 2.5
        ob = Obstacle(1.5, 0.0, 1.0)
        self.assertEqual(reward_obstacle_a1((0.0, 0.0), [ob], 0.5, 1.0), -1.0)

    def test_additive(self):
        obstacles = [Obstacle(2.0, 0.0, 1.0), Obstacle(0.0, -1.5, 1.5)]
        # penalties -0.5 and -1.5
        self.assertAlmostEqual(
            reward_obstacle_a1((0.0, 0.0), obstacles, 0.5, 1.0), -2.0, places=12
        )

    def test_sensor_range(self):
        ob = Obstacle(1.5, 0.0, 1.0)
        self.assertEqual(reward_obstacle_a1((0.0, 0.0), [ob], 0.5, 1.0, r_det=1.0), 0.0)

    def test_a1_against_oracle(self):
        rng = np.random.default_rng(2)
        for _ in range(RANDOM_CASES):
            position = tuple(rng.uniform(0, 100, size=2))
            obstacles = random_obstacles(rng, position, 6.0, int(rng.integers(0, 5)))
            shell, d_safe, r_det = rng.uniform(0.2, 1.0), rng.uniform(0.1, 2.0), 5.0
            expected = 0.0
            for ob in obstacles:
                d = math.hypot(ob.cx - position[0], ob.cy - position[1])
                if d <= r_det:
                    expected += piecewise(d, shell + d_safe + ob.radius)
            found = reward_obstacle_a1(position, obstacles, shell, d_safe, r_det=r_det)
            self.assertEqual(found, expected)
            self.assertLessEqual(found, 0.0)

    def test_a2_beyond_avoidance_distance(self):
        leader, followers = (0.0, 10.0), ((-10.0, 0.0), (10.0, 0.0))
        self.assertEqual(
            reward_obstacle_a2(leader, followers, [Obstacle(0.0, 30.0, 1.0)], 1.0), 0.0
        )

    def test_a2_arithmetic(self):
        # circumcircle of (0,10), (-10,0), (10,0): centre (0,0), radius 10
        leader, followers = (0.0, 10.0), ((-10.0, 0.0), (10.0, 0.0))
        # d_avoid = 10 + 4 + 2 = 16, d_CO = 10
        ob = Obstacle(0.0, -10.0, 2.0)
        self.assertAlmostEqual(reward_obstacle_a2(leader, followers, [ob], 4.0), -6.0)

    def test_a2_out_of_leader_range(self):
        leader, followers = (0.0, 10.0), ((-10.0, 0.0), (10.0, 0.0))
        ob = Obstacle(0.0, -10.0, 2.0)
        self.assertEqual(reward_obstacle_a2(leader, followers, [ob], 4.0, r_det=15.0), 0.0)

    def test_a2_collinear_formation(self):
        leader, followers = (0.0, 0.0), ((-10.0, 0.0), (10.0, 0.0))
        ob = Obstacle(0.0, 5.0, 1.0)
        penalty = reward_obstacle_a2(leader, followers, [ob], 1.0)
        self.assertTrue(math.isfinite(penalty))
        self.assertAlmostEqual(penalty, -(10.0 + 1.0 + 1.0 - 5.0))

    def test_a2_against_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(RANDOM_CASES):
            pts = [tuple(p) for p in rng.uniform(0, 40, size=(3, 2))]
            obstacles = random_obstacles(rng, pts[0], 30.0, int(rng.integers(0, 5)))
            d_safe, r_det = rng.uniform(0.1, 2.0), 25.0
            sensed = [
                ob
                for ob in obstacles
                if math.hypot(ob.cx - pts[0][0], ob.cy - pts[0][1]) <= r_det
            ]
            expected = 0.0
            if sensed:
                center, r_cir = enclosing_circle(*pts)
                for ob in sensed:
                    d = math.hypot(ob.cx - center[0], ob.cy - center[1])
                    expected += piecewise(d, r_cir + d_safe + ob.radius)
            found = reward_obstacle_a2(pts[0], pts[1:], obstacles, d_safe, r_det=r_det)
            self.assertEqual(found, expected)
            self.assertLessEqual(found, 0.0)


class CollisionRewardTest(unittest.TestCase):
    def test_examples(self):
        # d_avoid = 2 * (0.5 + 1.0) = 3
        self.assertEqual(reward_collision(25.0, 0.5, 1.0), 0.0)
        self.assertEqual(reward_collision(1.0, 0.5, 1.0), -2.0)
        self.assertEqual(reward_collision(3.0, 0.5, 1.0), 0.0)

    def test_summed_over_others(self):
        self.assertEqual(
            collision_penalty((0.0, 0.0), [(1.0, 0.0), (0.0, 2.0), (50.0, 0.0)], 0.5, 1.0),
            -3.0,
        )

    def test_against_oracle(self):
        rng = np.random.default_rng(4)
        for d, shell, d_safe in zip(
            rng.uniform(0, 6, RANDOM_CASES),
            rng.uniform(0.1, 1.0, RANDOM_CASES),
            rng.uniform(0.1, 2.0, RANDOM_CASES),
        ):
            d, shell, d_safe = float(d), float(shell), float(d_safe)
            self.assertEqual(
                reward_collision(d, shell, d_safe), piecewise(d, 2.0 * (shell + d_safe))
            )


class EffortRewardTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(reward_effort(ControlInput(3.0, 0.0)), (-3.0, 0.0))
        thrust, rudder = reward_effort(ControlInput(13.0, math.radians(20)))
        self.assertEqual(thrust, -13.0)
        self.assertAlmostEqual(rudder, -0.3491, places=4)
        self.assertAlmostEqual(reward_effort(ControlInput(8.0, math.radians(-10)))[1], -0.1745,
                               places=4)


class FormationRewardTest(unittest.TestCase):
    def test_distance(self):
        self.assertEqual(reward_formation_distance(1.0), -1.0)
        self.assertEqual(reward_formation_distance(-0.5), -0.5)

    def test_angle_wraps(self):
        self.assertAlmostEqual(
            reward_formation_angle(math.radians(-170), math.radians(170)), -math.radians(20)
        )

    def test_against_oracle(self):
        rng = np.random.default_rng(5)
        for e_d, lam, lam_d in rng.uniform(-7, 7, size=(RANDOM_CASES, 3)):
            e_d, lam, lam_d = float(e_d), float(lam), float(lam_d)
            self.assertEqual(reward_formation_distance(e_d), -abs(e_d))
            self.assertEqual(
                reward_formation_angle(lam, lam_d), -abs(wrap_angle(lam - lam_d))
            )


class TotalRewardTest(unittest.TestCase):
    def weights(self, **values):
        base = dict(w_A=0.0, w_Fd=0.0, w_FA=0.0, w_OA=0.0, w_CA=0.0, w_E1=0.0, w_E2=0.0)
        base.update(values)
        return RewardWeights(**base)

    def test_leader_zero(self):
        unit = RewardWeights(*([1.0] * 7))
        self.assertEqual(leader_total_reward(RewardComponents.create(), unit), 0.0)

    def test_leader_unit_weights(self):
        unit = RewardWeights(*([1.0] * 7))
        self.assertEqual(leader_total_reward(RewardComponents.create(target=-1.0), unit), -1.0)

    def test_leader_hand_sum(self):
        weights = self.weights(w_A=1.0, w_OA=2.0, w_CA=2.0, w_E1=0.01, w_E2=0.05)
        components = RewardComponents.create(
            target=-0.5, obstacle=-1.0, collision=0.0, effort=(-3.0, -0.1)
        )
        self.assertAlmostEqual(leader_total_reward(components, weights), -2.535, places=12)

    def test_follower_only_effort(self):
        weights = RewardWeights(1.0, 1.0, 0.5, 2.0, 2.0, 0.01, 0.05)
        components = RewardComponents.create(
            formation_distance=reward_formation_distance(0.0),
            formation_angle=reward_formation_angle(1.0, 1.0),
            effort=reward_effort(ControlInput(8.0, 0.0)),
        )
        self.assertEqual(follower_total_reward(components, weights, 1), -weights.w_E1 * 8.0)

    def test_follower_distance(self):
        weights = self.weights(w_Fd=1.0)
        components = RewardComponents.create(formation_distance=reward_formation_distance(1.0))
        self.assertEqual(follower_total_reward(components, weights, 1), -1.0)

    def test_follower_approach_2_ignores_obstacles(self):
        weights = self.weights(w_OA=2.0)
        components = RewardComponents.create(obstacle=-4.0)
        self.assertEqual(follower_total_reward(components, weights, 2), 0.0)
        self.assertEqual(follower_total_reward(components, weights, 1), -8.0)
        self.assertEqual(weights.for_follower(2).w_OA, 0.0)
        self.assertEqual(weights.for_follower(1).w_OA, 2.0)

    def test_totals_are_penalties(self):
        rng = np.random.default_rng(6)
        for _ in range(1000):
            weights = RewardWeights(*rng.uniform(0, 3, size=7))
            components = RewardComponents.create(
                *(-rng.uniform(0, 5, size=5)), effort=tuple(-rng.uniform(0, 13, size=2))
            )
            self.assertLessEqual(leader_total_reward(components, weights), 0.0)
            for approach in (1, 2):
                self.assertLessEqual(follower_total_reward(components, weights, approach), 0.0)
