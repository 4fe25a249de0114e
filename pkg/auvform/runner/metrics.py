"""Per-episode evaluation measures and their aggregation."""
import math
from collections import namedtuple


__all__ = ("EpisodeMetrics", "EpisodeTracker", "summarize")


class EpisodeMetrics(
    namedtuple(
        "BaseEpisodeMetrics",
        (
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
            "mean_distance_error",
            "mean_angle_error_deg",
        ),
    )
):
    """
    Measures of one evaluation episode.

    Formation errors are absolute values averaged over the followers; the
    ``final_*`` ones over the last ``evaluation.final_window`` steps only.
    Clearances are ``None`` when the episode has no obstacles, path
    deviations when no nominal replay was run.
    """

    __slots__ = ()

    def as_row(self):
        return self[:11]


class EpisodeTracker(object):
    """Accumulates measures while an evaluation episode runs."""

    def __init__(self, d_desired, final_window):
        self.d_desired = d_desired
        self.final_window = final_window
        self.distance_errors = []
        self.angle_errors = []
        self.max_abs_e_d = 0.0
        self.min_obstacle_clearance = None
        self.min_circle_clearance = None
        self.collisions = 0

    def observe(self, world):
        errors = world.formation_errors()
        if errors:
            distances = [abs(e[0]) for e in errors.values()]
            angles = [abs(e[1]) for e in errors.values()]
            self.distance_errors.append(sum(distances) / len(distances))
            self.angle_errors.append(sum(angles) / len(angles))
            self.max_abs_e_d = max(self.max_abs_e_d, max(distances) / self.d_desired)
        clearance = world.obstacle_clearance()
        if clearance is not None:
            self.min_obstacle_clearance = _min(self.min_obstacle_clearance, clearance)
        circle = world.circle_clearance()
        if circle is not None:
            self.min_circle_clearance = _min(self.min_circle_clearance, circle)
        if (clearance is not None and clearance < 0.0) or world.collisions():
            self.collisions += 1

    def finish(self, episode, success, steps, deviation=(None, None)):
        tail_d = self.distance_errors[-self.final_window:]
        tail_a = self.angle_errors[-self.final_window:]
        return EpisodeMetrics(
            episode=episode,
            success=success,
            steps=steps,
            final_distance_error=_mean(tail_d),
            final_angle_error_deg=_degrees(_mean(tail_a)),
            max_abs_e_d=self.max_abs_e_d,
            min_obstacle_clearance=self.min_obstacle_clearance,
            min_circle_clearance=self.min_circle_clearance,
            collisions=self.collisions,
            path_deviation_mean=deviation[0],
            path_deviation_max=deviation[1],
            mean_distance_error=_mean(self.distance_errors),
            mean_angle_error_deg=_degrees(_mean(self.angle_errors)),
        )


def _min(current, value):
    return value if current is None else min(current, value)


def _mean(values):
    return sum(values) / len(values) if values else None


def _degrees(value):
    return None if value is None else math.degrees(value)


def _rate(flags):
    flags = list(flags)
    return sum(1 for f in flags if f) / len(flags) if flags else None


def summarize(episodes):
    """Aggregate `EpisodeMetrics` into the ``metrics.json`` payload."""
    episodes = list(episodes)
    with_obstacles = [m for m in episodes if m.min_obstacle_clearance is not None]
    with_circle = [m for m in episodes if m.min_circle_clearance is not None]
    distance = [m.mean_distance_error for m in episodes if m.mean_distance_error is not None]
    angle = [m.mean_angle_error_deg for m in episodes if m.mean_angle_error_deg is not None]
    deviations = [m for m in episodes if m.path_deviation_max is not None]
    return {
        "episodes": len(episodes),
        "success_rate": _rate(m.success for m in episodes),
        "mean_distance_error": _mean(distance),
        "mean_angle_error_deg": _mean(angle),
        "max_abs_e_d": max([m.max_abs_e_d for m in episodes]) if episodes else None,
        "min_obstacle_clearance": (
            min(m.min_obstacle_clearance for m in with_obstacles) if with_obstacles else None
        ),
        "obstacle_free_rate": _rate(m.min_obstacle_clearance >= 0.0 for m in with_obstacles),
        "circle_clear_rate": _rate(m.min_circle_clearance >= 0.0 for m in with_circle),
        "collisions": sum(m.collisions for m in episodes),
        "path_deviation_mean": _mean([m.path_deviation_mean for m in deviations]),
        "path_deviation_max": (
            max(m.path_deviation_max for m in deviations) if deviations else None
        ),
    }
