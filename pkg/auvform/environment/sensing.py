"""Range-limited obstacle sensing."""
import math


__all__ = ("obstacle_distances", "detected_obstacles", "sense_obstacles")


def obstacle_distances(position, obstacles):
    """Centre-to-centre distance from `position` to every obstacle."""
    px, py = position[0], position[1]
    return [math.hypot(ob.cx - px, ob.cy - py) for ob in obstacles]


def detected_obstacles(position, obstacles, r_det):
    """The obstacles whose centre lies within `r_det` (inclusive)."""
    return [
        ob
        for ob, d in zip(obstacles, obstacle_distances(position, obstacles))
        if d <= r_det
    ]


def sense_obstacles(pose, obstacles, r_det, k):
    """Scaled distances (d - r_det) / r_det of the `k` nearest detected
       obstacles, ascending, padded with zeros to length `k`.
    """
    if k <= 0:
        return []
    distances = sorted(
        d for d in obstacle_distances(pose, obstacles) if d <= r_det
    )
    slots = [(d - r_det) / r_det for d in distances[:k]]
    slots.extend([0.0] * (k - len(slots)))
    return slots
