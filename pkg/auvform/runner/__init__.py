from .artifacts import RunArtifacts  # noqa: F401
from .metrics import EpisodeMetrics, EpisodeTracker, summarize  # noqa: F401
from .training import run_training  # noqa: F401
from .evaluation import (  # noqa: F401
    EpisodeRun,
    checkpoint_directory,
    evaluation_config,
    load_agents,
    rollout,
    evaluate,
    run_evaluation,
)
from .export import formation_error_rows, path_rows, run_export  # noqa: F401
