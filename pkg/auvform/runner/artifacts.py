"""Layout of a run directory."""
import os


__all__ = ("RunArtifacts",)


class RunArtifacts(object):
    """
    Paths of everything a training or evaluation run writes under `root`.

    Training writes ``checkpoints/<agent>.ckpt``, ``rewards.csv``,
    ``trajectory.csv``, ``observations_<agent>.csv``, ``config.json`` and
    ``metadata.json``. Evaluation writes ``metrics.json``, ``episodes.csv``,
    ``trajectory.csv`` and one trace file per enabled perturbation.
    """

    def __init__(self, root):
        self.root = root

    def prepare(self):
        os.makedirs(self.checkpoint_dir, exist_ok=True)
        return self

    def path(self, name):
        return os.path.join(self.root, name)

    @property
    def checkpoint_dir(self):
        return self.path("checkpoints")

    def checkpoint(self, agent):
        return os.path.join(self.checkpoint_dir, "%s.ckpt" % agent)

    def observations(self, agent):
        return self.path("observations_%s.csv" % agent)

    @property
    def rewards(self):
        return self.path("rewards.csv")

    @property
    def trajectory(self):
        return self.path("trajectory.csv")

    @property
    def config(self):
        return self.path("config.json")

    @property
    def metadata(self):
        return self.path("metadata.json")

    @property
    def metrics(self):
        return self.path("metrics.json")

    @property
    def episodes(self):
        return self.path("episodes.csv")

    def trace(self, kind):
        return self.path("%s.csv" % kind)

    def __repr__(self):
        return "RunArtifacts(%r)" % (self.root,)
