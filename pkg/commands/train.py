import logging

from auvform.runner import run_training

from commands._options import add_config_arguments, add_perturbation_arguments
from utils.jsonLoader import load_config
from utils.Parsers import FlagOverrides
from utils.util import default_out_dir


class Train(object):
    name = "train"
    help = "train one TD3 learner per AUV and write checkpoints and logs"

    def __init__(self, app):
        self.app = app
        self.logger = logging.getLogger(__name__)

    def add_arguments(self, parser):
        add_config_arguments(parser)
        add_perturbation_arguments(parser)
        parser.add_argument("--episodes", type=int, help="overrides td3.episodes")
        parser.add_argument("--out", help="output directory (default: runs/<name>/train)")

    def run(self, args):
        overrides = FlagOverrides(
            args, keys={"episodes": "td3.episodes"}, perturbations_in_training=True
        )
        config = load_config(args.config, overrides)
        out = args.out or default_out_dir(config, "train")
        artifacts, result = run_training(config, out)
        if result.error is not None:
            raise result.error
        self.logger.info(
            "Trained %d episodes; artifacts in %s", len(result.log), artifacts.root
        )
        return artifacts


def setup(app):
    app.add_command(Train(app))
