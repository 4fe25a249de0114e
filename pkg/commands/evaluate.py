import json
import logging
import os

from auvform.runner import run_evaluation

from commands._options import add_config_arguments, add_perturbation_arguments
from utils.jsonLoader import load_config
from utils.Parsers import FlagOverrides
from utils.util import default_out_dir


class Evaluate(object):
    name = "eval"
    help = "roll out trained agents without exploration noise and report metrics"

    def __init__(self, app):
        self.app = app
        self.logger = logging.getLogger(__name__)

    def add_arguments(self, parser):
        parser.add_argument(
            "--checkpoint",
            required=True,
            help="training output directory or its checkpoints/ folder",
        )
        add_config_arguments(parser, config_default=None)
        add_perturbation_arguments(parser)
        parser.add_argument("--episodes", type=int, help="overrides evaluation.episodes")
        parser.add_argument(
            "--max-steps", type=int, help="overrides evaluation.max_steps"
        )
        parser.add_argument(
            "--workers", type=int, default=1, help="episodes evaluated in parallel"
        )
        parser.add_argument(
            "--compare-nominal",
            action="store_true",
            help="replay each episode without perturbations and report path deviation",
        )
        parser.add_argument("--out", help="output directory (default: runs/<name>/eval)")

    def config_source(self, args):
        """--config when given, else the config.json saved next to the
           checkpoints, else the default preset.
        """
        if args.config:
            return args.config
        root = os.path.abspath(args.checkpoint)
        if os.path.basename(root) == "checkpoints":
            root = os.path.dirname(root)
        saved = os.path.join(root, "config.json")
        return saved if os.path.isfile(saved) else "default"

    def run(self, args):
        overrides = FlagOverrides(
            args,
            keys={"episodes": "evaluation.episodes", "max_steps": "evaluation.max_steps"},
        )
        config = load_config(self.config_source(args), overrides)
        out = args.out or default_out_dir(config, "eval")
        artifacts, metrics = run_evaluation(
            config,
            args.checkpoint,
            out,
            compare_nominal=args.compare_nominal,
            workers=max(1, args.workers),
        )
        print(json.dumps(metrics, indent=2, sort_keys=True))
        return artifacts


def setup(app):
    app.add_command(Evaluate(app))
