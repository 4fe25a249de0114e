import logging

from auvform.runner import run_export

from utils.jsonLoader import load_config


class Export(object):
    name = "export"
    help = "split a trajectory CSV into per-agent paths and formation errors"

    def __init__(self, app):
        self.app = app
        self.logger = logging.getLogger(__name__)

    def add_arguments(self, parser):
        parser.add_argument("trajectory", help="trajectory.csv written by train or eval")
        parser.add_argument("--out", default="export", help="output directory")
        parser.add_argument(
            "--config",
            default="default",
            help="configuration providing the desired formation (default: %(default)s)",
        )

    def run(self, args):
        formation = load_config(args.config)["formation"]
        written = run_export(args.trajectory, args.out, formation)
        for path in written:
            print(path)
        return written


def setup(app):
    app.add_command(Export(app))
