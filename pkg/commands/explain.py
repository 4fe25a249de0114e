import json

from auvform.config import explain

from commands._options import add_config_arguments
from utils.jsonLoader import load_config
from utils.Parsers import FlagOverrides


class ExplainConfig(object):
    name = "explain-config"
    help = "list every configuration key with its resolved value and provenance"

    def __init__(self, app):
        self.app = app

    def add_arguments(self, parser):
        add_config_arguments(parser)

    def run(self, args):
        config = load_config(args.config, FlagOverrides(args))
        lines = []
        for path, value, provenance in explain(config):
            lines.append("%-42s %-20s %s" % (path, json.dumps(value), provenance))
        print("\n".join(lines))
        return lines


def setup(app):
    app.add_command(ExplainConfig(app))
