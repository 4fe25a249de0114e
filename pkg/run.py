import argparse
import importlib
import logging
import os
import sys
from pathlib import Path

from auvform import __version__
from utils.util import configure_logging

cwd = Path(__file__).parents[0]
cwd = str(cwd)

logger = logging.getLogger("run")


class App(object):
    """The command line tool: an argparse parser whose sub-commands are
       contributed by the modules in ./commands.
    """

    def __init__(self):
        self.parser = argparse.ArgumentParser(
            prog="run.py",
            description="Train and evaluate leader-follower AUV formations with TD3.",
        )
        self.parser.add_argument(
            "--version", action="version", version="%(prog)s " + __version__
        )
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="COMMAND")
        self.commands = {}
        self.error_handler = None

    def load_extension(self, name):
        module = importlib.import_module(name)
        module.setup(self)

    def add_command(self, command):
        sub = self.subparsers.add_parser(
            command.name, help=command.help, description=command.help
        )
        command.add_arguments(sub)
        sub.set_defaults(handler=command)
        self.commands[command.name] = command

    def run(self, argv=None):
        args = self.parser.parse_args(argv)
        if not getattr(args, "handler", None):
            self.parser.print_help()
            return 2
        try:
            args.handler.run(args)
        except Exception as err:
            if self.error_handler is None:
                raise
            return self.error_handler.on_command_error(args.command, err)
        return 0


def build_app():
    app = App()
    for file in sorted(os.listdir(cwd + "/commands")):
        if file.endswith(".py") and not file.startswith("_"):
            app.load_extension(f"commands.{file[:-3]}")
    return app


def main(argv=None):
    configure_logging()
    return build_app().run(argv)


if __name__ == "__main__":
    sys.exit(main())
