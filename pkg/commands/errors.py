import logging
import sys

from auvform.exceptions import (
    ConfigurationError,
    DimensionMismatch,
    IntegrityError,
    ScenarioError,
    SimulationFault,
    TrainingDiverged,
    VersionMismatch,
)

EXIT_UNEXPECTED = 1
EXIT_CONFIGURATION = 2
EXIT_CHECKPOINT = 3
EXIT_DIVERGED = 4
EXIT_SIMULATION = 5


class Errors(object):
    """Turns exceptions escaping a command into one diagnostic line on
       stderr and a process exit code.
    """

    def __init__(self, app, stream=None):
        self.app = app
        self.stream = stream if stream is not None else sys.stderr
        self.logger = logging.getLogger(__name__)

    def send(self, message):
        self.stream.write(message + "\n")

    def on_command_error(self, command, err):
        if isinstance(err, ConfigurationError):
            self.send(f"Configuration error: {err}")
            return EXIT_CONFIGURATION

        elif isinstance(err, VersionMismatch):
            self.send(f"Checkpoint version error: {err}")
            return EXIT_CHECKPOINT

        elif isinstance(err, DimensionMismatch):
            self.send(
                f"Dimension mismatch: {err} (expected {err.expected}, found {err.found})"
            )
            return EXIT_CHECKPOINT

        elif isinstance(err, IntegrityError):
            self.send(f"Integrity error: {err}")
            return EXIT_CHECKPOINT

        elif isinstance(err, TrainingDiverged):
            self.send(f"Training diverged, partial artifacts flagged as aborted: {err}")
            return EXIT_DIVERGED

        elif isinstance(err, (ScenarioError, SimulationFault)):
            self.send(f"Simulation error: {err}")
            return EXIT_SIMULATION

        else:
            self.logger.exception("Unexpected error in %s", command, exc_info=err)
            self.send(f"Unexpected error: {err!r}")
            return EXIT_UNEXPECTED


def setup(app):
    app.error_handler = Errors(app)
