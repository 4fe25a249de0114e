"""
Contains the `Exceptions` used by this library.
"""


class AuvFormError(Exception):
    """Base `Exception` for every error raised on purpose by `auvform`."""


class ConfigurationError(AuvFormError):
    """
    Raised when a scenario configuration cannot be used.

    :param str message: A human-readable string representation of the error.
    :param str field: Initial value of :attr:`field`.
    :param int line: Initial value of :attr:`line`.
    """

    def __init__(self, message=None, field=None, line=None):
        super(ConfigurationError, self).__init__(message)
        self.field = field
        self.line = line

    field = None
    """`str` or `None`. Dotted path of the offending key, such as
       `"td3.batch_size"`. May be set.
    """

    line = None
    """`int` or `None`. Line number in the configuration file for syntax
       errors. May be set.
    """

    def __str__(self):
        message = super(ConfigurationError, self).__str__()
        if self.field is not None:
            message = "%s: %s" % (self.field, message)
        if self.line is not None:
            message = "line %d: %s" % (self.line, message)
        return message


class ScenarioError(AuvFormError):
    """Raised by scenario generation when obstacles cannot be placed after the
       configured number of retries.
    """


class SimulationFault(AuvFormError):
    """
    Raised when the vehicle dynamics produce or receive non-finite values.

    :param str message: A human-readable string representation of the error.
    :param str agent: Initial value of :attr:`agent`.
    :param int step: Initial value of :attr:`step`.
    :param state: Initial value of :attr:`state`.
    :param control: Initial value of :attr:`control`.
    """

    def __init__(self, message=None, agent=None, step=None, state=None, control=None):
        super(SimulationFault, self).__init__(message)
        self.agent = agent
        self.step = step
        self.state = state
        self.control = control

    agent = None
    """`str` or `None`. Name of the AUV whose integration failed. Set by the
       environment when the fault crosses `World.step`.
    """

    step = None
    """`int` or `None`. Episode step index at which the fault occurred."""

    state = None
    """`VehicleState` or `None`. Diagnostic dump of the state entering the
       failing step.
    """

    control = None
    """`ControlInput` or `None`. The control held over the failing step."""

    def __str__(self):
        message = super(SimulationFault, self).__str__()
        where = []
        if self.agent is not None:
            where.append("agent=%s" % self.agent)
        if self.step is not None:
            where.append("step=%d" % self.step)
        if self.state is not None:
            where.append("state=%r" % (self.state,))
        if self.control is not None:
            where.append("control=%r" % (self.control,))
        return "%s (%s)" % (message, ", ".join(where)) if where else message


class ContractViolation(AuvFormError):
    """Raised when a caller breaks a documented precondition: mismatched
       shapes, a stale forward cache or an unsaturated control signal.
    """


class DegenerateGeometry(AuvFormError):
    """Raised by `circumcenter` for (nearly) collinear points. Callers that
       need a circle regardless use `enclosing_circle`, which falls back to
       the centroid.
    """


class NotReady(AuvFormError):
    """Raised by `ReplayBuffer.sample_minibatch` while the buffer holds fewer
       transitions than requested. The learner skips its update.
    """


class IntegrityError(AuvFormError):
    """Raised when a serialized byte stream is truncated, carries a bad magic
       header or fails its digest check. No partial state is returned.
    """


class VersionMismatch(IntegrityError):
    """
    Raised when a byte stream was written with an unsupported format version.

    :param str message: A human-readable string representation of the error.
    :param expected: Initial value of :attr:`expected`.
    :param int found: Initial value of :attr:`found`.
    """

    def __init__(self, message=None, expected=None, found=None):
        if message is None:
            message = "Unsupported format version: expected %s, found %s." % (
                expected,
                found,
            )
        super(VersionMismatch, self).__init__(message)
        self.expected = expected
        self.found = found

    expected = None
    """The version (or tuple of versions) this reader accepts."""

    found = None
    """`int`. The version stored in the stream."""


class DimensionMismatch(AuvFormError):
    """
    Raised when network widths stored in a checkpoint disagree with the
    observation or action widths of the scenario it is evaluated under.

    :param str message: A human-readable string representation of the error.
    :param int expected: Initial value of :attr:`expected`.
    :param int found: Initial value of :attr:`found`.
    """

    def __init__(self, message=None, expected=None, found=None):
        super(DimensionMismatch, self).__init__(message)
        self.expected = expected
        self.found = found

    expected = None
    """`int`. Width required by the scenario."""

    found = None
    """`int`. Width stored in the checkpoint."""


class TrainingDiverged(AuvFormError):
    """
    Raised when a loss or a network parameter becomes NaN or infinite.

    :param str message: A human-readable string representation of the error.
    :param str agent: Initial value of :attr:`agent`.
    :param int episode: Initial value of :attr:`episode`.
    :param int step: Initial value of :attr:`step`.
    """

    def __init__(self, message=None, agent=None, episode=None, step=None):
        super(TrainingDiverged, self).__init__(message)
        self.agent = agent
        self.episode = episode
        self.step = step

    agent = None
    """`str` or `None`. Name of the learner that diverged."""

    episode = None
    """`int` or `None`. Episode index at the time of divergence."""

    step = None
    """`int` or `None`. Step index inside that episode."""

    def __str__(self):
        message = super(TrainingDiverged, self).__str__()
        return "%s (agent=%s, episode=%s, step=%s)" % (
            message,
            self.agent,
            self.episode,
            self.step,
        )
