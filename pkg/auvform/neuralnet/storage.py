"""
Byte layout of one serialized network block::

    UnsignedByte  format version (NETWORK_FORMAT_VERSION)
    String        hidden activation
    String        output activation
    VarInt        number of layers L
    L x (DoubleArray weight, DoubleArray bias)
    Boolean       Adam state present
    [Double lr, Double beta1, Double beta2, Double eps, VarInt step,
     2L x DoubleArray first moments, 2L x DoubleArray second moments]
"""
from .. import NETWORK_FORMAT_VERSION
from ..exceptions import ContractViolation, IntegrityError, VersionMismatch
from ..serialization import (
    Boolean,
    ByteBuffer,
    Double,
    DoubleArray,
    String,
    UnsignedByte,
    VarInt,
)
from .adam import AdamState
from .mlp import MlpParameters


__all__ = (
    "write_network",
    "read_network",
    "serialize_network",
    "deserialize_network",
)


def write_network(buffer, params, adam_state=None):
    UnsignedByte.send(NETWORK_FORMAT_VERSION, buffer)
    String.send(params.hidden_activation, buffer)
    String.send(params.output_activation, buffer)
    VarInt.send(len(params.weights), buffer)
    for w, b in zip(params.weights, params.biases):
        DoubleArray.send(w, buffer)
        DoubleArray.send(b, buffer)
    Boolean.send(adam_state is not None, buffer)
    if adam_state is not None:
        for value in (adam_state.lr, adam_state.beta1, adam_state.beta2, adam_state.eps):
            Double.send(value, buffer)
        VarInt.send(adam_state.step, buffer)
        for array in adam_state.m + adam_state.v:
            DoubleArray.send(array, buffer)


def read_network(buffer):
    """Read one block written by `write_network` from `buffer`.

    Returns ``(params, adam_state_or_None)``.
    """
    version = UnsignedByte.read(buffer)
    if version != NETWORK_FORMAT_VERSION:
        raise VersionMismatch(expected=NETWORK_FORMAT_VERSION, found=version)
    hidden = String.read(buffer)
    output = String.read(buffer)
    layers = VarInt.read(buffer)
    weights, biases = [], []
    for _ in range(layers):
        weights.append(DoubleArray.read(buffer))
        biases.append(DoubleArray.read(buffer))
    try:
        params = MlpParameters(weights, biases, hidden, output)
    except (ContractViolation, ValueError) as e:
        raise IntegrityError("Inconsistent network block: %s" % e)
    adam_state = None
    if Boolean.read(buffer):
        lr, beta1, beta2, eps = (Double.read(buffer) for _ in range(4))
        step = VarInt.read(buffer)
        count = 2 * layers
        moments = [DoubleArray.read(buffer) for _ in range(2 * count)]
        for moment, array in zip(moments, params.arrays() * 2):
            if moment.shape != array.shape:
                raise IntegrityError(
                    "Adam moment shape %r does not match parameter %r"
                    % (moment.shape, array.shape)
                )
        adam_state = AdamState(moments[:count], moments[count:], step, lr, beta1, beta2, eps)
    return params, adam_state


def serialize_network(params, adam_state=None):
    buffer = ByteBuffer()
    write_network(buffer, params, adam_state)
    return buffer.get_writable()


def deserialize_network(data):
    """Exact inverse of `serialize_network`.

    Raises
    ------
    VersionMismatch
        Unknown block version.
    IntegrityError
        Truncated, inconsistent or over-long input.
    """
    buffer = ByteBuffer(data)
    params, adam_state = read_network(buffer)
    if buffer.remaining():
        raise IntegrityError("%d unexpected trailing bytes" % buffer.remaining())
    return params, adam_state
