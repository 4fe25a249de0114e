"""
Fully-connected networks with rectifier hidden layers, written directly in
numpy: deterministic initialization, a forward pass that records what the
backward pass needs, and exact reverse-mode gradients.

Weights are stored as (fan_in, fan_out) matrices so a batch of inputs, one
per row, is propagated with ``x @ W + b``. Single vectors are accepted as
well and give single vectors back.
"""
from collections import namedtuple

import numpy as np

from ..exceptions import ContractViolation


__all__ = (
    "MlpParameters",
    "ForwardCache",
    "OUTPUT_ACTIVATIONS",
    "init",
    "forward",
    "backward",
)

HIDDEN_ACTIVATIONS = ("relu",)
OUTPUT_ACTIVATIONS = ("linear", "tanh")
# Largest double below 1; saturated tanh outputs stay strictly inside (-1, 1).
TANH_BOUND = np.nextafter(1.0, 0.0)


class MlpParameters(object):
    """
    Weights and biases of one network.

    Every in-place change must be followed by `touch`, which bumps
    :attr:`version` so forward caches taken before the change are rejected
    by `backward`.
    """

    __slots__ = ("weights", "biases", "hidden_activation", "output_activation", "version")

    def __init__(self, weights, biases, hidden_activation="relu", output_activation="linear"):
        if hidden_activation not in HIDDEN_ACTIVATIONS:
            raise ValueError("Unknown hidden activation %r" % (hidden_activation,))
        if output_activation not in OUTPUT_ACTIVATIONS:
            raise ValueError("Unknown output activation %r" % (output_activation,))
        weights = [np.asarray(w, dtype=np.float64) for w in weights]
        biases = [np.asarray(b, dtype=np.float64) for b in biases]
        if len(weights) != len(biases) or not weights:
            raise ContractViolation("Need one bias vector per weight matrix")
        for i, (w, b) in enumerate(zip(weights, biases)):
            if w.ndim != 2 or b.shape != (w.shape[1],):
                raise ContractViolation(
                    "Layer %d: weight %r does not match bias %r" % (i, w.shape, b.shape)
                )
            if i and weights[i - 1].shape[1] != w.shape[0]:
                raise ContractViolation(
                    "Layer %d expects %d inputs, previous layer gives %d"
                    % (i, w.shape[0], weights[i - 1].shape[1])
                )
        self.weights = weights
        self.biases = biases
        self.hidden_activation = hidden_activation
        self.output_activation = output_activation
        self.version = 0

    @property
    def sizes(self):
        return tuple([self.weights[0].shape[0]] + [w.shape[1] for w in self.weights])

    @property
    def input_size(self):
        return self.weights[0].shape[0]

    @property
    def output_size(self):
        return self.weights[-1].shape[1]

    def arrays(self):
        """Parameter arrays in a fixed order: W0, b0, W1, b1, ..."""
        out = []
        for w, b in zip(self.weights, self.biases):
            out.extend((w, b))
        return out

    def copy(self):
        return MlpParameters(
            [w.copy() for w in self.weights],
            [b.copy() for b in self.biases],
            self.hidden_activation,
            self.output_activation,
        )

    def touch(self):
        self.version += 1

    def is_finite(self):
        return all(np.all(np.isfinite(a)) for a in self.arrays())

    def equals(self, other):
        """Bitwise equality of shapes, activations and every parameter."""
        return (
            self.sizes == other.sizes
            and self.hidden_activation == other.hidden_activation
            and self.output_activation == other.output_activation
            and all(np.array_equal(a, b) for a, b in zip(self.arrays(), other.arrays()))
        )


ForwardCache = namedtuple(
    "ForwardCache", ("owner", "version", "single", "activations", "output")
)
ForwardCache.__doc__ = """Layer inputs recorded by `forward`. activations[i] is the input
of layer i; activations[0] is the network input."""


def init(rng, sizes, output_activation="linear", hidden_activation="relu"):
    """Fan-in scaled uniform initialization: every weight and bias of a
       layer with n inputs is drawn from U(-1/sqrt(n), 1/sqrt(n)).
    """
    if len(sizes) < 2 or any(int(s) < 1 for s in sizes):
        raise ValueError("Layer sizes must be >= 1 and at least two, got %r" % (sizes,))
    weights, biases = [], []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
        bound = 1.0 / np.sqrt(fan_in)
        weights.append(rng.uniform(-bound, bound, size=(fan_in, fan_out)))
        biases.append(rng.uniform(-bound, bound, size=fan_out))
    return MlpParameters(weights, biases, hidden_activation, output_activation)


def forward(params, x):
    """
    Evaluate the network.

    Parameters
    ----------
    params : MlpParameters
    x : array_like
        One input vector, or a batch with one input per row.

    Returns
    -------
    output : numpy.ndarray
    cache : ForwardCache
        Needed by `backward`; valid until `params` is touched.
    """
    x = np.asarray(x, dtype=np.float64)
    single = x.ndim == 1
    if single:
        x = x[np.newaxis, :]
    if x.ndim != 2 or x.shape[1] != params.input_size:
        raise ContractViolation(
            "Network expects %d inputs, got shape %r" % (params.input_size, x.shape)
        )
    activations = [x]
    h = x
    last = len(params.weights) - 1
    for i, (w, b) in enumerate(zip(params.weights, params.biases)):
        z = h @ w + b
        if i < last:
            h = np.maximum(z, 0.0)
            activations.append(h)
        elif params.output_activation == "tanh":
            h = np.clip(np.tanh(z), -TANH_BOUND, TANH_BOUND)
        else:
            h = z
    cache = ForwardCache(params, params.version, single, activations, h)
    return (h[0] if single else h), cache


def backward(params, cache, grad_output):
    """
    Reverse-mode gradients of ``sum(grad_output * output)``.

    Returns
    -------
    grads : list of numpy.ndarray
        Same order as `MlpParameters.arrays`, summed over the batch.
    grad_input : numpy.ndarray
        Gradient with respect to the network input, per row.

    Raises
    ------
    ContractViolation
        The cache belongs to other parameters, or the parameters changed
        since it was taken.
    """
    if cache.owner is not params or cache.version != params.version:
        raise ContractViolation("Stale forward cache: parameters changed since forward()")
    g = np.asarray(grad_output, dtype=np.float64)
    if cache.single:
        g = g[np.newaxis, :]
    if g.shape != cache.output.shape:
        raise ContractViolation(
            "Output gradient shape %r does not match output %r" % (g.shape, cache.output.shape)
        )
    if params.output_activation == "tanh":
        g = g * (1.0 - cache.output * cache.output)
    grads = [None] * (2 * len(params.weights))
    for i in range(len(params.weights) - 1, -1, -1):
        h_in = cache.activations[i]
        grads[2 * i] = h_in.T @ g
        grads[2 * i + 1] = g.sum(axis=0)
        g = g @ params.weights[i].T
        if i > 0:
            # Rectifier: gradient flows where the unit was active.
            g = g * (h_in > 0.0)
    return grads, (g[0] if cache.single else g)
