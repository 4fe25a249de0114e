import numpy as np

from ..exceptions import ContractViolation


__all__ = ("AdamState", "adam_step")


class AdamState(object):
    """Moment accumulators of one network plus the optimizer settings."""

    __slots__ = ("m", "v", "step", "lr", "beta1", "beta2", "eps")

    def __init__(self, m, v, step=0, lr=1e-3, beta1=0.9, beta2=0.999, eps=1e-8):
        self.m = m
        self.v = v
        self.step = step
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps

    @classmethod
    def zeros_like(cls, params, lr=1e-3, beta1=0.9, beta2=0.999, eps=1e-8):
        arrays = params.arrays()
        return cls(
            [np.zeros_like(a) for a in arrays],
            [np.zeros_like(a) for a in arrays],
            0,
            lr,
            beta1,
            beta2,
            eps,
        )

    def copy(self):
        return AdamState(
            [a.copy() for a in self.m],
            [a.copy() for a in self.v],
            self.step,
            self.lr,
            self.beta1,
            self.beta2,
            self.eps,
        )

    def equals(self, other):
        return (
            (self.step, self.lr, self.beta1, self.beta2, self.eps)
            == (other.step, other.lr, other.beta1, other.beta2, other.eps)
            and all(np.array_equal(a, b) for a, b in zip(self.m, other.m))
            and all(np.array_equal(a, b) for a, b in zip(self.v, other.v))
        )


def adam_step(params, grads, state):
    """One bias-corrected Adam descent step on `params`, in place.

    Returns ``(params, state)`` for convenience.
    """
    arrays = params.arrays()
    if len(grads) != len(arrays) or len(state.m) != len(arrays):
        raise ContractViolation(
            "Expected %d gradient arrays, got %d" % (len(arrays), len(grads))
        )
    state.step += 1
    t = state.step
    correction1 = 1.0 - state.beta1 ** t
    correction2 = 1.0 - state.beta2 ** t
    for p, g, m, v in zip(arrays, grads, state.m, state.v):
        if g.shape != p.shape:
            raise ContractViolation("Gradient shape %r != parameter %r" % (g.shape, p.shape))
        m *= state.beta1
        m += (1.0 - state.beta1) * g
        v *= state.beta2
        v += (1.0 - state.beta2) * (g * g)
        p -= state.lr * (m / correction1) / (np.sqrt(v / correction2) + state.eps)
    params.touch()
    return params, state
