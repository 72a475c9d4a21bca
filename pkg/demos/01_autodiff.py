"""Reverse-mode autodiff on a small network.

Builds a two-layer tanh network, records it on a tape, and compares the
backward pass with central differences.
"""
import numpy as np

from latentode import diffcore as dc
from latentode.diffcore import ParamSet, Tape, backward, finite_diff

rng = np.random.default_rng(0)
params = ParamSet(w1=rng.normal(size=(4, 3)), b1=np.zeros(4), w2=rng.normal(size=(1, 4)))
x, y = rng.normal(size=3), np.array([0.5])


def loss(p):
    h = dc.tanh(dc.linear(x, p["w1"], p["b1"]))
    return dc.sum(dc.square(dc.linear(h, p["w2"]) - y))


with Tape() as tape:
    value = loss(params)
    recorded = len(tape)
    grads = backward(value, params)
print(f"loss {value.item():.6f}; tape recorded {recorded} nodes")

numeric = finite_diff(loss, params)
for name in params:
    err = np.max(np.abs(grads[name].data - numeric[name].data))
    print(f"{name:>3}: max |backward - central difference| = {err:.2e}")

# outside a tape nothing is recorded, so plain evaluation costs no memory
with dc.no_grad():
    print("no-grad value:", loss(params).item())
