"""Tour of the tensor engine: forward ops, backward pass, gradient checking.

Run:  python3 demos/01_autodiff_and_gradcheck.py
"""

import numpy as np

from uda_forge import (
    Tensor, backward, conv2d, gradient_check, instance_norm,
    projection_loss, softmax, tanh, tsum,
)
from uda_forge.tensor import mul, square

print("== scalars and gradients ==")
x = Tensor([1.0, 2.0], requires_grad=True)
loss = tsum(square(x))
backward(loss)
print(f"loss = sum(x^2) at x=[1,2]  ->  {loss.item()}   dloss/dx = {x.grad}")

print("\n== gradients accumulate until cleared ==")
backward(loss)
print(f"after a second backward: dloss/dx = {x.grad}  (exactly doubled)")

print("\n== convolution is cross-correlation ==")
img = Tensor(np.arange(16, dtype=np.float32).reshape(1, 1, 4, 4))
edge = Tensor(np.array([[[[1.0, -1.0]]]]))
resp = conv2d(img, edge)
print(f"4x4 ramp * horizontal edge kernel -> constant response {resp.data[0, 0, 0, 0]}")

print("\n== softmax stays a simplex no matter the logit scale ==")
logits = Tensor(np.array([[1000.0, 1001.0, 999.0]]))
p = softmax(logits, axis=1)
print(f"softmax([1000,1001,999]) = {np.round(p.data, 4)}  (sum {p.data.sum():.6f})")

print("\n== finite differences vouch for every backward rule ==")
rng = np.random.default_rng(0)
for name, builder, shapes in [
    ("conv2d", projection_loss(lambda a, w: conv2d(a, w, padding=1), rng),
     [(1, 2, 4, 4), (3, 2, 3, 3)]),
    ("instance_norm", projection_loss(lambda a, g, b: instance_norm(a, g, b), rng),
     [(1, 3, 4, 4), (3,), (3,)]),
    ("tanh", projection_loss(lambda a: tanh(a), rng), [(2, 5)]),
]:
    err = gradient_check(builder, shapes, rng)
    print(f"  {name:14s} max relative error vs central differences: {err:.2e}")
