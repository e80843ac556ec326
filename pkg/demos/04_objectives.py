"""The adversarial game's loss terms on hand-crafted inputs.

Run:  python3 demos/04_objectives.py
"""

import numpy as np

from uda_forge.losses import (
    LossWeights, cross_entropy, cycle_loss, lsgan_discriminator_loss,
    lsgan_generator_loss, pseudo_labels, total_generator_loss,
)
from uda_forge.tensor import Tensor


def scores(v):
    return Tensor(np.full((1, 1, 2, 2), v, dtype=np.float32))


print("== least-squares adversarial targets: real->1, fake->0 ==")
print(f"ideal discriminator (real=1, fake=0): {lsgan_discriminator_loss(scores(1), scores(0)).item()}")
print(f"confused discriminator (both 0.5):    {lsgan_discriminator_loss(scores(.5), scores(.5)).item()}")
print(f"generator when fully detected:        {lsgan_generator_loss(scores(0)).item()}")
print(f"generator when fooling (fake->1):     {lsgan_generator_loss(scores(1)).item()}")

print("\n== cycle consistency is plain L1 of reconstructions ==")
x = Tensor(np.zeros((1, 3, 2, 2), dtype=np.float32))
off = Tensor(np.full((1, 3, 2, 2), 0.25, dtype=np.float32))
print(f"perfect reconstruction: {cycle_loss(x, x, x, x).item()}")
print(f"0.25 off everywhere:    {cycle_loss(x, off, x, x).item()}")

print("\n== cross-entropy against labels, and against pseudo-labels ==")
probs = Tensor(np.array([0.5, 0.5], dtype=np.float32).reshape(1, 2, 1, 1))
labels = np.zeros((1, 1, 1), dtype=np.int64)
print(f"coin-flip prediction, true class 0: {cross_entropy(probs, labels).item():.6f} (= ln 2)")
confident = Tensor(np.array([0.9, 0.1], dtype=np.float32).reshape(1, 2, 1, 1))
print(f"pseudo-label of [0.9, 0.1] is argmax -> class {pseudo_labels(confident)[0, 0, 0]}")

print("\n== the weighted total objective ==")
w = LossWeights()
print(f"weights: cycle {w.lambda_cycle}, semantic {w.lambda_sem}, "
      f"feature {w.lambda_feat}, supervised {w.lambda_ce}")
one = lambda: Tensor(np.array(1.0))
total = total_generator_loss(one(), one(), one(), one(), one(), one(), one(), w)
print(f"every term at 1.0 -> total {total.item():.4f} "
      "(= 2 + 1e-4*2 + 20 + 0.1 + 1)")
