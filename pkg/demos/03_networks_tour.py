"""Shapes and parameter counts of the seven-network bundle.

Run:  python3 demos/03_networks_tour.py
"""

import numpy as np

from uda_forge.networks import ArchConfig, build_bundle, discriminate, segment, translate
from uda_forge.tensor import Tensor, make_rng, no_grad

arch = ArchConfig()
bundle = build_bundle(arch, make_rng(0))

print("bundle networks and parameter counts:")
for name in bundle.NETS:
    n = sum(p.data.size for p in bundle.net_params(name))
    print(f"  {name:6s} {n:8d} parameters")

x = Tensor(make_rng(1).uniform(-1, 1, (1, 3, 64, 64)).astype(np.float32))
with no_grad():
    fake = translate(bundle.g_s2t, x)
    rec = translate(bundle.g_t2s, fake)
    feats, probs = segment(bundle.seg, fake)
    img_scores = discriminate(bundle.d_t, fake)
    feat_scores = discriminate(bundle.df_t, feats)

print(f"\nimage {tuple(x.shape)} -> translated {tuple(fake.shape)} -> reconstructed {tuple(rec.shape)}")
print(f"encoder features {tuple(feats.shape)}  (output stride {x.shape[2] // feats.shape[2]})")
print(f"class probabilities {tuple(probs.shape)}, per-pixel sum {probs.data.sum(axis=1).mean():.6f}")
print(f"image-level score map {tuple(img_scores.shape)}  (five stride-2 layers: 64 -> 2)")
print(f"feature-level score map {tuple(feat_scores.shape)}  (same cascade, stride 1)")
print(f"translated values stay inside (-1, 1): max |y| = {np.abs(fake.data).max():.6f}")
