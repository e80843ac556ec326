"""A miniature end-to-end adaptation run (small dataset, few steps).

This is the full pipeline - pretraining, warmup, joint adversarial
optimization, evaluation, translation dumps - shrunk to about two
minutes of CPU time. Real experiments use the defaults (see README).

Run:  python3 demos/05_miniature_adaptation.py   (output under demos/out/mini/)
"""

import json
from pathlib import Path

from uda_forge.config import config_from_dict
from uda_forge.datagen import make_splits, save_dataset
from uda_forge.evaluation import evaluate_checkpoint
from uda_forge.training import run_training

out = Path(__file__).parent / "out" / "mini"
data = out / "data"

cfg = config_from_dict({
    "seed": 0,
    "dataset": {"source_train": 48, "target_train": 48, "source_val": 12, "target_val": 12,
                 "scene": {"coverage_batch": 48}},
    "train": {"pretrain_steps": 120, "total_steps": 160, "warmup_steps": 40,
               "log_interval": 20, "checkpoint_interval": 80},
})

if not (data / "manifest.json").exists():
    print("generating miniature dataset...")
    splits = make_splits(cfg.dataset, cfg.seed)
    save_dataset(data, splits, cfg.dataset, cfg.seed)

run_dir = out / "run"
if not (run_dir / "final.bin").exists():
    print("training (pretrain 120 steps, joint 160 steps, warmup 40)...")
    run_training(cfg, data, run_dir,
                 progress=lambda m: m.step % 40 == 0 and print(
                     f"  step {m.step}: total {m.report.total:.3f} cycle {m.report.cycle:.3f}"))

for split in ("source_val", "target_val"):
    rep = evaluate_checkpoint(run_dir / "final.bin", data, split=split)
    per_class = ", ".join(f"{r['class']}:{r['iou']:.2f}" for r in rep["per_class"])
    print(f"{split}: mIoU {rep['miou']:.3f}  [{per_class}]")

print(f"\nartifacts: {run_dir}")
print("  metrics.csv, checkpoints/, translations/ (original|adapted|reconstructed strips)")
print("a real run needs the default config and a few CPU hours; this miniature")
print("only shows the mechanics, not the adaptation quality")
