"""Train a small model end to end and stream early decisions.

Generates a separable synthetic fertility run, trains a reduced model for a
couple of epochs, optimizes per-timestep confidence thresholds on the
validation split, and reports when each test sequence could have been
called. Saves the four standard figures.

Takes a few minutes on one CPU core.
Run:  python demos/demo_03_train_and_decide.py
"""

import os

import numpy as np

import embryoscreen as es
from embryoscreen import decision, plots

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

spec = es.fertility_task()
config = es.SynthConfig(
    spec=spec, n_runs=1, image_size=(32, 32), separability=1.0, noise_std=0.02, seed=11
)
data_dir = os.path.join(OUT, "train_demo_data")
manifest = es.generate_dataset(config, data_dir)
sequences = es.parse_manifest(manifest, spec)
split = es.split_dataset(list(sequences), (0.70, 0.15, 0.15), seed=0, spec=spec)
print(f"split: {split.sizes} (train/val/test sequences)")

model_config = es.ModelConfig.for_task(
    spec, image_size=(32, 32), patch_size=8, hidden_dim=64, n_layers=2, n_heads=4
)
train_config = es.TrainConfig(batch_size=64, max_epochs=2, seed=0)
result = es.train(split, spec, model_config, train_config, verbose=True)
print(f"best validation sequence accuracy: {result.best_metric:.3f}")

ckpt = result.checkpoint
val = list(split.validation)
test = list(split.test)
val_traces = es.predict_sequences(ckpt, val)
test_traces = es.predict_sequences(ckpt, test)
test_labels = [s.sequence_label for s in test]

policy = es.optimize_thresholds(val_traces, [s.sequence_label for s in val], spec)
print(f"optimized smoothing window: {policy.window}")

report = decision.build_report(
    [s.sequence_id for s in test], test_traces, test_labels, spec, policy
)
print(
    f"decided accuracy {report.decided_accuracy:.3f}, "
    f"mean decision time {report.mean_decision_time:.1f} of {spec.frames_per_sequence} frames, "
    f"ECE {report.ece:.3f}"
)
for d in report.decisions[:6]:
    state = "ok " if d.correct else "BAD"
    print(f"  {state} {d.sequence_id}: called {d.verdict!r} at t={d.t_star} (truth {d.label!r})")

for path in plots.render_all(test_traces, test_labels, spec, OUT):
    print(f"wrote {path}")
