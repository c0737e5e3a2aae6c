"""The decision engine on its own, no trained model required.

Builds synthetic probability traces with known ground truth, then walks
through smoothing modes, the confidence measure, earliest-decision
thresholding (fixed vs. per-timestep optimized), and expected calibration
error on simulated predictions.

Run:  python demos/demo_04_calibration_and_smoothing.py
"""

import numpy as np

import embryoscreen as es
from embryoscreen import decision

spec = es.fertility_task()
rng = np.random.default_rng(4)
n_seq, n = 60, spec.frames_per_sequence

# noisy traces: a subtle class-aligned lean from the start, committing to
# the class at a random onset frame
labels, traces = [], np.empty((n_seq, n))
for i in range(n_seq):
    alive = rng.random() < 0.5
    labels.append("alive" if alive else "unfertilized")
    onset = int(rng.integers(10, 45))
    direction = 1.0 if alive else -1.0
    target = 0.92 if alive else 0.08
    traces[i, :onset] = 0.5 + direction * 0.1 + rng.normal(0, 0.05, onset)
    traces[i, onset:] = target + rng.normal(0, 0.05, n - onset)
traces = np.clip(traces, 0, 1)

raw = traces[0]
centered = decision.smooth(raw, 13, "centered")
causal = decision.smooth(raw, 13, "causal")
print("smoothing (window 13), first trace:")
print(f"  raw[40:46]      = {np.round(raw[40:46], 3)}")
print(f"  centered[40:46] = {np.round(centered[40:46], 3)}  (offline view)")
print(f"  causal[40:46]   = {np.round(causal[40:46], 3)}  (no look-ahead)")
print(f"confidence at t=45: {decision.confidence(causal[45], spec):.3f}")

# fixed threshold vs validation-optimized per-timestep thresholds
half = n_seq // 2
policy = es.optimize_thresholds(traces[:half], labels[:half], spec)
fixed = [es.earliest_decision(t, spec, 0.9, window=13) for t in traces[half:]]
tuned = [
    es.earliest_decision(t, spec, policy.thresholds, window=policy.window)
    for t in traces[half:]
]
truth = labels[half:]
for name, decs in (("fixed 0.9", fixed), ("optimized", tuned)):
    acc = np.mean([d.verdict == lab for d, lab in zip(decs, truth)])
    t_mean = np.mean([d.t_star for d in decs])
    print(f"{name:10s}: decided accuracy {acc:.3f}, mean decision frame {t_mean:.1f}")

# calibration: well-calibrated vs overconfident predictions
m = 10_000
p = rng.random(m)
outcomes = (rng.random(m) < p).astype(int)
print(f"calibrated simulation ECE:   {es.calibration(p, outcomes).ece:.4f}")
overconfident = np.clip(0.5 + (p - 0.5) * 1.9, 0, 1)
print(f"overconfident simulation ECE: {es.calibration(overconfident, outcomes).ece:.4f}")
