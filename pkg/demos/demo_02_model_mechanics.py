"""Poke at the model's moving parts on a tiny configuration.

Shows the stage-by-stage pipeline on one frame: preprocessing, the patch
bijection, the token matrix with its time-indexed class token, the encoder,
and the probability head. Ends with a finite-difference spot check that the
hand-written backward pass is exact.

Run:  python demos/demo_02_model_mechanics.py
"""

import numpy as np

import embryoscreen as es
from embryoscreen import vit
from embryoscreen.training import _batch_loss_and_grad

rng = np.random.default_rng(0)

# full-size geometry first: 224x224 -> 196 patches of 16x16
image = rng.integers(0, 256, size=(820, 1344, 3), dtype=np.uint8)
x = es.preprocess(image)
print(f"preprocess: {image.shape} uint8 -> {x.shape} in [{x.min():.2f}, {x.max():.2f}]")
patches = es.patchify(x, 16)
print(f"patchify: {patches.shape} (patch grid 14x14, rows are flattened 16x16x3 patches)")

# everything else on a tiny config so it runs instantly
cfg = es.ModelConfig(
    patch_size=4, hidden_dim=8, n_layers=2, n_heads=2, image_size=(8, 8),
    n_channels=1, n_timesteps=10, n_classes=1, head_activation="sigmoid",
    dtype="float64",
)
params = es.init_parameters(cfg, seed=1)
frame = rng.random((8, 8, 1))

tok_t3 = es.embed_frame(frame, 3, params, cfg)
tok_t8 = es.embed_frame(frame, 8, params, cfg)
print(f"token matrix: {tok_t3.shape} (class token + {cfg.n_patches} patches)")
print(
    "changing t changes row 0 only:",
    bool(np.array_equal(tok_t3[1:], tok_t8[1:]) and not np.array_equal(tok_t3[0], tok_t8[0])),
)

h = es.encode(tok_t3, params, cfg)
y = es.classify(h, params, cfg)
print(f"encode -> {h.shape}, classify -> p(alive) = {y[0]:.4f}")

# gradient spot check: analytic vs central finite differences
images = rng.random((2, 8, 8, 1))
ts = np.array([1, 7])
targets = np.array([1, 0])

def loss():
    out, _ = es.forward_batch(images, ts, params, cfg)
    value, _ = _batch_loss_and_grad(out, targets, 1)
    return value

out, cache = es.forward_batch(images, ts, params, cfg, want_cache=True)
_, dy = _batch_loss_and_grad(out, targets, 1)
grads = vit.backward_batch(dy, params, cfg, cache)

key = "temporal_embed"
numeric = np.zeros_like(params[key])
flat, nflat = params[key].reshape(-1), numeric.reshape(-1)
for i in range(flat.size):
    orig = flat[i]
    flat[i] = orig + 1e-5
    up = loss()
    flat[i] = orig - 1e-5
    down = loss()
    flat[i] = orig
    nflat[i] = (up - down) / 2e-5
err = np.abs(numeric - grads[key]).max() / max(np.abs(numeric).max(), 1e-12)
print(f"finite-difference check on {key}: max relative error {err:.2e}")
