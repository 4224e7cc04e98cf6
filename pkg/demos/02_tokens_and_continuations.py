"""From frames to tokens to predicted next frames.

Trains (or loads) the fast-preset tokenizer and diffusion model, then samples
a few continuations of an expert history and a random history. Low diversity
among the samples is what the entropy reward measures.

    python demos/02_tokens_and_continuations.py [out_dir]
"""

import sys

import numpy as np
from PIL import Image

from diffreward.diffusion import sample
from diffreward.harness import Pipeline, preset
from diffreward.metrics import pairwise_similarity

root = sys.argv[1] if len(sys.argv) > 1 else "runs/fast"
pipe = Pipeline(preset("fast", out_dir=root))
tok, dm = pipe.tokenizer(), pipe.diffusion()

video = pipe.expert_videos()[0]
tokens = tok.encode(video.frames)
print("token grid of the first frame:")
print(tokens[0])
recon = tok.decode(tokens)
print(f"reconstruction error (mean abs, 0-255): {np.abs(recon.astype(int) - video.frames).mean():.2f}")

rng = np.random.default_rng(0)
histories = {"expert": video.frames, "random": pipe.rollouts(pipe.seen[:1], 1.0, 1, seed=0)[0].frames}
rows = []
for label, frames in histories.items():
    cond = np.repeat(tok.encode(frames[1:1 + dm.ell]).reshape(1, -1), 4, 0)
    final = sample(cond, dm.denoiser, dm.schedule, steps=5, rng=rng).final.numpy()
    decoded = tok.decode(final.reshape(4, *dm.grid))
    sim = pairwise_similarity(list(decoded))
    print(f"{label:6s} history: mean pairwise SSIM of 4 continuations {sim['ssim']:.3f}")
    rows.append(np.concatenate([frames[1 + dm.ell - 1], *decoded], axis=1))
Image.fromarray(np.concatenate(rows, axis=0)).save(pipe.root / "continuations.png")
print(f"history frame plus samples written to {pipe.root / 'continuations.png'}")
