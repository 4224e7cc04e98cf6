"""Standardized entropy rewards along expert and random videos.

Uses the fast preset (trained in seconds, so the separation is weak); point it
at a desk run for the real picture:

    python demos/03_reward_curves.py [out_dir] [preset]
"""

import sys

import numpy as np

from diffreward.harness import Pipeline, pooled_gap, preset, reward_curve_report
from diffreward.reward import diffusion_reward

root = sys.argv[1] if len(sys.argv) > 1 else "runs/fast"
name = sys.argv[2] if len(sys.argv) > 2 else "fast"
pipe = Pipeline(preset(name, out_dir=root))
bundle = pipe.bundle("ce")
print(f"expert statistics: mean {bundle.stats.mean:.3f}, std {bundle.stats.std:.3f} over {bundle.stats.n} steps")

a = pipe.config.analysis
groups = {"expert": pipe.rollouts(pipe.seen, 0.0, a.videos_per_task, a.seed),
          "random": pipe.rollouts(pipe.seen, 1.0, a.videos_per_task, a.seed)}
report = reward_curve_report(bundle, groups, pipe.root / "analysis" / "demo", rng=0)
for label, entry in report.items():
    print(f"{label:6s}: mean standardized reward {entry['mean']:+.3f} over {len(entry['values'])} steps")
print(f"gap in pooled std units: {pooled_gap(report['expert']['values'], report['random']['values']):.3f}")

# the composite reward an agent would see for one transition
frames = groups["expert"][0].frames
terms = diffusion_reward(list(frames[:2]), frames[2], sparse=0.0, bundle=bundle, rng=np.random.default_rng(0))
print("composite reward terms:", {k: round(v, 3) for k, v in terms.items()})
print(f"CSV and plot in {pipe.root / 'analysis' / 'demo'}")
