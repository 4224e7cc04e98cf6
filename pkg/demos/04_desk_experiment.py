"""The full desk-scale experiment behind the acceptance suite.

Builds, in order and with caching: expert data, tokenizer, diffusion model,
entropy and likelihood reward bundles, and RL runs for every reward kind and
seed on the configured task. Finishes with learning-curve plots and a reward
curve report. Several hours on one CPU; rerunning resumes from the cache.

    python demos/04_desk_experiment.py [out_dir] [config]
"""

import logging
import sys
import time

from diffreward.harness import Pipeline, load_config, pooled_gap, reward_curve_report
from diffreward.harness.plots import plot_learning_curves

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(message)s")
root = sys.argv[1] if len(sys.argv) > 1 else "runs/desk"
config = load_config(sys.argv[2] if len(sys.argv) > 2 else "desk")
config.out_dir = root
pipe = Pipeline(config)

t0 = time.time()
for head in ("ce", "ll"):
    b = pipe.bundle(head)
    print(f"[{time.time() - t0:6.0f}s] {head} bundle ready, stats mean {b.stats.mean:.3f} std {b.stats.std:.3f}")

a = config.analysis
groups = {"expert": pipe.rollouts(pipe.seen, 0.0, a.videos_per_task, a.seed),
          "random": pipe.rollouts(pipe.seen, 1.0, a.videos_per_task, a.seed)}
for head in ("ce", "ll"):
    rep = reward_curve_report(pipe.bundle(head), groups, pipe.root / "analysis" / head, rng=a.seed)
    print(f"{head}: held-out expert-random gap {pooled_gap(rep['expert']['values'], rep['random']['values']):.3f}")

rl = config.rl
runs = {}
for kind in rl.kinds:
    for seed in rl.seeds:
        curve = pipe.rl_run(kind, seed)
        runs.setdefault(kind, []).append(curve)
        print(f"[{time.time() - t0:6.0f}s] {rl.task} {kind} seed {seed}: final success {curve[-1]['success_rate']:.2f}")
path = plot_learning_curves(runs, pipe.root / "plots" / f"{rl.task}.png", rl.task)
print(f"learning curves: {path}")
