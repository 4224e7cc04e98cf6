"""The push-block world and its scripted expert.

Renders one expert episode and one random episode side by side as image strips,
and prints how often each policy solves the task.

    python demos/01_environment_and_expert.py [out_dir]
"""

import sys
from pathlib import Path

import numpy as np
from PIL import Image

from diffreward.envs import default_tasks, epsilon_noisy_rollout, expert_rollout

out = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demos")
out.mkdir(parents=True, exist_ok=True)

tasks = default_tasks()
for task in tasks.values():
    print(f"{task.task_id:16s} seen={task.seen!s:5s} goal={task.goal}")

task = tasks["push_blue"]
expert = expert_rollout(task, seed=3, resolution=64)
rand = epsilon_noisy_rollout(task, 1.0, seed=3, resolution=64)
print(f"expert: {len(expert)} frames, success={expert.success}")
print(f"random: {len(rand)} frames, success={rand.success}")


def strip(frames, n=12):
    idx = np.linspace(0, len(frames) - 1, min(n, len(frames))).round().astype(int)
    return np.concatenate([frames[i] for i in idx], axis=1)


Image.fromarray(strip(expert.frames)).save(out / "expert_strip.png")
Image.fromarray(strip(rand.frames)).save(out / "random_strip.png")

# success rates over a few seeds
for eps in (0.0, 0.5, 1.0):
    wins = [epsilon_noisy_rollout(task, eps, seed=s, resolution=32).success for s in range(50)]
    print(f"epsilon={eps}: success {np.mean(wins):.2f}")
print(f"strips written to {out}")
