"""Certify a batch of seeded random planar partial cubes and replay each one."""

import argparse
import time
from dataclasses import dataclass

from planarcube.decompose import certify_planar_partial_cube, replay
from planarcube.partial_cube import theta_classes
from planarcube.generators import random_planar_partial_cube


@dataclass(frozen=True)
class SampleConfig:
    samples: int = 200
    max_steps: int = 8
    max_vertices: int = 64
    seed0: int = 0


def run(cfg: SampleConfig) -> int:
    bad = 0
    start = time.perf_counter()
    for s in range(cfg.seed0, cfg.seed0 + cfg.samples):
        h = random_planar_partial_cube(1 + s % cfg.max_steps, s, max_vertices=cfg.max_vertices)
        cert = certify_planar_partial_cube(h)
        ok = len(cert.steps) == len(theta_classes(h)) and replay(cert) == h
        bad += not ok
        if not ok:
            print(f"seed {s}: round trip failed")
    print(f"{cfg.samples} samples, {bad} failures, {time.perf_counter() - start:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    for field, default in vars(SampleConfig()).items():
        p.add_argument(f"--{field.replace('_', '-')}", type=int, default=default)
    raise SystemExit(run(SampleConfig(**vars(p.parse_args()))))
