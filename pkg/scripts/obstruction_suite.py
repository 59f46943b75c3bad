"""Report partial-cube, planarity and minimality status for the obstruction family."""

import argparse
from dataclasses import dataclass

from planarcube.decompose import is_minimal_obstruction
from planarcube.generators import gear_obstruction, hypercube
from planarcube.partial_cube import is_partial_cube
from planarcube.planarity import is_planar


@dataclass(frozen=True)
class SuiteConfig:
    max_gear: int = 5
    max_cube: int = 5


def run(cfg: SuiteConfig) -> int:
    graphs = [(f"gear{n} x K2", gear_obstruction(n)) for n in range(3, cfg.max_gear + 1)]
    graphs += [(f"Q{d}", hypercube(d)) for d in range(3, cfg.max_cube + 1)]
    print(f"{'graph':<12}{'n':>5}{'m':>6}  pc     planar minimal")
    for name, g in graphs:
        pc = is_partial_cube(g)
        minimal = is_minimal_obstruction(g) if pc else None
        print(f"{name:<12}{g.n:>5}{g.m:>6}  {pc!s:<6} {is_planar(g)!s:<6} {minimal}")
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-gear", type=int, default=5)
    p.add_argument("--max-cube", type=int, default=5)
    a = p.parse_args()
    raise SystemExit(run(SuiteConfig(a.max_gear, a.max_cube)))
