"""Search for a 2-face expansion that is not planar and save the witness."""

import argparse
import logging
import time
from dataclasses import dataclass
from typing import Optional

from planarcube.expansion import verify_flaw_witness
from planarcube.flaw import SearchBudget, SearchStats, find_flaw_witness
from planarcube.formats import write_certificate
from planarcube.graph import vertex_name


@dataclass(frozen=True)
class FlawConfig:
    max_base_size: int = 12
    max_candidates: Optional[int] = None
    seed: int = 0
    output: Optional[str] = None


def run(cfg: FlawConfig) -> int:
    stats = SearchStats()
    start = time.perf_counter()
    w = find_flaw_witness(SearchBudget(cfg.max_base_size, cfg.max_candidates), cfg.seed, stats)
    print(f"found after {stats.bases} bases, {stats.candidates} candidates "
          f"({stats.isometric} isometric, {stats.nonplanar} non-planar) in {time.perf_counter() - start:.2f}s")
    print("base edges:", " ".join(f"{w.base.name(u)}-{w.base.name(v)}" for u, v in w.base.edges))
    print("v1:", " ".join(sorted(map(vertex_name, w.v1))))
    print("v2:", " ".join(sorted(map(vertex_name, w.v2))))
    print("subdivision:", w.kuratowski.kind, "on", " ".join(map(vertex_name, w.kuratowski.branch_vertices)))
    print("verifies:", verify_flaw_witness(w))
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(write_certificate(w))
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-base-size", type=int, default=12)
    p.add_argument("--max-candidates", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("-v", "--verbose", action="store_true")
    a = p.parse_args()
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, format="%(message)s")
    raise SystemExit(run(FlawConfig(a.max_base_size, a.max_candidates, a.seed, a.output)))
