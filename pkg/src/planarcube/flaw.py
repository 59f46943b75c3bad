"""Search for a 2-face expansion of a planar partial cube that is not planar.

Bases come from the named stock (paths, even cycles, grids, gears, Q3, ...)
followed by seeded random planar partial cubes, in increasing size.  For a
base, a candidate is a shared set ``S`` plus an assignment of every component
of ``base - S`` to side 1 or side 2 (edge cover forces whole components onto
one side).  Candidates with ``|S| <= 3`` are skipped: three points on a face
admit only two cyclic orders, which a mirror image swaps, so such a 2-face
expansion is always non-crossing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import networkx as nx

from .errors import NotFound, SamplingExhausted
from .expansion import FlawWitness, flaw_witness_for
from .generators import SplitMix64, named_graphs, random_planar_partial_cube
from .graph import Graph, components, induced_subgraph, is_isometric_subgraph
from .ops import ExpansionSpec, expand
from .partial_cube import is_partial_cube
from .planarity import common_face_realizable, is_planar, _to_nx

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    max_base_size: int = 12
    max_candidates: Optional[int] = None
    random_bases: int = 400
    min_shared: int = 4


@dataclass
class SearchStats:
    bases: int = 0
    candidates: int = 0
    isometric: int = 0
    nonplanar: int = 0


def base_stream(budget: SearchBudget, seed: int) -> Iterator[tuple[str, Graph]]:
    """Planar partial cubes up to ``max_base_size`` vertices.

    The named stock comes first, by size; then seeded random bases, by size.
    Bases are de-duplicated by Weisfeiler-Lehman hash; a collision between
    non-isomorphic bases only costs coverage, never correctness.
    """
    seen = set()

    def fresh(items):
        for name, g in sorted(items, key=lambda item: item[1].n):
            key = nx.weisfeiler_lehman_graph_hash(_to_nx(g), iterations=4)
            if key not in seen:
                seen.add(key)
                yield name, g

    stock = [
        (name, g)
        for name, g in named_graphs(budget.max_base_size).items()
        if is_partial_cube(g) and is_planar(g)
    ]
    yield from fresh(stock)
    rng = SplitMix64(seed)
    randoms = []
    for _ in range(budget.random_bases):
        steps = 2 + rng.below(budget.max_base_size)
        sub_seed = rng.next()
        try:
            g = random_planar_partial_cube(steps, sub_seed, max_vertices=budget.max_base_size)
        except SamplingExhausted:
            continue
        randoms.append((f"random[{steps},{sub_seed}]", g))
    yield from fresh(randoms)


def candidate_specs(base: Graph, min_shared: int = 4) -> Iterator[ExpansionSpec]:
    """Edge-covering candidate specs in deterministic order, one per side swap."""
    vs = base.vertices
    for size in range(min_shared, base.n + 1):
        for shared in combinations(vs, size):
            shared = frozenset(shared)
            rest = induced_subgraph(base, [v for v in vs if v not in shared])
            comps = components(rest)
            k = len(comps)
            for mask in range(1 << max(k - 1, 0)):
                v1, v2 = set(shared), set(shared)
                for j, comp in enumerate(comps):
                    # component 0 always on side 1 (the swap is the mirror candidate)
                    (v2 if j and (mask >> (j - 1)) & 1 else v1).update(comp)
                yield ExpansionSpec(base, frozenset(v1), frozenset(v2))


def find_flaw_witness(budget: SearchBudget = SearchBudget(), seed: int = 0,
                      stats: Optional[SearchStats] = None) -> FlawWitness:
    """First 2-face, non-planar expansion in search order; raises NotFound."""
    stats = SearchStats() if stats is None else stats
    for name, base in base_stream(budget, seed):
        stats.bases += 1
        log.debug("base %s (%d vertices)", name, base.n)
        for spec in candidate_specs(base, budget.min_shared):
            if budget.max_candidates is not None and stats.candidates >= budget.max_candidates:
                raise NotFound(f"candidate budget {budget.max_candidates} exhausted")
            stats.candidates += 1
            if not (is_isometric_subgraph(base, spec.v1) and is_isometric_subgraph(base, spec.v2)):
                continue
            stats.isometric += 1
            if is_planar(expand(spec)):
                continue
            stats.nonplanar += 1
            if not (common_face_realizable(spec.g1, spec.shared) and common_face_realizable(spec.g2, spec.shared)):
                continue
            witness = flaw_witness_for(spec)
            if witness is not None:
                log.info("flaw witness on base %s after %d candidates", name, stats.candidates)
                return witness
    raise NotFound("no flaw witness within the search budget")
