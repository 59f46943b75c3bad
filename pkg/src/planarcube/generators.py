"""Named graph families and seeded random partial cubes.

Random generation uses SplitMix64 (64-bit state; Steele, Lea & Flood 2014)
so that a seed names the same sample in every implementation.  Integers in
``[0, n)`` are drawn by rejection from the 64-bit output; nothing else is
drawn from the stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import OddCycleRequested, ParameterTooSmall, PlanarCubeError, SamplingExhausted
from .graph import Graph, cartesian_product, is_isometric_subgraph
from .ops import ExpansionSpec, expand
from .partial_cube import theta_classes
from .planarity import is_planar

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            z = self.next()
            if z < limit:
                return z % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num


# named families ------------------------------------------------------------


def hypercube(d: int) -> Graph:
    """Q_d on bit strings; Q_0's single vertex is named ``e``."""
    if d < 0:
        raise ParameterTooSmall("d must be >= 0")
    if d == 0:
        return Graph(["e"])
    words = [format(i, f"0{d}b") for i in range(1 << d)]
    edges = []
    for i in range(1 << d):
        for b in range(d):
            j = i ^ (1 << b)
            if i < j:
                edges.append((words[i], words[j]))
    return Graph(words, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterTooSmall("path needs n >= 1")
    names = [str(i) for i in range(n)]
    return Graph(names, zip(names, names[1:]))


def even_cycle(n: int) -> Graph:
    if n % 2:
        raise OddCycleRequested(f"cycle length {n} is odd")
    if n < 4:
        raise ParameterTooSmall("cycle needs n >= 4")
    return cycle(n)


def cycle(n: int) -> Graph:
    names = [str(i) for i in range(n)]
    return Graph(names, ((names[i], names[(i + 1) % n]) for i in range(n)))


def gear(n: int) -> Graph:
    """Hub ``h`` plus rim ``r0..r{2n-1}``; the hub sees the even rim vertices."""
    if n < 3:
        raise ParameterTooSmall("gear needs n >= 3")
    rim = [f"r{i}" for i in range(2 * n)]
    edges = [(rim[i], rim[(i + 1) % (2 * n)]) for i in range(2 * n)]
    edges += [("h", rim[2 * i]) for i in range(n)]
    return Graph(["h"] + rim, edges)


def gear_obstruction(n: int) -> Graph:
    return cartesian_product(gear(n), path(2))


def grid(a: int, b: int) -> Graph:
    return cartesian_product(path(a), path(b))


def complete_graph(n: int) -> Graph:
    names = [str(i) for i in range(n)]
    return Graph(names, ((names[i], names[j]) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    left = [f"a{i}" for i in range(a)]
    right = [f"b{j}" for j in range(b)]
    return Graph(left + right, ((u, v) for u in left for v in right))


def random_tree(n: int, seed: int) -> Graph:
    rng = SplitMix64(seed)
    names = [str(i) for i in range(n)]
    return Graph(names, ((names[i], names[rng.below(i)]) for i in range(1, n)))


# random expansions ---------------------------------------------------------

MAX_RETRIES = 200


def _grow_connected(g: Graph, rng: SplitMix64) -> set:
    target = 1 + rng.below(g.n)
    s = {rng.choice(g.vertices)}
    while len(s) < target:
        frontier = sorted({w for v in s for w in g.neighbors(v)} - s, key=g.name)
        if not frontier:
            break
        s.add(rng.choice(frontier))
    return s


def _halfspace(g: Graph, rng: SplitMix64) -> set:
    tp = theta_classes(g)
    i = rng.below(len(tp))
    side = 1 + rng.below(2)
    return {v for v in g.vertices if tp.side_map[i][v] == side}


def sample_expansion_spec(g: Graph, rng: SplitMix64) -> Optional[ExpansionSpec]:
    """One draw of the (non-uniform) candidate sampler; None when rejected.

    Side 1 is a random connected set or a random Θ-halfspace; a random subset
    of it becomes private to side 1 (minus any vertex touching the outside,
    so the sides cover every edge); side 2 is everything else.
    """
    s = _halfspace(g, rng) if g.m and rng.chance(1, 2) else _grow_connected(g, rng)
    keep = rng.below(4)  # private-vertex probability in quarters
    private = {v for v in sorted(s, key=g.name) if rng.below(4) < keep}
    outside = set(g.vertices) - s
    private = {v for v in private if not (g.neighbors(v) & outside)}
    v1, v2 = frozenset(s), frozenset(set(g.vertices) - private)
    if not v1 & v2:
        return None
    if not (is_isometric_subgraph(g, v1) and is_isometric_subgraph(g, v2)):
        return None
    return ExpansionSpec(g, v1, v2)


def _random_expansions(steps: int, seed: int, accept: Callable[[ExpansionSpec], bool],
                       max_vertices: Optional[int]) -> Graph:
    if steps < 0:
        raise ParameterTooSmall("steps must be >= 0")
    rng = SplitMix64(seed)
    g = Graph(["o"])
    for step in range(steps):
        for _ in range(MAX_RETRIES):
            spec = sample_expansion_spec(g, rng)
            if spec is None:
                continue
            if max_vertices is not None and len(spec.v1) + len(spec.v2) > max_vertices:
                continue
            if accept(spec):
                g = expand(spec)
                break
        else:
            raise SamplingExhausted(f"no acceptable expansion at step {step} after {MAX_RETRIES} draws")
    return g


def random_partial_cube(steps: int, seed: int, max_vertices: Optional[int] = None) -> Graph:
    return _random_expansions(steps, seed, lambda spec: True, max_vertices)


def random_planar_partial_cube(steps: int, seed: int, max_vertices: Optional[int] = 64) -> Graph:
    return _random_expansions(steps, seed, lambda spec: is_planar(expand(spec)), max_vertices)


# CLI-facing family table ---------------------------------------------------

FAMILIES: dict[str, tuple[Callable, int]] = {
    "hypercube": (hypercube, 1),
    "path": (path, 1),
    "even-cycle": (even_cycle, 1),
    "gear": (gear, 1),
    "gear-obstruction": (gear_obstruction, 1),
    "grid": (grid, 2),
    "complete": (complete_graph, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "random-tree": (random_tree, 2),
    "random-pc": (random_partial_cube, 2),
    "random-planar-pc": (random_planar_partial_cube, 2),
}


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple = ()
    seed: Optional[int] = None

    def build(self) -> Graph:
        try:
            fn, arity = FAMILIES[self.family]
        except KeyError:
            raise PlanarCubeError(f"unknown family {self.family!r}; known: {', '.join(FAMILIES)}") from None
        args = list(self.params)
        if self.seed is not None:
            args.append(self.seed)
        if len(args) != arity:
            raise PlanarCubeError(f"{self.family} takes {arity} integer parameter(s)")
        return fn(*args)


def named_graphs(max_vertices: int = 16) -> dict[str, Graph]:
    """The named stock used by tests and searches, capped by vertex count."""
    out: dict[str, Graph] = {}
    for d in range(7):
        if 2**d <= max_vertices:
            out[f"Q{d}"] = hypercube(d)
    for n in range(1, max_vertices + 1):
        out[f"P{n}"] = path(n)
    for n in range(4, max_vertices + 1, 2):
        out[f"C{n}"] = even_cycle(n)
    for n in range(3, 20):
        if 2 * n + 1 <= max_vertices:
            out[f"gear{n}"] = gear(n)
        if 2 * (2 * n + 1) <= max_vertices:
            out[f"gear{n}xK2"] = gear_obstruction(n)
    for a in range(2, max_vertices + 1):
        for b in range(a, max_vertices + 1):
            if a * b <= max_vertices:
                out[f"grid{a}x{b}"] = grid(a, b)
    for n in range(4, 7):
        if n <= max_vertices:
            out[f"K{n}"] = complete_graph(n)
    for a, b in ((2, 3), (3, 3), (3, 4)):
        if a + b <= max_vertices:
            out[f"K{a},{b}"] = complete_bipartite(a, b)
    for cyc in (6, 8):
        if 2 * cyc <= max_vertices:
            out[f"C{cyc}xK2"] = cartesian_product(even_cycle(cyc), path(2))
    return out
