"""Djoković–Winkler relation, Θ*-classes and partial-cube recognition.

Edges ``e = xy`` and ``f = uv`` are in relation Θ when
``d(x,u) + d(y,v) != d(x,v) + d(y,u)``.  The classes of its transitive
closure Θ* are computed for all edge pairs at once on the distance matrix.
A connected bipartite graph is a partial cube exactly when the labeling built
from the two sides of every Θ*-class is an isometry into the hypercube; a
failing pair of that labeling is the refutation we report.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NotConnected, NotPartialCube, UnknownEdge
from .graph import DistanceMatrix, Graph, components, is_bipartite

SIDE_1, SIDE_2 = 1, 2


@dataclass(frozen=True)
class ThetaPartition:
    """Θ*-classes in canonical order (by smallest contained edge).

    ``side_map[i]`` maps every vertex to 1 or 2 when deleting class ``i``
    leaves exactly two components (side 1 holds the first endpoint of the
    class's smallest edge); it is ``None`` otherwise.
    """

    classes: tuple
    side_map: tuple
    _class_of: dict = field(repr=False, compare=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, edge) -> int:
        u, v = edge
        try:
            return self._class_of[(u, v)]
        except KeyError:
            try:
                return self._class_of[(v, u)]
            except KeyError:
                raise UnknownEdge(f"{edge!r} is not an edge") from None

    def oriented(self, class_id: int) -> list[tuple]:
        """Class edges as ``(side-1 vertex, side-2 vertex)`` pairs."""
        sides = self.side_map[class_id]
        return [(u, v) if sides[u] == SIDE_1 else (v, u) for u, v in self.classes[class_id]]


@dataclass(frozen=True)
class HypercubeLabeling:
    dim: int
    label: Mapping  # vertex -> tuple of 0/1 bits


@dataclass(frozen=True)
class PcRefutation:
    """Why a graph is not a partial cube.

    ``kind`` is ``NotConnected`` (``pair`` lies in different components),
    ``NotBipartite`` (``odd_cycle``) or ``ThetaNotTransitive`` (``pair`` has
    graph distance != Hamming distance under ``labeling``; ``triple`` holds
    edges e, f, g with e Θ f, f Θ g and not e Θ g).
    """

    kind: str
    pair: Optional[tuple] = None
    odd_cycle: Optional[tuple] = None
    labeling: Optional[HypercubeLabeling] = None
    triple: Optional[tuple] = None


def _check_edge(g: Graph, e) -> tuple:
    u, v = e
    if not g.has_edge(u, v):
        raise UnknownEdge(f"{e!r} is not an edge")
    return u, v


def theta_related(g: Graph, e, f, d: Optional[DistanceMatrix] = None) -> bool:
    x, y = _check_edge(g, e)
    u, v = _check_edge(g, f)
    d = g.distances if d is None else d
    return d[x, u] + d[y, v] != d[x, v] + d[y, u]


def theta_matrix(g: Graph) -> np.ndarray:
    """Boolean m×m matrix of Θ over ``g.edges`` (connected graphs only)."""
    dm = g.distances.matrix
    idx = g.index
    xs = np.fromiter((idx[u] for u, _ in g.edges), dtype=np.intp, count=g.m)
    ys = np.fromiter((idx[v] for _, v in g.edges), dtype=np.intp, count=g.m)
    dxx = dm[np.ix_(xs, xs)]
    dyy = dm[np.ix_(ys, ys)]
    dxy = dm[np.ix_(xs, ys)]
    return (dxx + dyy) != (dxy + dxy.T)


def theta_classes(g: Graph) -> ThetaPartition:
    if g.n == 0 or not g.distances.connected:
        raise NotConnected("Θ-classes need a connected graph")
    if g.m == 0:
        return ThetaPartition((), ())
    _, comp = connected_components(csr_matrix(theta_matrix(g)), directed=False)
    order: dict[int, int] = {}
    groups: list[list] = []
    for e, c in zip(g.edges, comp):
        if c not in order:
            order[c] = len(groups)
            groups.append([])
        groups[order[c]].append(e)
    classes = tuple(tuple(es) for es in groups)
    class_of = {e: i for i, es in enumerate(classes) for e in es}
    side_map = _side_maps(g, classes, class_of)
    return ThetaPartition(classes, side_map, class_of)


def _side_maps(g: Graph, classes, class_of) -> tuple:
    """Per class: vertex -> side if deleting it leaves two components, else None.

    Fast path for bipartite graphs: for the class's first edge xy the
    halfspaces W_xy = {v : d(v,x) < d(v,y)} and W_yx partition V and are
    connected (shortest paths to x stay in W_xy), so when the class is exactly
    the set of edges crossing them, deleting it leaves those two components.
    Anything else falls back to a search.
    """
    idx = g.index
    dm = g.distances.matrix
    us = np.fromiter((idx[u] for u, _ in g.edges), dtype=np.intp, count=g.m)
    vs = np.fromiter((idx[v] for _, v in g.edges), dtype=np.intp, count=g.m)
    cls = np.fromiter((class_of[e] for e in g.edges), dtype=np.intp, count=g.m)
    bipartite = is_bipartite(g)[0]
    out = []
    for i, es in enumerate(classes):
        x, y = idx[es[0][0]], idx[es[0][1]]
        if bipartite:
            side1 = dm[:, x] < dm[:, y]
            crossing = side1[us] != side1[vs]
            if np.array_equal(crossing, cls == i):
                out.append({v: SIDE_1 if side1[j] else SIDE_2 for j, v in enumerate(g.vertices)})
                continue
        out.append(_sides_by_search(g, es))
    return tuple(out)


def _sides_by_search(g: Graph, class_edges) -> Optional[dict]:
    removed = set(class_edges)
    first = _reach_without(g, class_edges[0][0], removed)
    rest = [v for v in g.vertices if v not in first]
    if not rest or len(_reach_without(g, rest[0], removed)) != len(rest):
        return None
    return {v: SIDE_1 if v in first else SIDE_2 for v in g.vertices}


def _labels(g: Graph, tp: ThetaPartition) -> dict:
    bits = []
    for i, es in enumerate(tp.classes):
        sides = tp.side_map[i]
        if sides is None:
            # not a 2-split: side 1 is still the part holding the first endpoint
            start = es[0][0]
            reach = _reach_without(g, start, set(es))
            bits.append({v: 0 if v in reach else 1 for v in g.vertices})
        else:
            bits.append({v: sides[v] - 1 for v in g.vertices})
    return {v: tuple(b[v] for b in bits) for v in g.vertices}


def _reach_without(g: Graph, start, removed: set) -> set:
    part = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in part and g.edge_key(u, w) not in removed:
                part.add(w)
                queue.append(w)
    return part


def labeling_violation(g: Graph, lab: HypercubeLabeling) -> Optional[tuple]:
    """First vertex pair whose graph distance differs from its Hamming distance."""
    if g.n == 0:
        return None
    rows = np.array([lab.label[v] for v in g.vertices], dtype=np.int8).reshape(g.n, lab.dim)
    ham = (rows[:, None, :] != rows[None, :, :]).sum(axis=2)
    dist = g.distances.matrix
    bad = np.argwhere(ham != dist)
    if len(bad) == 0:
        return None
    i, j = bad[0]
    return g.vertices[i], g.vertices[j]


def verify_labeling(g: Graph, lab: HypercubeLabeling) -> bool:
    if set(lab.label) != set(g.vertices):
        return False
    if any(len(b) != lab.dim or any(x not in (0, 1) for x in b) for b in lab.label.values()):
        return False
    # distinct labels follow from dist == Hamming (dist(u,v) > 0 for u != v)
    return labeling_violation(g, lab) is None


def _nontransitive_triple(g: Graph, theta: np.ndarray) -> Optional[tuple]:
    """Edges a Θ b Θ c with not a Θ c, from a shortest Θ-path between unrelated edges."""
    m = g.m
    _, comp = connected_components(csr_matrix(theta), directed=False)
    for i in range(m):
        same = np.flatnonzero((comp == comp[i]) & ~theta[i])
        if len(same) == 0:
            continue
        target = int(same[0])
        prev = {i: None}
        queue = deque([i])
        while queue:
            a = queue.popleft()
            if a == target:
                break
            for b in np.flatnonzero(theta[a]):
                b = int(b)
                if b not in prev:
                    prev[b] = a
                    queue.append(b)
        path = [target]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        path.reverse()
        return tuple(g.edges[k] for k in path[:3])
    return None


def recognize_partial_cube(g: Graph):
    """Return a :class:`HypercubeLabeling` or a :class:`PcRefutation`."""
    if g.n == 0:
        return PcRefutation("NotConnected")
    comps = components(g)
    if len(comps) > 1:
        a = g.vertices[0]
        b = next(v for v in g.vertices if v not in comps[0])
        return PcRefutation("NotConnected", pair=(a, b))
    ok, witness = is_bipartite(g)
    if not ok:
        return PcRefutation("NotBipartite", odd_cycle=witness)
    tp = theta_classes(g)
    lab = HypercubeLabeling(len(tp), _labels(g, tp))
    bad = labeling_violation(g, lab)
    if bad is None:
        return lab
    return PcRefutation("ThetaNotTransitive", pair=bad, labeling=lab, triple=_nontransitive_triple(g, theta_matrix(g)))


def is_partial_cube(g: Graph) -> bool:
    return isinstance(recognize_partial_cube(g), HypercubeLabeling)


def partial_cube_partition(g: Graph) -> ThetaPartition:
    """Θ-classes of a graph that must be a partial cube (raises NotPartialCube)."""
    result = recognize_partial_cube(g)
    if isinstance(result, PcRefutation):
        raise NotPartialCube(result)
    return theta_classes(g)


def verify_refutation(g: Graph, ref: PcRefutation) -> bool:
    """Check a refutation against ``g`` without trusting how it was produced."""
    if ref.kind == "NotConnected":
        if g.n == 0:
            return True
        if ref.pair is None:
            return False
        u, v = ref.pair
        return u in g and v in g and g.distances[u, v] == float("inf")
    if ref.kind == "NotBipartite":
        cyc = ref.odd_cycle
        if not cyc or len(cyc) % 2 == 0 or len(set(cyc)) != len(cyc):
            return False
        return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    if ref.kind == "ThetaNotTransitive":
        # the triple is the proof (Θ is transitive on every partial cube); the
        # labeling pair is the readable symptom and must be genuine too
        if ref.labeling is None or ref.pair is None or ref.triple is None:
            return False
        u, v = ref.pair
        lab = ref.labeling
        if u not in g or v not in g or set(lab.label) != set(g.vertices):
            return False
        ham = sum(a != b for a, b in zip(lab.label[u], lab.label[v]))
        if g.distances[u, v] == ham:
            return False
        a, b, c = ref.triple
        try:
            return theta_related(g, a, b) and theta_related(g, b, c) and not theta_related(g, a, c)
        except UnknownEdge:
            return False
    return False
