"""Simple undirected graphs with provenance-carrying vertex identities.

A vertex identity is any hashable value.  Plain strings are "original"
vertices; the constructions in this package produce structured identities
(:class:`Pair`, :class:`Copy`, :class:`Merged`) whose value *is* their
history, so two graphs built along the same path compare equal label by label
without any isomorphism test.

Every vertex also has a printable name (:func:`vertex_name`).  Names are unique
within a graph and define the canonical vertex order used everywhere else.
"""

from __future__ import annotations

import math
import re
from collections import deque
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import DuplicateVertex, LoopEdge, PlanarCubeError, UnknownEndpoint, UnknownVertex

Vertex = Hashable
Edge = tuple  # (u, v) with name(u) < name(v)


class _Provenance:
    """Immutable structured vertex id; hash and name are computed once."""

    __slots__ = ("_key", "_hash", "_name")
    _fields: tuple = ()

    def __init__(self, *values):
        object.__setattr__(self, "_key", values)
        object.__setattr__(self, "_hash", hash((type(self).__name__,) + values))
        object.__setattr__(self, "_name", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __getattr__(self, name):
        try:
            return self._key[type(self)._fields.index(name)]
        except ValueError:
            raise AttributeError(name) from None

    def __repr__(self):
        args = ", ".join(f"{f}={v!r}" for f, v in zip(self._fields, self._key))
        return f"{type(self).__name__}({args})"

    def __reduce__(self):
        return type(self), self._key


class Pair(_Provenance):
    """Vertex ``(left, right)`` of a cartesian product."""

    __slots__ = ()
    _fields = ("left", "right")


class Copy(_Provenance):
    """Copy of a base vertex on one side (1 or 2) of an expansion."""

    __slots__ = ()
    _fields = ("vertex", "side")


class Merged(_Provenance):
    """Image of a contracted matching edge; keeps the side-1 endpoint."""

    __slots__ = ()
    _fields = ("vertex", "class_id")


def _render(v) -> str:
    if isinstance(v, Copy):
        return f"{vertex_name(v.vertex)}.{v.side}"
    if isinstance(v, Merged):
        return f"{vertex_name(v.vertex)}/{v.class_id}"
    return f"({vertex_name(v.left)},{vertex_name(v.right)})"


def vertex_name(v: Vertex) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, _Provenance):
        name = v._name
        if name is None:
            name = _render(v)
            object.__setattr__(v, "_name", name)
        return name
    return str(v)


INF = math.inf
_WHITESPACE = re.compile(r"\s")


class DistanceMatrix:
    """Hop distances between all vertex pairs; ``d[u, v]`` is an int or ``inf``."""

    UNREACHABLE = -1

    def __init__(self, index: Mapping[Vertex, int], matrix: np.ndarray):
        self.index = index
        self.matrix = matrix
        self.matrix.setflags(write=False)

    def __getitem__(self, pair):
        u, v = pair
        d = self.matrix[self.index[u], self.index[v]]
        return INF if d == self.UNREACHABLE else int(d)

    @property
    def connected(self) -> bool:
        return bool((self.matrix != self.UNREACHABLE).all())


class Graph:
    """Immutable simple graph.

    ``vertices`` and ``edges`` are tuples in canonical order (by vertex name);
    each edge is stored as ``(u, v)`` with ``name(u) < name(v)``.
    """

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple] = ()):
        names: dict[Vertex, str] = {}
        seen: set[str] = set()
        for v in vertices:
            if v in names:
                raise DuplicateVertex(f"duplicate vertex {vertex_name(v)!r}")
            name = vertex_name(v)
            if name in seen:
                raise DuplicateVertex(f"two vertices share the name {name!r}")
            if not name or _WHITESPACE.search(name):
                raise PlanarCubeError(f"invalid vertex name {name!r}")
            seen.add(name)
            names[v] = name
        adj: dict[Vertex, set] = {v: set() for v in names}
        for u, v in edges:
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise UnknownEndpoint(f"edge endpoint {missing!r} is not a vertex")
            if u == v:
                raise LoopEdge(f"loop at {vertex_name(u)!r}")
            adj[u].add(v)
            adj[v].add(u)

        self._names = names
        self.vertices: tuple = tuple(sorted(names, key=names.__getitem__))
        self.index: dict[Vertex, int] = {v: i for i, v in enumerate(self.vertices)}
        self._adj = {v: frozenset(adj[v]) for v in self.vertices}
        es = []
        for u in self.vertices:
            for v in adj[u]:
                if names[u] < names[v]:
                    es.append((u, v))
        es.sort(key=lambda e: (names[e[0]], names[e[1]]))
        self.edges: tuple = tuple(es)

    # basic access -------------------------------------------------------

    def name(self, v: Vertex) -> str:
        return self._names[v]

    def neighbors(self, v: Vertex) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"{v!r} is not a vertex") from None

    def sorted_neighbors(self, v: Vertex) -> list:
        return sorted(self.neighbors(v), key=self._names.__getitem__)

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    def edge_key(self, u: Vertex, v: Vertex) -> Edge:
        """The canonical ``(u, v)`` orientation of an edge."""
        return (u, v) if self._names[u] < self._names[v] else (v, u)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator:
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.m}>"

    # derived data (cached; graphs are immutable) -----------------------

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def check_vertices(self, s: Iterable[Vertex]) -> frozenset:
        s = frozenset(s)
        for v in s:
            if v not in self._adj:
                raise UnknownVertex(f"{v!r} is not a vertex")
        return s


def make_graph(vertex_names: Iterable[str], edge_pairs: Iterable[tuple]) -> Graph:
    return Graph(vertex_names, edge_pairs)


def relabel(g: Graph, mapping: Mapping[Vertex, Vertex]) -> Graph:
    return Graph((mapping[v] for v in g.vertices), ((mapping[u], mapping[v]) for u, v in g.edges))


def named(g: Graph) -> Graph:
    """The same graph with every vertex replaced by its name string."""
    return relabel(g, {v: g.name(v) for v in g.vertices})


def _bfs(g: Graph, source: Vertex) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


_DENSE_LIMIT = 48


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS hop counts from every vertex.

    Small graphs advance all BFS frontiers at once with boolean matrix
    products; larger ones go to scipy's unweighted shortest paths.
    """
    n = g.n
    idx = g.index
    us = np.fromiter((idx[u] for u, _ in g.edges), dtype=np.intp, count=g.m)
    vs = np.fromiter((idx[v] for _, v in g.edges), dtype=np.intp, count=g.m)
    if n > _DENSE_LIMIT:
        adj = csr_matrix((np.ones(g.m, dtype=np.int8), (us, vs)), shape=(n, n))
        raw = shortest_path(adj, directed=False, unweighted=True)
        mat = np.where(np.isinf(raw), DistanceMatrix.UNREACHABLE, raw).astype(np.int64)
        return DistanceMatrix(dict(idx), mat)
    adj = np.zeros((n, n), dtype=np.float32)  # float matmul goes through BLAS
    adj[us, vs] = adj[vs, us] = 1
    mat = np.full((n, n), DistanceMatrix.UNREACHABLE, dtype=np.int64)
    np.fill_diagonal(mat, 0)
    frontier = np.eye(n, dtype=np.float32)
    reached = frontier.astype(bool)
    d = 0
    while frontier.any():
        d += 1
        nxt = ((frontier @ adj) > 0) & ~reached
        mat[nxt] = d
        reached |= nxt
        frontier = nxt.astype(np.float32)
    return DistanceMatrix(dict(idx), mat)


def induced_subgraph(g: Graph, s: Iterable[Vertex]) -> Graph:
    s = g.check_vertices(s)
    return Graph(s, (e for e in g.edges if e[0] in s and e[1] in s))


def isometry_violation(g: Graph, s: Iterable[Vertex]):
    """First pair of ``s`` whose distance in the induced subgraph differs from ``g``, or None."""
    s = g.check_vertices(s)
    if not s:
        return None
    sub = induced_subgraph(g, s)
    dg, ds = g.distances, sub.distances
    big = dg.matrix[np.ix_([g.index[v] for v in sub.vertices], [g.index[v] for v in sub.vertices])]
    bad = np.argwhere(big != ds.matrix)
    if len(bad) == 0:
        return None
    i, j = bad[0]
    return sub.vertices[i], sub.vertices[j]


def is_isometric_subgraph(g: Graph, s: Iterable[Vertex]) -> bool:
    return isometry_violation(g, s) is None


def cartesian_product(g: Graph, h: Graph) -> Graph:
    vertices = [Pair(u, x) for u in g.vertices for x in h.vertices]
    edges = [(Pair(u, x), Pair(u, y)) for u in g.vertices for x, y in h.edges]
    edges += [(Pair(u, x), Pair(v, x)) for u, v in g.edges for x in h.vertices]
    return Graph(vertices, edges)


def components(g: Graph) -> list[frozenset]:
    """Connected components, each listed once, ordered by their first vertex."""
    seen: set = set()
    out = []
    for v in g.vertices:
        if v not in seen:
            comp = _bfs(g, v)
            seen.update(comp)
            out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(_bfs(g, g.vertices[0])) == g.n


def is_bipartite(g: Graph):
    """Return ``(True, coloring)`` or ``(False, odd_cycle)``.

    The odd cycle is a tuple of vertices in cyclic order, found from a BFS
    tree: an edge between two same-depth vertices closes it through their
    lowest common ancestor.
    """
    color: dict = {}
    parent: dict = {}
    depth: dict = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root], parent[root], depth[root] = 0, None, 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.sorted_neighbors(u):
                if w not in color:
                    color[w], parent[w], depth[w] = 1 - color[u], u, depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, _close_odd_cycle(u, w, parent)
    return True, color


def _close_odd_cycle(u, w, parent) -> tuple:
    up, wp = [u], [w]
    while up[-1] != wp[-1]:
        up.append(parent[up[-1]])
        wp.append(parent[wp[-1]])
    # up ends at the common ancestor; wp repeats it
    return tuple(up) + tuple(reversed(wp[:-1]))
