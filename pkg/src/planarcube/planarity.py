"""Planarity with certificates on both sides.

A planar graph gets a :class:`PlaneEmbedding`: a rotation system (cyclic
neighbor order per vertex) plus a designated outer face.  Faces are traced by
the rule "arriving at ``v`` from ``u``, leave towards the successor of ``u``
in the rotation of ``v``"; the rotation is genus 0 exactly when Euler's
formula holds for every component.  A non-planar graph gets a
:class:`KuratowskiWitness`, a subdivision of K5 or K3,3 given by its branch
vertices and the paths between them.

The decision itself uses networkx's left-right planarity test; both
certificates are re-checked here by :func:`verify_embedding` and
:func:`verify_kuratowski`, which trust nothing from the kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Mapping, Optional

import networkx as nx

from .errors import InvalidRotation, NotGenusZero, NotPlanarInput, UnknownFace
from .graph import Graph, components, vertex_name


@dataclass(frozen=True)
class Face:
    """A face walk, rotated so that its name sequence is lexicographically least.

    ``vertices[i] -> vertices[i+1]`` (cyclically) are the darts of the walk.
    A single-vertex walk is the face of an isolated vertex.
    """

    vertices: tuple

    @property
    def id(self) -> tuple:
        return tuple(vertex_name(v) for v in self.vertices)

    @property
    def darts(self) -> list[tuple]:
        k = len(self.vertices)
        if k == 1:
            return []
        return [(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True, eq=False)
class PlaneEmbedding:
    rotation: Mapping  # vertex -> tuple of neighbors in cyclic order
    outer_face: tuple  # a face id (tuple of vertex names)

    def __eq__(self, other):
        if not isinstance(other, PlaneEmbedding):
            return NotImplemented
        return dict(self.rotation) == dict(other.rotation) and self.outer_face == other.outer_face

    def successor(self, v, u):
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]


@dataclass(frozen=True)
class KuratowskiWitness:
    """``kind`` is "K5" or "K33".

    For K33 the first three branch vertices form one side of the bipartition.
    ``paths`` holds one vertex path per required branch pair.
    """

    kind: str
    branch_vertices: tuple
    paths: tuple

    def edges(self) -> set:
        return {frozenset(p[i : i + 2]) for p in self.paths for i in range(len(p) - 1)}


def _canonical_rotation(walk: list) -> tuple:
    names = [vertex_name(v) for v in walk]
    k = len(walk)
    best = min(range(k), key=lambda i: names[i:] + names[:i])
    return tuple(walk[best:] + walk[:best])


def face_walks(rotation: Mapping) -> list[Face]:
    """Trace all faces of a rotation system (no validation)."""
    pos = {v: {u: i for i, u in enumerate(rot)} for v, rot in rotation.items()}
    seen: set = set()
    out = []
    for v in sorted(rotation, key=vertex_name):
        rot = rotation[v]
        if not rot:
            out.append(Face((v,)))
            continue
        for w in rot:
            if (v, w) in seen:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rb = rotation[b]
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            out.append(Face(_canonical_rotation(walk)))
    out.sort(key=lambda f: f.id)
    return out


def rotation_faces(rotation: Mapping) -> list[Face]:
    return face_walks(rotation)


def _check_rotation(g: Graph, emb: PlaneEmbedding):
    rot = emb.rotation
    if set(rot) != set(g.vertices):
        raise InvalidRotation("rotation keys differ from the vertex set")
    for v in g.vertices:
        r = rot[v]
        if len(r) != len(set(r)) or set(r) != g.neighbors(v):
            raise InvalidRotation(f"rotation at {g.name(v)!r} is not a permutation of its neighbors")


def faces(g: Graph, emb: PlaneEmbedding) -> list[Face]:
    _check_rotation(g, emb)
    fs = face_walks(emb.rotation)
    comp_of = {}
    for i, comp in enumerate(components(g)):
        for v in comp:
            comp_of[v] = i
    euler = {}
    for comp in components(g):
        v0 = next(iter(comp))
        euler[comp_of[v0]] = len(comp) - sum(1 for u, _ in g.edges if u in comp)
    for f in fs:
        euler[comp_of[f.vertices[0]]] += 1
    for i, chi in euler.items():
        if chi != 2:
            raise NotGenusZero(f"component {i}: V - E + F = {chi}")
    return fs


def verify_embedding(g: Graph, emb: PlaneEmbedding) -> bool:
    try:
        fs = faces(g, emb)
    except (InvalidRotation, NotGenusZero):
        return False
    if g.n == 0:
        return tuple(emb.outer_face) == ()  # the empty graph has no face walk
    return any(f.id == tuple(emb.outer_face) for f in fs)


def face_by_id(emb: PlaneEmbedding, face_id) -> Face:
    face_id = tuple(face_id)
    for f in face_walks(emb.rotation):
        if f.id == face_id:
            return f
    raise UnknownFace(f"no face {face_id!r} in this embedding")


def reroot_outer_face(emb: PlaneEmbedding, face_id) -> PlaneEmbedding:
    return replace(emb, outer_face=face_by_id(emb, face_id).id)


# planarity test -----------------------------------------------------------


def _to_nx(g: Graph) -> nx.Graph:
    # integer nodes keep the kernel off the (deep) hashes of provenance ids
    idx = g.index
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((idx[u], idx[v]) for u, v in g.edges)
    return G


def test_planarity(g: Graph):
    """Return a :class:`PlaneEmbedding` or a :class:`KuratowskiWitness`."""
    G = _to_nx(g)
    planar, emb = nx.check_planarity(G)
    vs = g.vertices
    if planar:
        rotation = {vs[i]: tuple(vs[j] for j in emb.neighbors_cw_order(i)) for i in range(g.n)}
        fs = face_walks(rotation)
        return PlaneEmbedding(rotation, fs[0].id if fs else ())
    K = nx.algorithms.planarity.get_counterexample(G)
    return kuratowski_from_subgraph(nx.relabel_nodes(K, {i: vs[i] for i in K}))


test_planarity.__test__ = False  # not a pytest test despite the name


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(_to_nx(g))[0]


def kuratowski_from_subgraph(K: nx.Graph) -> KuratowskiWitness:
    """Read branch vertices and paths off an edge-minimal non-planar subgraph."""
    K = K.subgraph([v for v in K if K.degree(v) > 0])
    branch = sorted((v for v in K if K.degree(v) >= 3), key=vertex_name)
    paths = []
    done = set()
    for b in branch:
        for nb in sorted(K[b], key=vertex_name):
            path = [b, nb]
            while path[-1] not in branch:
                prev, cur = path[-2], path[-1]
                path.append(next(w for w in K[cur] if w != prev))
            key = frozenset((path[0], path[-1]))
            if key not in done:
                done.add(key)
                if vertex_name(path[0]) > vertex_name(path[-1]):
                    path.reverse()
                paths.append(tuple(path))
    paths.sort(key=lambda p: (vertex_name(p[0]), vertex_name(p[-1])))
    if len(branch) == 5:
        return KuratowskiWitness("K5", tuple(branch), tuple(paths))
    if len(branch) != 6:
        raise AssertionError(f"counterexample has {len(branch)} branch vertices")
    linked = {v for p in paths for v in (p[0], p[-1]) if branch[0] in (p[0], p[-1])} - {branch[0]}
    side_a = [v for v in branch if v not in linked]
    side_b = [v for v in branch if v in linked]
    return KuratowskiWitness("K33", tuple(side_a + side_b), tuple(paths))


def verify_kuratowski(g: Graph, w: KuratowskiWitness) -> bool:
    bv = tuple(w.branch_vertices)
    if w.kind == "K5":
        if len(bv) != 5:
            return False
        required = {frozenset(p) for p in combinations(bv, 2)}
    elif w.kind == "K33":
        if len(bv) != 6:
            return False
        required = {frozenset((a, b)) for a in bv[:3] for b in bv[3:]}
    else:
        return False
    if len(set(bv)) != len(bv) or any(v not in g for v in bv):
        return False
    if len(w.paths) != len(required):
        return False
    branch = set(bv)
    covered = set()
    interior: set = set()
    for p in w.paths:
        if len(p) < 2 or len(set(p)) != len(p):
            return False
        key = frozenset((p[0], p[-1]))
        if key not in required or key in covered:
            return False
        covered.add(key)
        if any(u not in g or v not in g or not g.has_edge(u, v) for u, v in zip(p, p[1:])):
            return False
        inner = set(p[1:-1])
        if inner & branch or inner & interior:
            return False
        interior |= inner
    return covered == required


# common face ----------------------------------------------------------------


class _Apex:
    def __repr__(self):
        return "<apex>"

    def __str__(self):
        return "\x00apex"


def _with_apex(g: Graph, s: frozenset):
    apex = _Apex()
    return apex, Graph(list(g.vertices) + [apex], list(g.edges) + [(apex, v) for v in s])


def common_face_embedding(g: Graph, s: Iterable) -> Optional[PlaneEmbedding]:
    """An embedding of a connected planar ``g`` whose outer face contains ``s``, or None.

    Built by the apex construction: embed ``g`` plus a vertex joined to all of
    ``s``; deleting that vertex merges its incident faces into one face that
    holds every vertex of ``s``.
    """
    s = g.check_vertices(s)
    if not is_planar(g):
        raise NotPlanarInput("graph is not planar")
    if not s:
        emb = test_planarity(g)
        return emb
    apex, ga = _with_apex(g, s)
    emb = test_planarity(ga)
    if not isinstance(emb, PlaneEmbedding):
        return None
    rot = emb.rotation
    first = rot[apex][0]
    r = rot[first]
    succ = r[(r.index(apex) + 1) % len(r)]
    rotation = {v: tuple(u for u in rot[v] if u is not apex) for v in g.vertices}
    if succ is apex:
        outer = (first,)
    else:
        outer = next(f for f in face_walks(rotation) if (first, succ) in f.darts).vertices
    return PlaneEmbedding(rotation, Face(tuple(outer)).id)


def common_face_realizable(g: Graph, s: Iterable) -> bool:
    s = g.check_vertices(s)
    if not is_planar(g):
        raise NotPlanarInput("graph is not planar")
    apex, ga = _with_apex(g, s)
    return is_planar(ga)
