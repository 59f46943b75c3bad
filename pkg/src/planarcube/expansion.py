"""Non-crossing 2-face expansions and their certificates.

Orientation convention: a "clockwise" traversal of a face is the face walk of
:mod:`planarcube.planarity` (rotation successor rule).  Under that single
rule the non-crossing condition reads: the shared vertices appear along the
outer walk of side 1 in the reverse cyclic order of their appearance along
the outer walk of side 2.  Mirroring an embedding reverses every walk, so the
condition is about the pair and does not depend on a geometric orientation.

Certificates are extracted from a plane embedding of the expanded graph.
The matching edges of the new Θ-class form a bond, so the faces they border
form a cycle in the dual; walking that cycle orders the matching edges, and
that order is read off on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import FaceWithOddCutEdges, NotPartialCube, NotPlanar, PlanarCubeError, UnknownClass
from .graph import Copy, Graph, induced_subgraph
from .ops import ContractionResult, ExpansionSpec, contract_class, expand
from .partial_cube import SIDE_1, ThetaPartition, partial_cube_partition
from .planarity import (
    Face,
    KuratowskiWitness,
    PlaneEmbedding,
    common_face_embedding,
    common_face_realizable,
    face_walks,
    faces,
    is_planar,
    reroot_outer_face,
    test_planarity,
    verify_embedding,
    verify_kuratowski,
)


@dataclass(frozen=True)
class CutCycleOrder:
    """Matching edges ``(side-1, side-2)`` in dual-cycle order, plus the faces between them.

    ``faces[i]`` holds the side-1 -> side-2 dart of ``edges[i]`` and the
    side-2 -> side-1 dart of ``edges[i+1]``.
    """

    class_id: int
    edges: tuple
    faces: tuple

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class NonCrossingCertificate:
    """One non-crossing 2-face expansion step.

    ``lift`` optionally renames the expansion: ``(base vertex, side)`` maps
    to the vertex id the expanded graph should carry.
    """

    base: Graph
    v1: frozenset
    v2: frozenset
    emb1: PlaneEmbedding
    emb2: PlaneEmbedding
    order1: tuple
    order2: tuple
    lift: Optional[dict] = field(default=None, compare=False)

    @property
    def spec(self) -> ExpansionSpec:
        return ExpansionSpec(self.base, self.v1, self.v2)

    @property
    def shared(self) -> frozenset:
        return frozenset(self.v1) & frozenset(self.v2)


@dataclass(frozen=True)
class FlawWitness:
    """A 2-face expansion whose result is not planar.

    ``emb1`` / ``emb2`` embed the two sides with the shared vertices on their
    outer faces (``face1`` / ``face2``).
    """

    base: Graph
    v1: frozenset
    v2: frozenset
    emb1: PlaneEmbedding
    emb2: PlaneEmbedding
    kuratowski: KuratowskiWitness

    @property
    def spec(self) -> ExpansionSpec:
        return ExpansionSpec(self.base, self.v1, self.v2)

    @property
    def face1(self) -> tuple:
        return self.emb1.outer_face

    @property
    def face2(self) -> tuple:
        return self.emb2.outer_face


# cut cycle -----------------------------------------------------------------


def cut_cycle_order(h: Graph, emb: PlaneEmbedding, tp: ThetaPartition, class_id: int) -> CutCycleOrder:
    if not 0 <= class_id < len(tp):
        raise UnknownClass(f"no Θ-class {class_id}")
    if tp.side_map[class_id] is None:
        raise NotPartialCube(message=f"Θ-class {class_id} is not a two-sided cut")
    edges = tp.oriented(class_id)
    forward = {(a, b): i for i, (a, b) in enumerate(edges)}
    backward = {(b, a): i for i, (a, b) in enumerate(edges)}
    face_of: dict = {}
    back_in: dict = {}
    for f in faces(h, emb):
        fw = [forward[d] for d in f.darts if d in forward]
        bw = [backward[d] for d in f.darts if d in backward]
        if len(fw) + len(bw) not in (0, 2) or len(fw) != len(bw):
            raise FaceWithOddCutEdges(f"face {f.id} has {len(fw)}+{len(bw)} cut darts")
        if fw:
            face_of[fw[0]] = f
            back_in[fw[0]] = bw[0]
    order, fs = [0], [face_of[0]]
    nxt = back_in[0]
    while nxt != 0:
        if nxt in order:
            raise FaceWithOddCutEdges("dual of the cut is not a simple cycle")
        order.append(nxt)
        fs.append(face_of[nxt])
        nxt = back_in[nxt]
    if len(order) != len(edges):
        raise FaceWithOddCutEdges("dual of the cut is not a single cycle")
    return CutCycleOrder(class_id, tuple(edges[i] for i in order), tuple(f.id for f in fs))


# certificate extraction ----------------------------------------------------


def _side_outer_face(rotation: dict, start_dart: Optional[tuple], lone_vertex) -> tuple:
    if start_dart is None:
        return Face((lone_vertex,)).id
    return next(f for f in face_walks(rotation) if start_dart in f.darts).id


def _dart_after(face_vertices: tuple, dart: tuple) -> tuple:
    k = len(face_vertices)
    for i in range(k):
        if (face_vertices[i], face_vertices[(i + 1) % k]) == dart:
            return face_vertices[(i + 1) % k], face_vertices[(i + 2) % k]
    raise AssertionError("dart not on face")


def extract_noncrossing_step(h: Graph, tp: Optional[ThetaPartition] = None, class_id: int = 0,
                             contraction: Optional[ContractionResult] = None) -> NonCrossingCertificate:
    """Certify that ``h`` is a non-crossing 2-face expansion of ``h / E_f``.

    The certificate's ``lift`` maps the expansion back onto ``h``'s vertices.
    """
    tp = partial_cube_partition(h) if tp is None else tp
    emb = test_planarity(h)
    if isinstance(emb, KuratowskiWitness):
        raise NotPlanar(emb)
    cyc = cut_cycle_order(h, emb, tp, class_id)
    emb = reroot_outer_face(emb, cyc.faces[0])
    outer = next(f for f in face_walks(emb.rotation) if f.id == emb.outer_face)

    r = contraction if contraction is not None else contract_class(h, tp, class_id)
    sides, image = r.side_of, r.image_of
    rotation1, rotation2 = {}, {}
    for v in h.vertices:
        target = rotation1 if sides[v] == SIDE_1 else rotation2
        target[image[v]] = tuple(image[u] for u in emb.rotation[v] if sides[u] == sides[v])

    a0, b0 = cyc.edges[0]
    a1, b1 = cyc.edges[1 % len(cyc)]
    # the outer face runs a0 -> b0 -> (side 2) -> b1 -> a1 -> (side 1) -> a0
    after_b = _dart_after(outer.vertices, (a0, b0))
    after_a = _dart_after(outer.vertices, (b1, a1))
    d2 = None if after_b[1] == a0 and len(rotation2[image[b0]]) == 0 else (image[after_b[0]], image[after_b[1]])
    d1 = None if after_a[1] == b1 and len(rotation1[image[a1]]) == 0 else (image[after_a[0]], image[after_a[1]])
    emb1 = PlaneEmbedding(rotation1, _side_outer_face(rotation1, d1, image[a1]))
    emb2 = PlaneEmbedding(rotation2, _side_outer_face(rotation2, d2, image[b0]))

    sigma = tuple(image[a] for a, _ in cyc.edges)
    order2 = sigma
    order1 = tuple(reversed(sigma))
    spec = r.expansion_spec()
    return NonCrossingCertificate(spec.base, spec.v1, spec.v2, emb1, emb2, order1, order2, r.lift())


# verification ---------------------------------------------------------------


def _outer_walk(g: Graph, emb: PlaneEmbedding) -> Optional[tuple]:
    for f in faces(g, emb):
        if f.id == tuple(emb.outer_face):
            return f.vertices
    return None


def _cyclic_subsequence_start(walk: tuple, order: tuple) -> Optional[list]:
    """Positions in ``walk`` realizing ``order`` as a cyclic subsequence, or None."""
    k = len(walk)
    for start in range(k):
        if walk[start] != order[0]:
            continue
        picked = []
        j = 0
        for step in range(k):
            pos = (start + step) % k
            if j < len(order) and walk[pos] == order[j]:
                picked.append(pos)
                j += 1
        if j == len(order):
            return picked
    return None


def _same_cycle(a: tuple, b: tuple) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = b + b
    return any(doubled[i : i + len(a)] == a for i in range(len(b)))


def noncrossing_failure(cert: NonCrossingCertificate) -> Optional[str]:
    """Reason the certificate fails, or None when it verifies."""
    try:
        spec = cert.spec.validate()
    except PlanarCubeError as exc:
        return f"invalid expansion: {exc}"
    shared = spec.shared
    for side, sub, emb in ((1, spec.g1, cert.emb1), (2, spec.g2, cert.emb2)):
        if not verify_embedding(sub, emb):
            return f"embedding of side {side} is not a plane embedding"
        walk = _outer_walk(sub, emb)
        if not shared <= set(walk):
            return f"shared vertices are not all on the outer face of side {side}"
    if len(shared) <= 2:
        return None
    o1, o2 = tuple(cert.order1), tuple(cert.order2)
    for side, sub, emb, order in ((1, spec.g1, cert.emb1, o1), (2, spec.g2, cert.emb2, o2)):
        if len(order) != len(shared) or set(order) != shared:
            return f"order{side} is not an ordering of the shared vertices"
        if _cyclic_subsequence_start(_outer_walk(sub, emb), order) is None:
            return f"order{side} does not follow the outer face of side {side}"
    if not _same_cycle(o1, tuple(reversed(o2))):
        return "orders on the two sides are not opposite"
    return None


def verify_noncrossing(cert: NonCrossingCertificate) -> bool:
    return noncrossing_failure(cert) is None


def glue_embedding(cert: NonCrossingCertificate) -> PlaneEmbedding:
    """Plane embedding of ``expand(cert.spec)`` built from the two side embeddings.

    Each matching edge is inserted at the outer-face corner where its shared
    vertex is visited in the certified order; with opposite orders every new
    face closes between two consecutive matching edges.
    """
    spec = cert.spec.validate()
    shared = spec.shared
    walk1 = _outer_walk(spec.g1, cert.emb1)
    walk2 = _outer_walk(spec.g2, cert.emb2)
    if len(shared) >= 3:
        o1, o2 = tuple(cert.order1), tuple(cert.order2)
    else:
        o1 = tuple(dict.fromkeys(v for v in walk1 if v in shared))
        o2 = tuple(reversed(o1))
    rotation = {}
    for side, emb, walk, order in ((1, cert.emb1, walk1, o1), (2, cert.emb2, walk2, o2)):
        other = 3 - side
        picked = _cyclic_subsequence_start(walk, order)
        if picked is None:
            raise PlanarCubeError(f"order{side} does not follow the outer face")
        corner = {walk[p]: walk[p - 1] for p in picked}  # arrival vertex at that visit
        for v, rot in emb.rotation.items():
            new = [Copy(u, side) for u in rot]
            if v in corner:
                if rot:
                    new.insert(rot.index(corner[v]) + 1, Copy(v, other))
                else:
                    new.append(Copy(v, other))
            rotation[Copy(v, side)] = tuple(new)
    return PlaneEmbedding(rotation, face_walks(rotation)[0].id)


# deciding the two conditions ----------------------------------------------


def is_noncrossing_expansion(spec: ExpansionSpec) -> bool:
    return is_planar(expand(spec))


def is_two_face_expansion(spec: ExpansionSpec) -> bool:
    spec.validate()
    return common_face_realizable(spec.g1, spec.shared) and common_face_realizable(spec.g2, spec.shared)


def verify_flaw_witness(w: FlawWitness) -> bool:
    try:
        spec = w.spec.validate()
    except PlanarCubeError:
        return False
    for sub, emb in ((spec.g1, w.emb1), (spec.g2, w.emb2)):
        if not verify_embedding(sub, emb):
            return False
        if not spec.shared <= set(_outer_walk(sub, emb)):
            return False
    return verify_kuratowski(expand(spec), w.kuratowski)


def flaw_witness_for(spec: ExpansionSpec) -> Optional[FlawWitness]:
    """Package ``spec`` as a :class:`FlawWitness` if it is one."""
    h = expand(spec)
    cert = test_planarity(h)
    if not isinstance(cert, KuratowskiWitness):
        return None
    emb1 = common_face_embedding(spec.g1, spec.shared)
    if emb1 is None:
        return None
    emb2 = common_face_embedding(spec.g2, spec.shared)
    if emb2 is None:
        return None
    return FlawWitness(spec.base, spec.v1, spec.v2, emb1, emb2, cert)
