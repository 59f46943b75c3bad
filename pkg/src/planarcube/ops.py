"""Expansion, contraction and restriction of partial cubes.

An expansion takes two vertex sets ``v1``, ``v2`` of a base graph (inducing
isometric subgraphs that cover it and overlap), copies each side
disjointly and joins the two copies of every shared vertex by a matching
edge.  Copies are :class:`~planarcube.graph.Copy` vertices, so the matching
(the new Θ-class) is readable from the labels alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import EmptyIntersection, NotCovering, NotIsometric, NotPartialCube, UnknownClass
from .graph import Copy, Graph, Merged, induced_subgraph, isometry_violation, relabel
from .partial_cube import SIDE_1, SIDE_2, ThetaPartition, partial_cube_partition


@dataclass(frozen=True)
class ExpansionSpec:
    base: Graph
    v1: frozenset
    v2: frozenset

    def __post_init__(self):
        object.__setattr__(self, "v1", frozenset(self.v1))
        object.__setattr__(self, "v2", frozenset(self.v2))

    @property
    def shared(self) -> frozenset:
        return self.v1 & self.v2

    @cached_property
    def g1(self) -> Graph:
        return induced_subgraph(self.base, self.v1)

    @cached_property
    def g2(self) -> Graph:
        return induced_subgraph(self.base, self.v2)

    def validate(self) -> "ExpansionSpec":
        base = self.base
        v1 = base.check_vertices(self.v1)
        v2 = base.check_vertices(self.v2)
        if v1 | v2 != set(base.vertices):
            missing = next(v for v in base.vertices if v not in v1 | v2)
            raise NotCovering(f"vertex {base.name(missing)!r} lies on neither side")
        for u, v in base.edges:
            if not ({u, v} <= v1 or {u, v} <= v2):
                raise NotCovering(f"edge {base.name(u)}-{base.name(v)} lies on neither side")
        if not (v1 & v2):
            raise EmptyIntersection("the two sides do not intersect")
        for side, s in ((1, v1), (2, v2)):
            bad = isometry_violation(base, s)
            if bad is not None:
                raise NotIsometric(side, bad)
        return self


def expand(spec: ExpansionSpec) -> Graph:
    spec.validate()
    vertices = [Copy(v, 1) for v in spec.g1.vertices] + [Copy(v, 2) for v in spec.g2.vertices]
    edges = [(Copy(u, 1), Copy(v, 1)) for u, v in spec.g1.edges]
    edges += [(Copy(u, 2), Copy(v, 2)) for u, v in spec.g2.edges]
    edges += [(Copy(v, 1), Copy(v, 2)) for v in spec.shared]
    return Graph(vertices, edges)


def matching_edges(h: Graph) -> list[tuple]:
    """Edges of an expansion joining the two copies of one base vertex."""
    return [
        (u, v)
        for u, v in h.edges
        if isinstance(u, Copy) and isinstance(v, Copy) and u.vertex == v.vertex and u.side != v.side
    ]


@dataclass(frozen=True)
class ContractionResult:
    quotient: Graph
    class_id: int
    side_of: dict
    image_of: dict
    matching: tuple  # (side-1 vertex, side-2 vertex) pairs

    def expansion_spec(self) -> ExpansionSpec:
        v1 = {self.image_of[w] for w, s in self.side_of.items() if s == SIDE_1}
        v2 = {self.image_of[w] for w, s in self.side_of.items() if s == SIDE_2}
        return ExpansionSpec(self.quotient, frozenset(v1), frozenset(v2))

    def lift(self) -> dict:
        """``(quotient vertex, side) -> original vertex``; inverts image/side."""
        return {(self.image_of[w], s): w for w, s in self.side_of.items()}

    def unlift(self, expanded: Graph) -> Graph:
        """Rename an expansion of the quotient back to the original vertices."""
        lift = self.lift()
        return relabel(expanded, {c: lift[(c.vertex, c.side)] for c in expanded.vertices})


def _class_sides(h: Graph, tp: Optional[ThetaPartition], class_id: int):
    tp = partial_cube_partition(h) if tp is None else tp
    if not 0 <= class_id < len(tp):
        raise UnknownClass(f"no Θ-class {class_id} (graph has {len(tp)})")
    sides = tp.side_map[class_id]
    if sides is None:
        raise NotPartialCube(message=f"Θ-class {class_id} is not a two-sided cut")
    return tp, sides


def contract_class(h: Graph, tp: Optional[ThetaPartition], class_id: int) -> ContractionResult:
    """Contract one Θ-class of a partial cube.

    ``tp`` may be None, in which case ``h`` is recognized first.  Merged
    vertices become ``Merged(side-1 endpoint, class_id)``; all others keep
    their identity.
    """
    tp, sides = _class_sides(h, tp, class_id)
    matching = tuple(tp.oriented(class_id))
    image = {v: v for v in h.vertices}
    for a, b in matching:
        image[a] = image[b] = Merged(a, class_id)
    edges = {frozenset((image[u], image[v])) for u, v in h.edges}
    quotient = Graph(set(image.values()), (tuple(e) for e in edges if len(e) == 2))
    return ContractionResult(quotient, class_id, dict(sides), image, matching)


def restrict(h: Graph, tp: Optional[ThetaPartition], class_id: int, side: int) -> Graph:
    if side not in (SIDE_1, SIDE_2):
        raise ValueError("side must be 1 or 2")
    _, sides = _class_sides(h, tp, class_id)
    return induced_subgraph(h, (v for v in h.vertices if sides[v] == side))


def one_step_minors(h: Graph) -> list[Graph]:
    """For each Θ-class in order: the contraction, then both restrictions."""
    tp = partial_cube_partition(h)
    out = []
    for i in range(len(tp)):
        out.append(contract_class(h, tp, i).quotient)
        out.append(restrict(h, tp, i, SIDE_1))
        out.append(restrict(h, tp, i, SIDE_2))
    return out
