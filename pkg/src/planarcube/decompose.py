"""Decompose planar partial cubes into non-crossing 2-face expansions from K1.

:func:`certify_planar_partial_cube` peels one Θ-class at a time: certify the
current graph as a non-crossing expansion of its contraction, then recurse on
the contraction.  :func:`replay` rebuilds the graph from K1, re-verifying
every step, and so needs nothing but the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidStep, NotPartialCube, PlanarCubeError
from .expansion import NonCrossingCertificate, extract_noncrossing_step, noncrossing_failure
from .generators import SplitMix64
from .graph import Graph, relabel
from .ops import contract_class, expand, one_step_minors
from .partial_cube import (
    HypercubeLabeling,
    PcRefutation,
    recognize_partial_cube,
    theta_classes,
    verify_labeling,
)
from .planarity import KuratowskiWitness, is_planar, test_planarity


@dataclass(frozen=True)
class DecompositionCertificate:
    steps: tuple  # NonCrossingCertificate, from K1 upwards
    final_labeling: HypercubeLabeling

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Refutation:
    """``kind`` is ``NotPartialCube`` (``witness``: PcRefutation) or ``NotPlanar`` (KuratowskiWitness)."""

    kind: str
    witness: Union[PcRefutation, KuratowskiWitness]


def certify_planar_partial_cube(h: Graph, seed: Optional[int] = None):
    """A :class:`DecompositionCertificate` for ``h``, or a :class:`Refutation`.

    Classes are peeled lowest index first; with ``seed`` set, a random class
    is peeled at each level instead.
    """
    lab = recognize_partial_cube(h)
    if isinstance(lab, PcRefutation):
        return Refutation("NotPartialCube", lab)
    planarity = test_planarity(h)
    if isinstance(planarity, KuratowskiWitness):
        return Refutation("NotPlanar", planarity)
    rng = SplitMix64(seed) if seed is not None else None
    steps = []
    cur = h
    while cur.m:
        tp = theta_classes(cur)
        class_id = rng.below(len(tp)) if rng is not None else 0
        r = contract_class(cur, tp, class_id)
        steps.append(extract_noncrossing_step(cur, tp, class_id, contraction=r))
        cur = r.quotient
    steps.reverse()
    return DecompositionCertificate(tuple(steps), lab)


def _lift(step: NonCrossingCertificate, expanded: Graph) -> Graph:
    if step.lift is None:
        return expanded
    lift = step.lift
    try:
        mapping = {c: lift[(c.vertex, c.side)] for c in expanded.vertices}
    except KeyError as exc:
        raise PlanarCubeError(f"lift is missing {exc}") from None
    if len(set(mapping.values())) != len(mapping):
        raise PlanarCubeError("lift is not injective")
    return relabel(expanded, mapping)


def replay(cert: DecompositionCertificate) -> Graph:
    """Rebuild the certified graph, validating each step; raises InvalidStep."""
    lab = cert.final_labeling
    if not cert.steps:
        if len(lab.label) != 1 or lab.dim != 0:
            raise InvalidStep(0, "an empty certificate must certify K1")
        return Graph(lab.label)
    cur = cert.steps[0].base
    if cur.n != 1:
        raise InvalidStep(0, "the first base is not K1")
    for i, step in enumerate(cert.steps):
        if step.base != cur:
            raise InvalidStep(i, "base differs from the graph built so far")
        reason = noncrossing_failure(step)
        if reason is not None:
            raise InvalidStep(i, reason)
        try:
            cur = _lift(step, expand(step.spec))
        except PlanarCubeError as exc:
            raise InvalidStep(i, str(exc)) from None
    if lab.dim != len(cert.steps) or not verify_labeling(cur, lab):
        raise InvalidStep(len(cert.steps), "final labeling does not embed the result isometrically")
    return cur


def is_minimal_obstruction(h: Graph) -> bool:
    """Non-planar partial cube all of whose one-step pc-minors are planar."""
    if isinstance(recognize_partial_cube(h), PcRefutation):
        raise NotPartialCube(recognize_partial_cube(h))
    if is_planar(h):
        return False
    return all(is_planar(m) for m in one_step_minors(h))
