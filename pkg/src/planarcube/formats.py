"""Text formats: the edge-list graph file and JSON certificate files.

Graph file::

    graph <name>
    # comment
    vertex <u>          (isolated vertices only)
    <u> <v>             (one edge per line)

Certificate files are JSON objects with ``format_version`` (currently 1) and
``kind`` in ``decomposition``, ``kuratowski``, ``pc-refutation``,
``flaw-witness``.  Vertices are written by name; loaded certificates use the
names themselves as vertex ids, so writing a loaded certificate reproduces
the file byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .decompose import DecompositionCertificate, Refutation
from .errors import PlanarCubeError
from .expansion import FlawWitness, NonCrossingCertificate
from .graph import Graph, vertex_name
from .ops import ExpansionSpec, expand
from .partial_cube import HypercubeLabeling, PcRefutation
from .planarity import KuratowskiWitness, PlaneEmbedding

FORMAT_VERSION = 1
KINDS = ("decomposition", "kuratowski", "pc-refutation", "flaw-witness")


class FormatError(PlanarCubeError):
    pass


# graph files ---------------------------------------------------------------


def parse_graph(text: str) -> tuple[str, Graph]:
    name = None
    vertices: dict[str, None] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "graph":
            if name is not None or len(tokens) != 2:
                raise FormatError(f"line {lineno}: bad or repeated header")
            name = tokens[1]
        elif name is None:
            raise FormatError(f"line {lineno}: missing 'graph <name>' header")
        elif tokens[0] == "vertex":
            if len(tokens) != 2:
                raise FormatError(f"line {lineno}: expected 'vertex <u>'")
            vertices.setdefault(tokens[1])
        elif len(tokens) == 2:
            u, v = tokens
            vertices.setdefault(u)
            vertices.setdefault(v)
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
    if name is None:
        raise FormatError("empty graph file")
    return name, Graph(vertices, edges)


def format_graph(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name}"]
    lines += [f"vertex {g.name(v)}" for v in g.vertices if g.degree(v) == 0]
    lines += [f"{g.name(u)} {g.name(v)}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# JSON pieces -----------------------------------------------------------------


def _names(vs) -> list[str]:
    return sorted(vertex_name(v) for v in vs)


def graph_to_obj(g: Graph) -> dict:
    return {"vertices": [g.name(v) for v in g.vertices], "edges": [[g.name(u), g.name(v)] for u, v in g.edges]}


def graph_from_obj(obj: dict) -> Graph:
    return Graph(obj["vertices"], (tuple(e) for e in obj["edges"]))


def embedding_to_obj(emb: PlaneEmbedding) -> dict:
    rot = {vertex_name(v): [vertex_name(u) for u in r] for v, r in emb.rotation.items()}
    return {"rotation": dict(sorted(rot.items())), "outer_face": list(emb.outer_face)}


def embedding_from_obj(obj: dict) -> PlaneEmbedding:
    return PlaneEmbedding({v: tuple(r) for v, r in obj["rotation"].items()}, tuple(obj["outer_face"]))


def labeling_to_obj(lab: HypercubeLabeling) -> dict:
    labels = {vertex_name(v): "".join(map(str, bits)) for v, bits in lab.label.items()}
    return {"dim": lab.dim, "labels": dict(sorted(labels.items()))}


def labeling_from_obj(obj: dict) -> HypercubeLabeling:
    return HypercubeLabeling(obj["dim"], {v: tuple(int(c) for c in bits) for v, bits in obj["labels"].items()})


def kuratowski_to_obj(w: KuratowskiWitness) -> dict:
    return {
        "type": w.kind,
        "branch_vertices": [vertex_name(v) for v in w.branch_vertices],
        "paths": [[vertex_name(v) for v in p] for p in w.paths],
    }


def kuratowski_from_obj(obj: dict, ids: dict | None = None) -> KuratowskiWitness:
    def get(v):
        return v if ids is None else ids.get(v, v)

    return KuratowskiWitness(
        obj["type"], tuple(get(v) for v in obj["branch_vertices"]), tuple(tuple(get(v) for v in p) for p in obj["paths"])
    )


def step_to_obj(step: NonCrossingCertificate) -> dict:
    obj = {
        "base": graph_to_obj(step.base),
        "v1": _names(step.v1),
        "v2": _names(step.v2),
        "emb1": embedding_to_obj(step.emb1),
        "emb2": embedding_to_obj(step.emb2),
        "order1": [vertex_name(v) for v in step.order1],
        "order2": [vertex_name(v) for v in step.order2],
    }
    if step.lift is not None:
        obj["lift"] = sorted([vertex_name(b), s, vertex_name(t)] for (b, s), t in step.lift.items())
    return obj


def step_from_obj(obj: dict) -> NonCrossingCertificate:
    lift = None
    if "lift" in obj:
        lift = {(b, s): t for b, s, t in obj["lift"]}
    return NonCrossingCertificate(
        graph_from_obj(obj["base"]),
        frozenset(obj["v1"]),
        frozenset(obj["v2"]),
        embedding_from_obj(obj["emb1"]),
        embedding_from_obj(obj["emb2"]),
        tuple(obj["order1"]),
        tuple(obj["order2"]),
        lift,
    )


def refutation_to_obj(ref: PcRefutation) -> dict:
    obj: dict[str, Any] = {"type": ref.kind}
    if ref.pair is not None:
        obj["pair"] = [vertex_name(v) for v in ref.pair]
    if ref.odd_cycle is not None:
        obj["odd_cycle"] = [vertex_name(v) for v in ref.odd_cycle]
    if ref.labeling is not None:
        obj["labeling"] = labeling_to_obj(ref.labeling)
    if ref.triple is not None:
        obj["triple"] = [[vertex_name(u), vertex_name(v)] for u, v in ref.triple]
    return obj


def refutation_from_obj(obj: dict) -> PcRefutation:
    return PcRefutation(
        obj["type"],
        pair=tuple(obj["pair"]) if "pair" in obj else None,
        odd_cycle=tuple(obj["odd_cycle"]) if "odd_cycle" in obj else None,
        labeling=labeling_from_obj(obj["labeling"]) if "labeling" in obj else None,
        triple=tuple(tuple(e) for e in obj["triple"]) if "triple" in obj else None,
    )


# certificate files -------------------------------------------------------------


def _envelope(kind: str, body: dict) -> dict:
    return {"format_version": FORMAT_VERSION, "kind": kind, **body}


def certificate_to_obj(cert, graph: Graph | None = None) -> dict:
    """Serialize any certificate; refutations also record the graph they refute."""
    if isinstance(cert, DecompositionCertificate):
        return _envelope(
            "decomposition",
            {"final_labeling": labeling_to_obj(cert.final_labeling), "steps": [step_to_obj(s) for s in cert.steps]},
        )
    if isinstance(cert, Refutation):
        cert = cert.witness
    if isinstance(cert, KuratowskiWitness):
        if graph is None:
            raise ValueError("a Kuratowski certificate needs its host graph")
        return _envelope("kuratowski", {"graph": graph_to_obj(graph), "witness": kuratowski_to_obj(cert)})
    if isinstance(cert, PcRefutation):
        if graph is None:
            raise ValueError("a refutation needs its graph")
        return _envelope("pc-refutation", {"graph": graph_to_obj(graph), "refutation": refutation_to_obj(cert)})
    if isinstance(cert, FlawWitness):
        return _envelope(
            "flaw-witness",
            {
                "base": graph_to_obj(cert.base),
                "v1": _names(cert.v1),
                "v2": _names(cert.v2),
                "emb1": embedding_to_obj(cert.emb1),
                "emb2": embedding_to_obj(cert.emb2),
                "kuratowski": kuratowski_to_obj(cert.kuratowski),
            },
        )
    raise TypeError(f"cannot serialize {type(cert).__name__}")


def certificate_from_obj(obj: dict):
    """Return ``(kind, certificate, graph_or_None)``."""
    if not isinstance(obj, dict) or obj.get("format_version") != FORMAT_VERSION:
        raise FormatError(f"unsupported certificate (format_version must be {FORMAT_VERSION})")
    kind = obj.get("kind")
    try:
        if kind == "decomposition":
            cert = DecompositionCertificate(
                tuple(step_from_obj(s) for s in obj["steps"]), labeling_from_obj(obj["final_labeling"])
            )
            return kind, cert, None
        if kind == "kuratowski":
            return kind, kuratowski_from_obj(obj["witness"]), graph_from_obj(obj["graph"])
        if kind == "pc-refutation":
            return kind, refutation_from_obj(obj["refutation"]), graph_from_obj(obj["graph"])
        if kind == "flaw-witness":
            base = graph_from_obj(obj["base"])
            v1, v2 = frozenset(obj["v1"]), frozenset(obj["v2"])
            try:
                h = expand(ExpansionSpec(base, v1, v2))
                ids = {h.name(v): v for v in h.vertices}
            except PlanarCubeError:
                ids = None  # invalid spec; verification will reject it
            witness = FlawWitness(
                base, v1, v2, embedding_from_obj(obj["emb1"]), embedding_from_obj(obj["emb2"]),
                kuratowski_from_obj(obj["kuratowski"], ids),
            )
            return kind, witness, None
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed {kind} certificate: {exc}") from None
    raise FormatError(f"unknown certificate kind {kind!r}; expected one of {', '.join(KINDS)}")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def write_certificate(cert, graph: Graph | None = None) -> str:
    return dumps(certificate_to_obj(cert, graph))


def read_certificate(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from None
    return certificate_from_obj(obj)
