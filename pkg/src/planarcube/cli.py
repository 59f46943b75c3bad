"""Command-line interface.

Exit codes: 0 the property holds / success, 1 the property fails or a
refutation was produced (it is still written), 2 usage or parse error.
A file argument of ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from . import formats
from .decompose import (
    Refutation,
    certify_planar_partial_cube,
    is_minimal_obstruction,
    replay,
)
from .errors import InvalidStep, NotConnected, NotFound, NotPartialCube, PlanarCubeError
from .expansion import verify_flaw_witness
from .flaw import SearchBudget, SearchStats, find_flaw_witness
from .generators import FAMILIES, GeneratorSpec
from .graph import vertex_name
from .ops import ExpansionSpec, contract_class, expand
from .partial_cube import PcRefutation, recognize_partial_cube, theta_classes, verify_refutation
from .planarity import KuratowskiWitness, faces, test_planarity, verify_kuratowski

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return formats.parse_graph(_read(path))
    except PlanarCubeError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_artifact(text: str, out: Optional[str]) -> None:
    if out is not None:
        _emit(text, out)


def _names(vs) -> str:
    return " ".join(vertex_name(v) for v in vs)


# commands ----------------------------------------------------------------------


def cmd_recognize(args) -> int:
    _, g = _load_graph(args.file)
    result = recognize_partial_cube(g)
    if isinstance(result, PcRefutation):
        print(f"not a partial cube: {result.kind}")
        if result.pair is not None:
            print(f"  witness pair: {_names(result.pair)}")
        if result.odd_cycle is not None:
            print(f"  odd cycle: {_names(result.odd_cycle)}")
        _write_artifact(formats.write_certificate(result, g), args.output)
        return FAIL
    print(f"partial cube of dimension {result.dim}")
    for v in g.vertices:
        print(f"  {g.name(v)} {''.join(map(str, result.label[v]))}")
    return OK


def cmd_theta(args) -> int:
    _, g = _load_graph(args.file)
    try:
        tp = theta_classes(g)
    except NotConnected as exc:
        print(f"error: {exc}")
        return FAIL
    print(f"{len(tp)} Θ*-classes")
    for i, es in enumerate(tp.classes):
        cut = "cut" if tp.side_map[i] is not None else "not a 2-cut"
        edges = ", ".join(f"{g.name(u)}-{g.name(v)}" for u, v in es)
        print(f"  [{i}] size {len(es)} ({cut}): {edges}")
    return OK


def cmd_planarity(args) -> int:
    _, g = _load_graph(args.file)
    cert = test_planarity(g)
    if isinstance(cert, KuratowskiWitness):
        print(f"not planar: {cert.kind} subdivision on {_names(cert.branch_vertices)}")
        _write_artifact(formats.write_certificate(cert, g), args.output)
        return FAIL
    fs = faces(g, cert)
    print(f"planar: {len(fs)} faces, outer face {' '.join(cert.outer_face)}")
    for v in g.vertices:
        print(f"  {g.name(v)}: {_names(cert.rotation[v])}")
    return OK


def cmd_contract(args) -> int:
    name, g = _load_graph(args.file)
    try:
        r = contract_class(g, None, args.class_index)
    except NotPartialCube as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    _emit(formats.format_graph(r.quotient, f"{name}/{args.class_index}"), args.output)
    return OK


def _vertex_list(g, text: str) -> frozenset:
    by_name = {g.name(v): v for v in g.vertices}
    try:
        return frozenset(by_name[t] for t in text.split(",") if t)
    except KeyError as exc:
        raise UsageError(f"unknown vertex {exc}") from None


def cmd_expand(args) -> int:
    name, g = _load_graph(args.file)
    spec = ExpansionSpec(g, _vertex_list(g, args.g1), _vertex_list(g, args.g2))
    try:
        h = expand(spec)
    except PlanarCubeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    _emit(formats.format_graph(h, f"{name}+"), args.output)
    return OK


def cmd_certify(args) -> int:
    _, g = _load_graph(args.file)
    cert = certify_planar_partial_cube(g)
    if isinstance(cert, Refutation):
        print(f"refuted: {cert.kind}")
        _write_artifact(formats.write_certificate(cert, g), args.output)
        return FAIL
    print(f"planar partial cube: {len(cert.steps)} non-crossing 2-face expansion steps from K1")
    _write_artifact(formats.write_certificate(cert), args.output)
    return OK


def _load_certificate(path: str):
    try:
        return formats.read_certificate(_read(path))
    except PlanarCubeError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_replay(args) -> int:
    kind, cert, _ = _load_certificate(args.certificate)
    if kind != "decomposition":
        raise UsageError(f"replay needs a decomposition certificate, got {kind}")
    try:
        g = replay(cert)
    except InvalidStep as exc:
        print(str(exc))
        return FAIL
    print(f"replayed {len(cert.steps)} steps: {g.n} vertices, {g.m} edges")
    _write_artifact(formats.format_graph(g, "replayed"), args.output)
    return OK


def check_certificate(kind: str, cert, graph) -> Optional[str]:
    """None if the loaded certificate verifies, else a one-line reason."""
    if kind == "decomposition":
        try:
            replay(cert)
        except InvalidStep as exc:
            return str(exc)
        return None
    if kind == "kuratowski":
        return None if verify_kuratowski(graph, cert) else "Kuratowski witness does not verify"
    if kind == "pc-refutation":
        return None if verify_refutation(graph, cert) else "refutation does not verify"
    if kind == "flaw-witness":
        return None if verify_flaw_witness(cert) else "flaw witness does not verify"
    return f"unknown kind {kind}"


def cmd_verify(args) -> int:
    kind, cert, graph = _load_certificate(args.certificate)
    reason = check_certificate(kind, cert, graph)
    if reason is None:
        print(f"{kind} certificate verifies")
        return OK
    print(f"{kind} certificate rejected: {reason}")
    return FAIL


def cmd_check_obstruction(args) -> int:
    _, g = _load_graph(args.file)
    try:
        minimal = is_minimal_obstruction(g)
    except NotPartialCube as exc:
        print(f"not a partial cube: {exc}")
        return FAIL
    print("minimal obstruction" if minimal else "not a minimal obstruction")
    return OK if minimal else FAIL


def cmd_find_flaw(args) -> int:
    budget = SearchBudget(max_base_size=args.max_base_size, max_candidates=args.max_candidates)
    stats = SearchStats()
    try:
        w = find_flaw_witness(budget, args.seed, stats)
    except NotFound as exc:
        print(f"not found: {exc} ({stats.candidates} candidates)")
        return FAIL
    print(
        f"flaw witness: base with {w.base.n} vertices, shared {_names(sorted(w.spec.shared, key=vertex_name))}, "
        f"expansion contains a {w.kuratowski.kind} subdivision ({stats.candidates} candidates, {stats.bases} bases)"
    )
    _write_artifact(formats.write_certificate(w), args.output)
    return OK


def cmd_generate(args) -> int:
    spec = GeneratorSpec(args.family, tuple(args.params))
    try:
        g = spec.build()
    except PlanarCubeError as exc:
        raise UsageError(str(exc)) from None
    name = "-".join([args.family] + [str(p) for p in args.params])
    _emit(formats.format_graph(g, name), args.output)
    return OK


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def cmd_export_dot(args) -> int:
    name, g = _load_graph(args.file)
    lines = [f"graph {_dot_id(name)} {{"]
    emb = test_planarity(g) if args.embedding else None
    if isinstance(emb, KuratowskiWitness):
        print(f"error: graph is not planar ({emb.kind} subdivision)", file=sys.stderr)
        return FAIL
    if emb is not None:
        lines.append(f"  // outer face: {' '.join(emb.outer_face)}")
    for v in g.vertices:
        attrs = ""
        if emb is not None:
            attrs = f" [rotation={_dot_id(_names(emb.rotation[v]))}]"
        lines.append(f"  {_dot_id(g.name(v))}{attrs};")
    for u, v in g.edges:
        lines.append(f"  {_dot_id(g.name(u))} -- {_dot_id(g.name(v))};")
    lines.append("}")
    _emit("\n".join(lines) + "\n", args.output)
    return OK


# parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarcube", description="Certified planar partial cube toolkit.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help, file=True, output=True):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file", help="graph file ('-' for stdin)")
        if output:
            sp.add_argument("-o", "--output")
        sp.set_defaults(func=fn)
        return sp

    cmd("recognize", cmd_recognize, "partial-cube recognition with labeling or refutation")
    cmd("theta", cmd_theta, "list Θ*-classes in canonical order", output=False)
    cmd("planarity", cmd_planarity, "planarity test with embedding or Kuratowski witness")
    sp = cmd("contract", cmd_contract, "contract one Θ-class (canonical class index)")
    sp.add_argument("class_index", type=int)
    sp = cmd("expand", cmd_expand, "expand along two comma-separated vertex lists")
    sp.add_argument("--g1", required=True)
    sp.add_argument("--g2", required=True)
    cmd("certify", cmd_certify, "decompose a planar partial cube or refute")
    sp = cmd("replay", cmd_replay, "replay a decomposition certificate", file=False)
    sp.add_argument("certificate")
    sp = cmd("verify", cmd_verify, "verify any certificate file", file=False, output=False)
    sp.add_argument("certificate")
    cmd("check-obstruction", cmd_check_obstruction, "is this a minimal non-planar partial cube?", output=False)
    sp = cmd("find-flaw", cmd_find_flaw, "search for a non-planar 2-face expansion", file=False)
    sp.add_argument("--max-base-size", type=int, default=12)
    sp.add_argument("--max-candidates", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp = cmd("generate", cmd_generate, "write a generated graph", file=False)
    sp.add_argument("family", choices=sorted(FAMILIES))
    sp.add_argument("params", type=int, nargs="*")
    sp = cmd("export-dot", cmd_export_dot, "export Graphviz DOT")
    sp.add_argument("--embedding", action="store_true", help="annotate vertices with their rotation")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
