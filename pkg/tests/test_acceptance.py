"""Acceptance gate: one PASS/FAIL line per criterion in the terminal summary."""

import random
import time
from contextlib import contextmanager

import pytest

from oracles import oracle_planar
from planarcube.cli import main
from planarcube.decompose import DecompositionCertificate, certify_planar_partial_cube, is_minimal_obstruction, replay
from planarcube.expansion import (
    extract_noncrossing_step,
    glue_embedding,
    is_two_face_expansion,
    noncrossing_failure,
    verify_flaw_witness,
)
from planarcube.flaw import SearchBudget, find_flaw_witness
from planarcube.formats import format_graph, parse_graph, read_certificate, write_certificate
from planarcube.generators import (
    complete_bipartite,
    complete_graph,
    cycle,
    even_cycle,
    gear_obstruction,
    hypercube,
    named_graphs,
    path,
    random_planar_partial_cube,
    random_tree,
)
from planarcube.graph import Graph, components
from planarcube.ops import expand
from planarcube.partial_cube import (
    HypercubeLabeling,
    is_partial_cube,
    recognize_partial_cube,
    theta_classes,
    verify_labeling,
    verify_refutation,
)
from planarcube.planarity import (
    KuratowskiWitness,
    faces,
    is_planar,
    test_planarity as planarity_of,
    verify_embedding,
    verify_kuratowski,
)

SAMPLES = 200


@contextmanager
def criterion(report, number, title, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        late = limit is not None and elapsed >= limit
        status = "PASS" if ok and not late else "FAIL"
        budget = f" (limit {limit:.0f}s)" if limit is not None else ""
        report.append(f"[{status}] criterion {number}: {title} in {elapsed:.1f}s{budget}")
        print(report[-1])
    assert not late, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


@pytest.fixture(scope="module")
def samples():
    # seeds 0..199, steps cycling through 1..8
    return [random_planar_partial_cube(1 + s % 8, s, max_vertices=64) for s in range(SAMPLES)]


@pytest.fixture(scope="module")
def corpus():
    """Every certificate produced along the way, for the file round trips."""
    return {"decomposition": [], "steps": [], "kuratowski": [], "pc-refutation": [], "flaw-witness": []}


@pytest.fixture(scope="module")
def flaw():
    return find_flaw_witness(SearchBudget(), seed=0)


def test_criterion_1_round_trip(samples, corpus, acceptance_report):
    with criterion(acceptance_report, 1, f"certify/replay round trip on {SAMPLES} samples", 60):
        for h in samples:
            cert = certify_planar_partial_cube(h)
            assert isinstance(cert, DecompositionCertificate)
            assert len(cert.steps) == len(theta_classes(h))
            assert replay(cert) == h
            corpus["decomposition"].append((h, cert))


def test_criterion_2_every_class(samples, corpus, acceptance_report):
    extra = [hypercube(3)] + [even_cycle(2 * n) for n in range(2, 7)]
    count = 0
    with criterion(acceptance_report, 2, "non-crossing certificate for every class", 60):
        for h in samples + extra:
            tp = theta_classes(h)
            for i in range(len(tp)):
                cert = extract_noncrossing_step(h, tp, i)
                assert noncrossing_failure(cert) is None, noncrossing_failure(cert)
                corpus["steps"].append(cert)
                count += 1
        assert count > SAMPLES


def test_criterion_3_glue_is_planar(corpus, acceptance_report):
    certs = corpus["steps"] + [s for _, c in corpus["decomposition"] for s in c.steps]
    failures = 0
    with criterion(acceptance_report, 3, f"glued embeddings pass Euler on {len(certs)} certificates"):
        assert certs
        for cert in certs:
            assert noncrossing_failure(cert) is None
            h = expand(cert.spec)
            emb = glue_embedding(cert)
            ok = verify_embedding(h, emb) and h.n - h.m + len(faces(h, emb)) == 2 * len(components(h))
            failures += not ok
        assert failures == 0, f"{failures} failures"


def test_criterion_4_flaw(flaw, corpus, acceptance_report):
    with criterion(acceptance_report, 4, "flaw witness at the default budget", 600):
        w = find_flaw_witness(SearchBudget(), seed=0)
        assert w.base.n <= 12
        assert verify_flaw_witness(w)
        assert is_two_face_expansion(w.spec)
        h = expand(w.spec)
        assert w.kuratowski.kind in ("K33", "K5") and verify_kuratowski(h, w.kuratowski)
        corpus["flaw-witness"].append(flaw)


def test_criterion_5_obstructions(corpus, acceptance_report):
    with criterion(acceptance_report, 5, "obstruction family, Q4 and Q5", 60):
        for n in (3, 4, 5):
            g = gear_obstruction(n)
            assert is_partial_cube(g)
            w = planarity_of(g)
            assert isinstance(w, KuratowskiWitness) and verify_kuratowski(g, w)
            assert is_minimal_obstruction(g)
            corpus["kuratowski"].append((g, w))
        q4 = hypercube(4)
        assert is_partial_cube(q4) and not is_planar(q4)
        assert not is_minimal_obstruction(hypercube(5))


def _random_connected(rng):
    n = rng.randint(1, 7)
    vs = [f"v{i}" for i in range(n)]
    edges = {(vs[rng.randrange(i)], vs[i]) for i in range(1, n)}
    p = rng.random()
    edges |= {(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph(vs, edges)


def test_criterion_6_planarity_oracle(corpus, acceptance_report):
    rng = random.Random(20240601)
    graphs = [_random_connected(rng) for _ in range(10_000)] + list(named_graphs(16).values())
    with criterion(acceptance_report, 6, f"planarity agrees with the oracle on {len(graphs)} graphs", 600):
        for g in graphs:
            cert = planarity_of(g)
            if isinstance(cert, KuratowskiWitness):
                assert verify_kuratowski(g, cert)
                planar = False
                if len(corpus["kuratowski"]) < 200:
                    corpus["kuratowski"].append((g, cert))
            else:
                assert verify_embedding(g, cert)
                planar = True
            assert planar == oracle_planar(g.vertices, g.edges)


def test_criterion_7_recognition(corpus, acceptance_report):
    yes = [hypercube(d) for d in range(6)] + [even_cycle(2 * n) for n in range(2, 11)]
    yes += [path(n) for n in range(1, 21)] + [random_tree(n, n) for n in range(1, 41)]
    no = {"NotBipartite": [cycle(5), complete_graph(4)], "ThetaNotTransitive": [complete_bipartite(2, 3)]}
    with criterion(acceptance_report, 7, "recognition suite", 10):
        for g in yes:
            lab = recognize_partial_cube(g)
            assert isinstance(lab, HypercubeLabeling) and verify_labeling(g, lab)
        for kind, gs in no.items():
            for g in gs:
                ref = recognize_partial_cube(g)
                assert ref.kind == kind and verify_refutation(g, ref)
                corpus["pc-refutation"].append((g, ref))


def test_criterion_8_cli(samples, corpus, tmp_path, capsys, acceptance_report):
    graphs = list(named_graphs(16).values()) + samples
    with criterion(acceptance_report, 8, "format round trips and CLI exit codes"):
        for g in graphs:
            g = Graph([g.name(v) for v in g.vertices], [(g.name(u), g.name(v)) for u, v in g.edges])
            text = format_graph(g, "g")
            assert parse_graph(text) == ("g", g) and format_graph(parse_graph(text)[1], "g") == text
        n_files = 0
        for h, cert in corpus["decomposition"]:
            text = write_certificate(cert)
            _, back, _ = read_certificate(text)
            assert write_certificate(back) == text and replay(back).m == h.m
            n_files += 1
        for kind in ("kuratowski", "pc-refutation"):
            for g, w in corpus[kind]:
                text = write_certificate(w, g)
                k, back, host = read_certificate(text)
                assert k == kind and write_certificate(back, host) == text
                assert (verify_kuratowski if kind == "kuratowski" else verify_refutation)(host, back)
                n_files += 1
        for w in corpus["flaw-witness"]:
            text = write_certificate(w)
            _, back, _ = read_certificate(text)
            assert write_certificate(back) == text and verify_flaw_witness(back)
            n_files += 1
        assert n_files >= SAMPLES

        def code(*argv):
            rc = main([str(a) for a in argv])
            capsys.readouterr()
            return rc

        q3, k23, bad = tmp_path / "q3.txt", tmp_path / "k23.txt", tmp_path / "bad.txt"
        cert = tmp_path / "q3.json"
        assert code("generate", "hypercube", 3, "-o", q3) == 0
        assert code("generate", "complete-bipartite", 2, 3, "-o", k23) == 0
        bad.write_text("graph g\na b c\n")
        assert code("certify", q3, "-o", cert) == 0
        assert code("replay", cert) == 0 and code("verify", cert) == 0
        assert code("certify", k23) == 1 and code("recognize", k23) == 1
        assert code("check-obstruction", q3) == 1
        assert code("planarity", bad) == 2 and code("replay", tmp_path / "none.json") == 2
        assert code("frobnicate") == 2
