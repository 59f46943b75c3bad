import pytest
from hypothesis import given, strategies as st

from conftest import partial_cubes
from planarcube.errors import EmptyIntersection, NotCovering, NotIsometric, NotPartialCube, UnknownClass
from planarcube.generators import SplitMix64, complete_bipartite, even_cycle, hypercube, named_graphs, path, sample_expansion_spec
from planarcube.graph import Copy, Graph, make_graph
from planarcube.ops import ExpansionSpec, contract_class, expand, matching_edges, one_step_minors, restrict
from planarcube.partial_cube import (
    HypercubeLabeling,
    is_partial_cube,
    recognize_partial_cube,
    theta_classes,
)


def shape(g):
    return g.n, g.m


class TestExpand:
    def test_k1_to_k2(self):
        g = make_graph(["v"], [])
        h = expand(ExpansionSpec(g, {"v"}, {"v"}))
        assert shape(h) == (2, 1)
        assert h.edges == ((Copy("v", 1), Copy("v", 2)),)

    def test_k2_to_c4(self):
        g = path(2)
        h = expand(ExpansionSpec(g, g.vertices, g.vertices))
        assert shape(h) == (4, 4) and all(h.degree(v) == 2 for v in h.vertices)

    def test_p3_to_p4(self):
        g = make_graph("abc", [("a", "b"), ("b", "c")])
        h = expand(ExpansionSpec(g, {"a", "b"}, {"b", "c"}))
        a1, b1, b2, c2 = Copy("a", 1), Copy("b", 1), Copy("b", 2), Copy("c", 2)
        assert set(h.vertices) == {a1, b1, b2, c2}
        assert {frozenset(e) for e in h.edges} == {frozenset(p) for p in ((a1, b1), (b1, b2), (b2, c2))}
        assert is_partial_cube(h)

    def test_not_covering_vertex(self):
        g = make_graph("abc", [("a", "b"), ("b", "c")])
        with pytest.raises(NotCovering):
            expand(ExpansionSpec(g, {"a"}, {"c"}))

    def test_not_covering_edge(self):
        g = make_graph("abc", [("a", "b"), ("b", "c")])
        with pytest.raises(NotCovering):
            expand(ExpansionSpec(g, {"a", "b"}, {"c", "a"}))

    def test_empty_intersection(self):
        g = make_graph("ab", [])
        with pytest.raises(EmptyIntersection):
            expand(ExpansionSpec(g, {"a"}, {"b"}))

    def test_not_isometric(self):
        g = even_cycle(6)
        v2 = {"0", "1", "2", "3", "4"}
        with pytest.raises(NotIsometric) as info:
            expand(ExpansionSpec(g, {"4", "5", "0"}, v2))
        assert info.value.side == 2

    def test_matching_is_new_class(self):
        g = hypercube(2)
        h = expand(ExpansionSpec(g, g.vertices, {"00", "01"}))
        tp = theta_classes(h)
        m = matching_edges(h)
        assert len(m) == 2
        assert any({frozenset(e) for e in c} == {frozenset(e) for e in m} for c in tp.classes)


class TestContract:
    def test_c4(self):
        for i in range(2):
            r = contract_class(even_cycle(4), None, i)
            assert shape(r.quotient) == (2, 1)

    def test_q3(self):
        g = hypercube(3)
        for i in range(3):
            q = contract_class(g, None, i).quotient
            assert shape(q) == (4, 4) and all(q.degree(v) == 2 for v in q.vertices)

    def test_k2(self):
        assert shape(contract_class(path(2), None, 0).quotient) == (1, 0)

    def test_rejects(self):
        with pytest.raises(NotPartialCube):
            contract_class(complete_bipartite(2, 3), None, 0)
        with pytest.raises(UnknownClass):
            contract_class(path(2), None, 1)

    def test_merged_names(self):
        r = contract_class(path(2), None, 0)
        (v,) = r.quotient.vertices
        assert r.quotient.name(v) == "0/0"


class TestRestrict:
    def test_c4(self):
        assert shape(restrict(even_cycle(4), None, 0, 1)) == (2, 1)

    def test_q3(self):
        for side in (1, 2):
            assert shape(restrict(hypercube(3), None, 1, side)) == (4, 4)

    def test_k2(self):
        assert shape(restrict(path(2), None, 0, 2)) == (1, 0)

    def test_rejects(self):
        with pytest.raises(UnknownClass):
            restrict(path(2), None, 3, 1)


class TestMinors:
    def test_k2(self):
        assert [shape(m) for m in one_step_minors(path(2))] == [(1, 0)] * 3

    def test_c4(self):
        ms = one_step_minors(even_cycle(4))
        assert len(ms) == 6 and all(shape(m) == (2, 1) for m in ms)

    def test_q4(self):
        ms = one_step_minors(hypercube(4))
        assert len(ms) == 12
        for m in ms:
            assert shape(m) == (8, 12) and len(theta_classes(m)) == 3

    def test_not_pc(self):
        with pytest.raises(NotPartialCube):
            one_step_minors(complete_bipartite(2, 3))


def _round_trip(h):
    tp = theta_classes(h)
    for i in range(len(tp)):
        r = contract_class(h, tp, i)
        spec = r.expansion_spec().validate()
        assert r.unlift(expand(spec)) == h
        assert len(theta_classes(r.quotient)) == len(tp) - 1
        assert len(r.matching) == len(tp.classes[i])


def test_round_trip_on_stock():
    for name, g in named_graphs(64).items():
        if g.n <= 64 and g.m and is_partial_cube(g):
            _round_trip(g)


@given(partial_cubes(max_steps=8, max_vertices=64))
def test_round_trip(h):
    if h.m:
        _round_trip(h)


@given(partial_cubes(max_steps=6), st.integers(0, 2**32))
def test_expansion_adds_one_class(g, seed):
    rng = SplitMix64(seed)
    for _ in range(20):
        spec = sample_expansion_spec(g, rng)
        if spec is not None:
            break
    else:
        return
    h = expand(spec)
    lab = recognize_partial_cube(h)
    assert isinstance(lab, HypercubeLabeling)
    assert lab.dim == (len(theta_classes(g)) if g.m else 0) + 1
    assert h.n == len(spec.v1) + len(spec.v2)
    tp = theta_classes(h)
    m = {frozenset(e) for e in matching_edges(h)}
    assert any({frozenset(e) for e in c} == m for c in tp.classes)


@given(partial_cubes(max_steps=6))
def test_minors_are_partial_cubes(h):
    if not h.m:
        return
    ms = one_step_minors(h)
    k = len(theta_classes(h))
    assert len(ms) == 3 * k
    for m in ms:
        assert is_partial_cube(m)
    for i in range(k):
        assert ms[3 * i].n > 0 and len(theta_classes(ms[3 * i])) == k - 1
        for r in ms[3 * i + 1 : 3 * i + 3]:
            assert (len(theta_classes(r)) if r.m else 0) <= k - 1


def test_expand_on_graph_without_edges():
    h = expand(ExpansionSpec(Graph(["x"]), {"x"}, {"x"}))
    assert h.name(h.vertices[0]) == "x.1"
