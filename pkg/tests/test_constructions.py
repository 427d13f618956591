import pytest
from hypothesis import given, strategies as st

from ohyper import constructions as c
from ohyper.constructions import EnlargementPlan, SignedGraph
from ohyper.generate import GeneratorConfig, generate
from ohyper.hypercore import (
    Edge,
    NotLinearError,
    OrientedHypergraph,
    PreconditionError,
    adjacencies,
    adjacency_sign,
    degree,
    is_linear,
    max_degree,
    uniformity,
)

from oracles import brute_dual, raw
from strategies import hypergraphs


def make(vertices, *edges):
    return OrientedHypergraph.from_edges(vertices, edges)


def test_dual_p3(p3):
    D = c.incidence_dual(p3)
    assert D.vertices == ("e1", "e2")
    assert [e.label for e in D.edges] == ["v1", "v2", "v3"]
    assert [e.vertices for e in D.edges] == [("e1",), ("e1", "e2"), ("e2",)]
    assert D.sign("e1", "v2") == 1
    assert D.sign("e2", "v3") == -1


def test_dual_edgeless():
    D = c.incidence_dual(make(["a", "b", "c"]))
    assert D.n == 0
    assert [len(e) for e in D.edges] == [0, 0, 0]


@given(hypergraphs())
def test_dual_matches_brute_force(G):
    D = c.incidence_dual(G)
    assert raw(D) == brute_dual(*raw(G))


@given(hypergraphs())
def test_dual_involution(G):
    assert c.incidence_dual(c.incidence_dual(G)) == G


def test_two_section_p3(p3):
    S = c.k_section(p3, 2)
    assert [e.label for e in S.edges] == ["e1|{v1,v2}", "e2|{v2,v3}"]
    assert [e.members for e in S.edges] == [e.members for e in p3.edges]
    assert [e.members for e in c.strict_k_section(p3, 2).edges] == [e.members for e in S.edges]


def test_section_of_three_edge():
    G = make(["a", "b", "c"], ("e", {"a": 1, "b": -1, "c": 1}))
    S = c.k_section(G, 2)
    assert [e.label for e in S.edges] == ["e|{a,b}", "e|{a,c}", "e|{b,c}"]
    for f in S.edges:
        for v, s in f.members:
            assert s == G.sign(v, "e")
    assert c.strict_k_section(G, 3).edges[0].members == G.edges[0].members


def test_section_keeps_small_edges_only_when_not_strict():
    G = make(["a"], ("e", {"a": -1}))
    assert [f.members for f in c.k_section(G, 2).edges] == [(("a", -1),)]
    assert c.strict_k_section(G, 2).m == 0
    with pytest.raises(ValueError):
        c.k_section(G, 0)


def test_section_keeps_duplicates_per_source_edge():
    G = make(["a", "b", "c"], ("e", {"a": 1, "b": 1, "c": 1}), ("f", {"a": 1, "b": 1}))
    S = c.strict_k_section(G, 2)
    assert sum(1 for e in S.edges if e.vertices == ("a", "b")) == 2
    assert c.section_sources(G, 2) == {
        "e|{a,b}": "e", "e|{a,c}": "e", "e|{b,c}": "e", "f|{a,b}": "f"
    }


def test_intersection_graph_p3(p3):
    L = c.intersection_graph(p3)
    assert L.vertices == ("e1", "e2")
    assert [e.label for e in L.edges] == ["e1~e2"]
    assert L.sign("e1", "e1~e2") == p3.sign("v2", "e1") == 1
    assert L.sign("e2", "e1~e2") == p3.sign("v2", "e2") == 1
    assert adjacency_sign(L, "e1~e2", "e1", "e2") == -1


def test_intersection_graph_disjoint():
    G = make(["a", "b", "c", "d"], ("e", {"a": 1, "b": 1}), ("f", {"c": 1, "d": -1}), ("g", {}))
    L = c.intersection_graph(G)
    assert L.vertices == ("e", "f", "g") and L.m == 0


def test_intersection_graph_rejects_nonlinear():
    G = make(["a", "b"], ("e", {"a": 1, "b": 1}), ("f", {"a": 1, "b": -1}))
    with pytest.raises(NotLinearError) as info:
        c.intersection_graph(G)
    assert info.value.pair == ("e", "f")


def linear_instances(n=60, **kw):
    return [generate(GeneratorConfig(seed=s, linear=True, **kw)) for s in range(n)]


@pytest.mark.parametrize("G", linear_instances(), ids=lambda G: f"n{G.n}m{G.m}")
def test_line_graph_is_strict_section_of_dual(G):
    assert c.same_up_to_edge_labels(
        c.intersection_graph(G), c.strict_k_section(c.incidence_dual(G), 2)
    )


@pytest.mark.parametrize("G", linear_instances(40, k_uniform=2), ids=lambda G: f"n{G.n}m{G.m}")
def test_line_graph_of_dual_of_signed_graph(G):
    assert c.same_up_to_edge_labels(c.intersection_graph(c.incidence_dual(G)), G)


@pytest.mark.parametrize("G", linear_instances(40, two_regular=True), ids=lambda G: f"n{G.n}m{G.m}")
def test_line_graph_of_two_regular_is_dual(G):
    assert c.same_up_to_edge_labels(c.intersection_graph(G), c.incidence_dual(G))


def test_enlarge_p3(p3):
    H3 = c.enlarge_edges(p3, 3)
    assert H3.vertices == ("v1", "v2", "v3", "e1.pad1", "e2.pad1")
    assert H3.edge("e1").members == (("v1", 1), ("v2", 1), ("e1.pad1", 1))
    assert H3.edge("e2").members == (("v2", 1), ("v3", -1), ("e2.pad1", 1))
    assert degree(H3, "e1.pad1") == 1
    assert c.enlarge_edges(p3, EnlargementPlan({"e1": 2, "e2": 2})) == p3


def test_enlarge_rejects_shrinking(p3):
    with pytest.raises(PreconditionError):
        c.enlarge_edges(p3, 1)
    with pytest.raises(PreconditionError):
        c.enlarge_edges(p3, EnlargementPlan({"e2": 1}))


def test_enlarge_max_degree_unchanged_on_original_vertices(p3):
    # H5 for the 2-uniform P3: the dual's edges grow, original duals keep degree
    D = c.incidence_dual(p3)
    H5 = c.enlarge_edges(D, 5)
    assert uniformity(H5) == 5
    assert [degree(H5, v) for v in D.vertices] == [degree(D, v) for v in D.vertices]
    assert max_degree(H5) == max_degree(D)


@pytest.mark.parametrize("G", linear_instances(30, k_uniform=2), ids=lambda G: f"n{G.n}m{G.m}")
def test_uniform_enlargement_keeps_line_graph(G):
    D = c.incidence_dual(G)
    for k in range(max_degree(G), max_degree(G) + 4):
        Hk = c.enlarge_edges(D, max(k, 1))
        assert is_linear(Hk) and uniformity(Hk) == max(k, 1)
        assert c.same_up_to_edge_labels(c.intersection_graph(Hk), G)


@given(hypergraphs(), st.data())
def test_enlargement_preserves_line_graph(G, data):
    if not is_linear(G):
        return
    plan = EnlargementPlan({e.label: len(e) + data.draw(st.integers(0, 3)) for e in G.edges})
    assert c.intersection_graph(c.enlarge_edges(G, plan)) == c.intersection_graph(G)


def test_orient_signed_graph_rule():
    pos = c.orient_signed_graph(SignedGraph(("v1", "v2"), (("e", ("v1", "v2"), 1),)))
    assert pos.edge("e").members == (("v1", 1), ("v2", -1))
    neg = c.orient_signed_graph(SignedGraph(("v1", "v2"), (("e", ("v2", "v1"), -1),)))
    assert neg.edge("e").members == (("v1", 1), ("v2", 1))


def test_positive_triangle_has_unsigned_adjacency():
    from ohyper.algebra import adjacency_matrix

    K3 = SignedGraph(("a", "b", "c"), (("ab", ("a", "b"), 1), ("ac", ("a", "c"), 1), ("bc", ("b", "c"), 1)))
    assert adjacency_matrix(c.orient_signed_graph(K3)).tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_signed_graph_must_be_simple():
    with pytest.raises(ValueError):
        SignedGraph(("a",), (("e", ("a", "a"), 1),))
    with pytest.raises(ValueError):
        SignedGraph(("a", "b"), (("e", ("a", "b"), 1), ("f", ("b", "a"), -1)))


@st.composite
def signed_graphs(draw):
    n = draw(st.integers(0, 6))
    vs = tuple(f"u{i}" for i in range(n))
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SignedGraph(vs, tuple((f"x{k}", p, draw(st.sampled_from((1, -1)))) for k, p in enumerate(chosen)))


@given(signed_graphs())
def test_orientation_round_trip(sigma):
    G = c.orient_signed_graph(sigma)
    assert is_linear(G)
    for e, (u, v) in adjacencies(G):
        assert adjacency_sign(G, e, u, v) == dict((l, s) for l, _, s in sigma.edges)[e]
    assert c.underlying_signed_graph(G) == sigma


def test_underlying_signed_graph_of_p3_line_graph(p3):
    sigma = c.underlying_signed_graph(c.intersection_graph(p3))
    assert sigma.edges == (("e1~e2", ("e1", "e2"), -1),)
    assert c.underlying_signed_graph(make(["a"])).edges == ()
    with pytest.raises(PreconditionError):
        c.underlying_signed_graph(make(["a", "b", "c"], ("e", {"a": 1, "b": 1, "c": 1})))
