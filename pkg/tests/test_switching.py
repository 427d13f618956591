import numpy as np
import pytest
from hypothesis import given, settings

from ohyper import algebra as alg
from ohyper.constructions import incidence_dual, intersection_graph, strict_k_section
from ohyper.hypercore import OrientedHypergraph, UnknownLabelError, is_linear
from ohyper.switching import (
    CoverageError,
    SwitchingPair,
    apply_switch,
    check_induced_switchings,
    check_switch_identities,
    check_switch_matrices,
    induced_linegraph_switch,
    induced_section_switch,
    parse_assignments,
    total_switch,
)

from oracles import brute_adjacency, raw
from strategies import switched


def test_vertex_switch_p3(p3):
    s = total_switch(p3, {"v2": -1}, {})
    G = apply_switch(p3, s)
    assert G.edge("e1").members == (("v1", 1), ("v2", -1))
    assert G.edge("e2").members == (("v2", -1), ("v3", -1))
    assert alg.adjacency_matrix(G).tolist() == brute_adjacency(*raw(G)) == [[0, 1, 0], [1, 0, -1], [0, -1, 0]]


def test_edge_switch_keeps_adjacency(p3):
    G = apply_switch(p3, total_switch(p3, {}, {"e2": -1}))
    assert G.edge("e2").members == (("v2", -1), ("v3", 1))
    assert alg.mat_eq(alg.adjacency_matrix(G), alg.adjacency_matrix(p3))


def test_identity_switch(p3):
    assert apply_switch(p3, SwitchingPair.identity(p3)) == p3


def test_incomplete_switch_rejected(p3):
    with pytest.raises(CoverageError, match="vertex 'v3'"):
        apply_switch(p3, SwitchingPair({"v1": 1, "v2": 1}, {"e1": 1, "e2": 1}))
    with pytest.raises(CoverageError, match="edge 'e2'"):
        induced_section_switch(p3, {"e1": 1})


def test_bad_switch_values():
    with pytest.raises(Exception):
        SwitchingPair({"v": 0}, {})
    with pytest.raises(ValueError):
        parse_assignments("a=2")
    with pytest.raises(ValueError):
        parse_assignments("a")
    assert parse_assignments(" a=-1, b=+1,c=1 ") == {"a": -1, "b": 1, "c": 1}
    assert parse_assignments("") == {}


def test_total_switch_unknown_label(p3):
    with pytest.raises(UnknownLabelError):
        total_switch(p3, {"zz": -1}, {})
    with pytest.raises(UnknownLabelError):
        total_switch(p3, {}, {"v1": -1})


def test_induced_maps(p3):
    G = OrientedHypergraph.from_edges(["a", "b", "c"], [("e", {"a": 1, "b": -1, "c": 1}), ("f", {"c": 1})])
    assert induced_section_switch(G, {"e": -1, "f": 1}) == {"e|{a,b}": -1, "e|{a,c}": -1, "e|{b,c}": -1}
    assert induced_linegraph_switch(p3, {"v1": 1, "v2": -1, "v3": 1}) == {"e1~e2": -1}


def test_report_flags_a_wrong_identity(p3, monkeypatch):
    import ohyper.switching as sw

    real = sw.apply_switch
    monkeypatch.setattr(sw, "apply_switch", lambda G, s: real(G, SwitchingPair.identity(G)))
    rep = check_switch_matrices(p3, total_switch(p3, {"v2": -1}, {}))
    assert not rep.passed
    assert "FAIL H(G^s) = Dn H(G) Dm" in rep.render()


@settings(max_examples=150)
@given(switched())
def test_switching_identities(case):
    G, s = case
    rep = check_switch_identities(G, s)
    assert rep.passed, rep.render()


@given(switched())
def test_induced_switchings(case):
    G, s = case
    rep = check_induced_switchings(G, s)
    assert rep.passed, rep.render()
    assert len(rep.checks) == (3 if is_linear(G) else 2)


@given(switched())
def test_switch_is_involution(case):
    G, s = case
    assert apply_switch(apply_switch(G, s), s) == G


@given(switched())
def test_switch_commutes_with_dual_and_section(case):
    G, s = case
    Gs = apply_switch(G, s)
    assert incidence_dual(Gs) == apply_switch(incidence_dual(G), s.transposed())
    assert strict_k_section(Gs, 2) == apply_switch(
        strict_k_section(G, 2), SwitchingPair(s.zeta, induced_section_switch(G, s.xi))
    )
    if is_linear(G):
        assert intersection_graph(Gs) == apply_switch(
            intersection_graph(G), SwitchingPair(s.xi, induced_linegraph_switch(G, s.zeta))
        )


@given(switched())
def test_laplacian_conjugation_brute(case):
    G, s = case
    Dn = np.diag([s.zeta[v] for v in G.vertices]).reshape(G.n, G.n)
    lhs = np.array(brute_adjacency(*raw(apply_switch(G, s))), dtype=np.int64).reshape(G.n, G.n)
    rhs = Dn @ np.array(brute_adjacency(*raw(G)), dtype=np.int64).reshape(G.n, G.n) @ Dn
    assert (lhs == rhs).all()
