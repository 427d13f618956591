"""Vertex and edge switching of oriented hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import algebra as alg
from .constructions import (
    incidence_dual,
    intersection_graph,
    line_graph_sources,
    section_sources,
    strict_k_section,
)
from .hypercore import OrientedHypergraph, UnknownLabelError, check_sign, is_linear
from .report import LawReport


class CoverageError(KeyError):
    def __init__(self, kind: str, label: str):
        super().__init__(f"switching function has no value for {kind} {label!r}")
        self.kind = kind
        self.label = label

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class SwitchingPair:
    """Vertex switch ``zeta`` and edge switch ``xi``, both total maps to +/-1."""

    zeta: Mapping[str, int]
    xi: Mapping[str, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "zeta", {v: check_sign(s) for v, s in self.zeta.items()})
        object.__setattr__(self, "xi", {e: check_sign(s) for e, s in self.xi.items()})

    @classmethod
    def identity(cls, G: OrientedHypergraph) -> "SwitchingPair":
        return cls({v: 1 for v in G.vertices}, {e: 1 for e in G.edge_labels})

    @classmethod
    def random(cls, G: OrientedHypergraph, rng: np.random.Generator) -> "SwitchingPair":
        zs = rng.choice((1, -1), size=G.n) if G.n else []
        xs = rng.choice((1, -1), size=G.m) if G.m else []
        return cls(
            {v: int(s) for v, s in zip(G.vertices, zs)},
            {e: int(s) for e, s in zip(G.edge_labels, xs)},
        )

    def transposed(self) -> "SwitchingPair":
        """The same pair acting on the incidence dual (edge and vertex roles swapped)."""
        return SwitchingPair(self.xi, self.zeta)

    def check_covers(self, G: OrientedHypergraph) -> None:
        for v in G.vertices:
            if v not in self.zeta:
                raise CoverageError("vertex", v)
        for e in G.edge_labels:
            if e not in self.xi:
                raise CoverageError("edge", e)


def apply_switch(G: OrientedHypergraph, s: SwitchingPair) -> OrientedHypergraph:
    s.check_covers(G)
    return G.with_signs(lambda v, e, sign: s.zeta[v] * sign * s.xi[e])


def switch_diag_vertex(s: SwitchingPair, G: OrientedHypergraph) -> np.ndarray:
    s.check_covers(G)
    return np.diag(np.array([s.zeta[v] for v in G.vertices], dtype=np.int64)).reshape(G.n, G.n)


def switch_diag_edge(s: SwitchingPair, G: OrientedHypergraph) -> np.ndarray:
    s.check_covers(G)
    return np.diag(np.array([s.xi[e] for e in G.edge_labels], dtype=np.int64)).reshape(G.m, G.m)


def induced_section_switch(
    G: OrientedHypergraph, xi: Mapping[str, int], k: int = 2
) -> dict[str, int]:
    """Each strict k-section edge takes the switch value of its source edge."""
    for e in G.edge_labels:
        if e not in xi:
            raise CoverageError("edge", e)
    return {f: xi[e] for f, e in section_sources(G, k).items()}


def induced_linegraph_switch(G: OrientedHypergraph, zeta: Mapping[str, int]) -> dict[str, int]:
    """Each line-graph edge takes the switch value of the shared vertex."""
    for v in G.vertices:
        if v not in zeta:
            raise CoverageError("vertex", v)
    return {label: zeta[v] for label, (_, _, v) in line_graph_sources(G).items()}


def section_switch_pair(G: OrientedHypergraph, s: SwitchingPair) -> SwitchingPair:
    return SwitchingPair(s.zeta, induced_section_switch(G, s.xi))


def linegraph_switch_pair(G: OrientedHypergraph, s: SwitchingPair) -> SwitchingPair:
    return SwitchingPair(s.xi, induced_linegraph_switch(G, s.zeta))


def parse_assignments(text: str) -> dict[str, int]:
    """Parse ``a=-1,b=+1`` into a sign map."""
    out: dict[str, int] = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        label, eq, value = item.partition("=")
        if not eq or value not in ("-1", "+1", "1"):
            raise ValueError(f"bad switch assignment {item!r} (expected label=+1 or label=-1)")
        out[label] = int(value)
    return out


def total_switch(
    G: OrientedHypergraph, zeta: Mapping[str, int], xi: Mapping[str, int]
) -> SwitchingPair:
    """Extend partial maps with +1 after checking every listed label exists."""
    for v in zeta:
        if v not in G._vindex:
            raise UnknownLabelError("vertex", v)
    for e in xi:
        if e not in G._eindex:
            raise UnknownLabelError("edge", e)
    return SwitchingPair(
        {v: zeta.get(v, 1) for v in G.vertices}, {e: xi.get(e, 1) for e in G.edge_labels}
    )


def check_switch_matrices(G: OrientedHypergraph, s: SwitchingPair) -> LawReport:
    """Incidence, adjacency and Laplacian matrices of ``G`` and ``G*`` under switching."""
    s.check_covers(G)
    rep = LawReport("switch-matrices")
    Gs = apply_switch(G, s)
    D = incidence_dual(G)
    Ds = apply_switch(D, s.transposed())
    Dn, Dm = switch_diag_vertex(s, G), switch_diag_edge(s, G)
    H, A, L = alg.incidence_matrix(G), alg.adjacency_matrix(G), alg.laplacian_matrix(G)
    HD, AD, LD = alg.incidence_matrix(D), alg.adjacency_matrix(D), alg.laplacian_matrix(D)
    rep.check_equal("H(G^s) = Dn H(G) Dm", alg.incidence_matrix(Gs), Dn @ H @ Dm)
    rep.check_equal("A(G^s) = Dn A(G) Dn", alg.adjacency_matrix(Gs), Dn @ A @ Dn)
    rep.check_equal("L(G^s) = Dn L(G) Dn", alg.laplacian_matrix(Gs), Dn @ L @ Dn)
    rep.check_equal("H((G*)^s) = Dm H(G*) Dn", alg.incidence_matrix(Ds), Dm @ HD @ Dn)
    rep.check_equal("A((G*)^s) = Dm A(G*) Dm", alg.adjacency_matrix(Ds), Dm @ AD @ Dm)
    rep.check_equal("L((G*)^s) = Dm L(G*) Dm", alg.laplacian_matrix(Ds), Dm @ LD @ Dm)
    return rep.finish()


def check_switch_spectra(G: OrientedHypergraph, s: SwitchingPair) -> LawReport:
    s.check_covers(G)
    rep = LawReport("switch-spectra")
    Gs = apply_switch(G, s)
    D = incidence_dual(G)
    Ds = apply_switch(D, s.transposed())
    for name, build, X, Y in (
        ("A(G)", alg.adjacency_matrix, G, Gs),
        ("L(G)", alg.laplacian_matrix, G, Gs),
        ("A(G*)", alg.adjacency_matrix, D, Ds),
        ("L(G*)", alg.laplacian_matrix, D, Ds),
    ):
        a = alg.symmetric_eigenvalues(build(X))
        b = alg.symmetric_eigenvalues(build(Y))
        rep.check(f"spectrum of {name} unchanged by switching", alg.spectra_equal(a, b), before=a, after=b)
    return rep.finish()


def check_dual_switch_spectra(
    G: OrientedHypergraph, s1: SwitchingPair, s2: SwitchingPair
) -> LawReport:
    """Nonzero Laplacian spectra of ``G^s1`` and of the dual switched by ``s2``."""
    s1.check_covers(G)
    s2.check_covers(G)
    rep = LawReport("switch-dual-spectra")
    left = alg.symmetric_eigenvalues(alg.laplacian_matrix(apply_switch(G, s1)))
    right = alg.symmetric_eigenvalues(
        alg.laplacian_matrix(apply_switch(incidence_dual(G), s2.transposed()))
    )
    rep.check(
        "nonzero spectrum L(G^s1) = nonzero spectrum L((G*)^s2)",
        alg.nonzero_spectra_equal(left, right),
        left=left,
        right=right,
    )
    return rep.finish()


def check_switch_identities(
    G: OrientedHypergraph, s: SwitchingPair, s2: SwitchingPair | None = None
) -> LawReport:
    """Every matrix and spectral consequence of switching ``G`` by ``s``.

    ``s2`` is a second, independent pair for the nonzero-spectrum match between
    a switched ``G`` and a switched dual; it defaults to ``s``.
    """
    rep = LawReport("switching")
    rep.merge(check_switch_matrices(G, s))
    rep.merge(check_switch_spectra(G, s))
    rep.merge(check_dual_switch_spectra(G, s, s if s2 is None else s2))
    return rep.finish()


def check_induced_switchings(G: OrientedHypergraph, s: SwitchingPair) -> LawReport:
    """Duals, strict 2-sections and line graphs switch along with ``G``.

    The line-graph part needs ``G`` linear and is skipped otherwise.
    """
    s.check_covers(G)
    rep = LawReport("induced-switching")
    Gs = apply_switch(G, s)
    rep.check_same(
        "(G^(zeta,xi))* = (G*)^(xi,zeta)",
        incidence_dual(Gs),
        apply_switch(incidence_dual(G), s.transposed()),
    )
    rep.check_same(
        "[[G^(zeta,xi)]]_2 = [[G]]_2^(zeta,xi_hat)",
        strict_k_section(Gs, 2),
        apply_switch(strict_k_section(G, 2), section_switch_pair(G, s)),
    )
    if is_linear(G):
        rep.check_same(
            "Lambda(G^(zeta,xi)) = Lambda(G)^(xi,zeta_hat)",
            intersection_graph(Gs),
            apply_switch(intersection_graph(G), linegraph_switch_pair(G, s)),
        )
    return rep.finish()
