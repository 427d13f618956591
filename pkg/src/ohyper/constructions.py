"""Structure-to-structure operators on oriented hypergraphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Union

from .hypercore import (
    Edge,
    HypergraphError,
    OrientedHypergraph,
    PreconditionError,
    adjacency_sign,
    check_label,
    check_sign,
    require_linear,
    uniformity,
)


@dataclass(frozen=True)
class SignedGraph:
    """Simple signed graph; each edge is ``(label, (u, v), sign)`` with u before v."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, tuple[str, str], int], ...]

    def __post_init__(self) -> None:
        vertices = tuple(check_label(v, "vertex label") for v in self.vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise HypergraphError("duplicate vertex label in signed graph")
        labels, pairs, edges = set(), set(), []
        for label, (u, v), s in self.edges:
            check_label(label, "edge label")
            if label in labels:
                raise HypergraphError(f"duplicate edge label {label!r}")
            for w in (u, v):
                if w not in index:
                    raise HypergraphError(f"edge {label!r} uses unknown vertex {w!r}")
            if u == v:
                raise HypergraphError(f"edge {label!r} is a loop")
            pair = (u, v) if index[u] < index[v] else (v, u)
            if pair in pairs:
                raise HypergraphError(f"edge {label!r} repeats vertex pair {pair}")
            labels.add(label)
            pairs.add(pair)
            edges.append((label, pair, check_sign(s)))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))


@dataclass(frozen=True)
class EnlargementPlan:
    """Target size for every edge: one integer, or a per-edge map."""

    target: Union[int, Mapping[str, int]]

    def target_for(self, G: OrientedHypergraph, label: str) -> int:
        if isinstance(self.target, int):
            return self.target
        return self.target.get(label, len(G.edge(label)))


def incidence_dual(G: OrientedHypergraph) -> OrientedHypergraph:
    members: dict[str, list[tuple[str, int]]] = {v: [] for v in G.vertices}
    for e in G.edges:
        for v, s in e.members:
            members[v].append((e.label, s))
    return OrientedHypergraph(
        G.edge_labels, tuple(Edge(v, tuple(members[v])) for v in G.vertices)
    )


def section_label(edge: str, subset) -> str:
    return f"{edge}|{{{','.join(subset)}}}"


def _section_edges(G: OrientedHypergraph, k: int, keep_small: bool):
    if k < 1:
        raise PreconditionError(f"section order must be >= 1, got {k}")
    for e in G.edges:
        if len(e) >= k:
            for sub in combinations(e.members, k):
                yield e.label, Edge(section_label(e.label, [v for v, _ in sub]), sub)
        elif keep_small:
            yield e.label, Edge(section_label(e.label, e.vertices), e.members)


def _section(G: OrientedHypergraph, k: int, keep_small: bool) -> OrientedHypergraph:
    return OrientedHypergraph(G.vertices, tuple(f for _, f in _section_edges(G, k, keep_small)))


def k_section(G: OrientedHypergraph, k: int) -> OrientedHypergraph:
    """One edge per (source edge, k-subset), plus source edges smaller than k."""
    return _section(G, k, keep_small=True)


def strict_k_section(G: OrientedHypergraph, k: int) -> OrientedHypergraph:
    return _section(G, k, keep_small=False)


def section_sources(G: OrientedHypergraph, k: int, strict: bool = True) -> dict[str, str]:
    """Map each k-section edge label back to the label of the edge it came from."""
    return {f.label: e for e, f in _section_edges(G, k, keep_small=not strict)}


def line_label(e: str, f: str) -> str:
    return f"{e}~{f}"


def line_graph_sources(G: OrientedHypergraph) -> dict[str, tuple[str, str, str]]:
    """Map each intersection-graph edge label to ``(ei, ej, shared vertex)``."""
    require_linear(G)
    out = {}
    sets = [set(e.vertices) for e in G.edges]
    for i, j in combinations(range(G.m), 2):
        shared = sets[i] & sets[j]
        if shared:
            ei, ej = G.edges[i].label, G.edges[j].label
            out[line_label(ei, ej)] = (ei, ej, shared.pop())
    return out


def intersection_graph(G: OrientedHypergraph) -> OrientedHypergraph:
    """Line graph of a linear oriented hypergraph.

    Vertices are the edges of ``G``; intersecting edges ``ei``, ``ej`` (in edge
    order) give an edge ``ei~ej`` whose incidence signs are those of the shared
    vertex in ``G``.
    """
    sources = line_graph_sources(G)
    edges = []
    for label, (ei, ej, v) in sources.items():
        edges.append(Edge(label, ((ei, G.sign(v, ei)), (ej, G.sign(v, ej)))))
    return OrientedHypergraph(G.edge_labels, tuple(edges))


def pad_label(edge: str, k: int) -> str:
    return f"{edge}.pad{k}"


def enlarge_edges(G: OrientedHypergraph, plan: EnlargementPlan | int) -> OrientedHypergraph:
    """Pad edges with fresh degree-1 vertices, all incidences signed +1."""
    if isinstance(plan, int):
        plan = EnlargementPlan(plan)
    vertices = list(G.vertices)
    taken = set(vertices)
    edges = []
    for e in G.edges:
        target = plan.target_for(G, e.label)
        if target < len(e):
            raise PreconditionError(
                f"edge {e.label!r} has size {len(e)}, above its target {target}"
            )
        pads = []
        for k in range(1, target - len(e) + 1):
            p = pad_label(e.label, k)
            if p in taken:
                raise HypergraphError(f"padding vertex {p!r} collides with an existing vertex")
            taken.add(p)
            pads.append((p, 1))
        vertices.extend(p for p, _ in pads)
        edges.append(Edge(e.label, e.members + tuple(pads)))
    return OrientedHypergraph(tuple(vertices), tuple(edges))


def orient_signed_graph(sigma: SignedGraph) -> OrientedHypergraph:
    """Canonical orientation: earlier endpoint +1, later endpoint -sign."""
    return OrientedHypergraph(
        sigma.vertices,
        tuple(Edge(label, ((u, 1), (v, -s))) for label, (u, v), s in sigma.edges),
    )


def underlying_signed_graph(G: OrientedHypergraph) -> SignedGraph:
    if G.m and uniformity(G) != 2:
        raise PreconditionError("underlying signed graph needs a 2-uniform hypergraph")
    require_linear(G)
    return SignedGraph(
        G.vertices,
        tuple(
            (e.label, e.vertices, adjacency_sign(G, e.label, *e.vertices))
            for e in G.edges
        ),
    )


def edge_multiset(G: OrientedHypergraph) -> Counter:
    return Counter(e.members for e in G.edges)


def same_up_to_edge_labels(G1: OrientedHypergraph, G2: OrientedHypergraph) -> bool:
    """Equal vertex lists and equal multisets of signed edge memberships."""
    return G1.vertices == G2.vertices and edge_multiset(G1) == edge_multiset(G2)
