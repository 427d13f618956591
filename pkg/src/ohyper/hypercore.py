"""Immutable value model for oriented hypergraphs.

Vertex and edge order is part of the value: it fixes the row and column
indexing of every matrix built from a hypergraph.  Only simple hypergraphs
can be constructed (each vertex of an edge is incident to it exactly once).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

PLUS = 1
MINUS = -1
SIGNS = (PLUS, MINUS)


class HypergraphError(ValueError):
    """Malformed hypergraph input (bad label, simplicity violation, ...)."""


class UnknownLabelError(KeyError):
    """A vertex or edge label is not part of the hypergraph."""

    def __init__(self, kind: str, label: str):
        super().__init__(f"unknown {kind} {label!r}")
        self.kind = kind
        self.label = label

    def __str__(self) -> str:
        return self.args[0]


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class NotLinearError(PreconditionError):
    def __init__(self, e: str, f: str, shared: tuple[str, ...]):
        super().__init__(
            f"hypergraph is not linear: edges {e!r} and {f!r} share "
            f"{len(shared)} vertices ({', '.join(shared)})"
        )
        self.pair = (e, f)
        self.shared = shared


def check_sign(s: int) -> int:
    if s not in SIGNS:
        raise HypergraphError(f"sign must be +1 or -1, got {s!r}")
    return int(s)


def check_label(label: str, kind: str = "label") -> str:
    if not isinstance(label, str) or not label:
        raise HypergraphError(f"{kind} must be a nonempty string")
    if any(ch.isspace() for ch in label) or ":" in label or "#" in label or label == "=":
        raise HypergraphError(f"{kind} {label!r} contains whitespace, ':' or '#'")
    return label


class Incidence(NamedTuple):
    vertex: str
    edge: str
    sign: int


class Adjacency(NamedTuple):
    edge: str
    pair: tuple[str, str]


@dataclass(frozen=True)
class Edge:
    """A labelled edge: ``members`` holds ``(vertex, sign)`` pairs."""

    label: str
    members: tuple[tuple[str, int], ...] = ()

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrientedHypergraph:
    """A simple oriented hypergraph.

    Edge members are stored in vertex order, so two hypergraphs with the same
    labels, orders and incidence signs compare equal.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _vindex: Mapping[str, int] = field(init=False, repr=False, compare=False)
    _eindex: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        vertices = tuple(check_label(v, "vertex label") for v in self.vertices)
        vindex: dict[str, int] = {}
        for i, v in enumerate(vertices):
            if v in vindex:
                raise HypergraphError(f"duplicate vertex label {v!r}")
            vindex[v] = i

        edges = []
        eindex: dict[str, int] = {}
        for j, e in enumerate(self.edges):
            check_label(e.label, "edge label")
            if e.label in eindex:
                raise HypergraphError(f"duplicate edge label {e.label!r}")
            eindex[e.label] = j
            seen = set()
            for v, s in e.members:
                if v not in vindex:
                    raise UnknownLabelError("vertex", v)
                if v in seen:
                    raise HypergraphError(
                        f"vertex {v!r} is incident to edge {e.label!r} more than once"
                    )
                seen.add(v)
                check_sign(s)
            members = tuple(sorted(((v, int(s)) for v, s in e.members), key=lambda m: vindex[m[0]]))
            edges.append(Edge(e.label, members))

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_vindex", vindex)
        object.__setattr__(self, "_eindex", eindex)

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, Mapping[str, int] | Iterable[tuple[str, int]]]],
    ) -> "OrientedHypergraph":
        """Build from ``(label, members)`` where members is a dict or pair list."""
        built = []
        for label, members in edges:
            items = members.items() if isinstance(members, Mapping) else members
            built.append(Edge(label, tuple(items)))
        return cls(tuple(vertices), tuple(built))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    def vertex_index(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise UnknownLabelError("vertex", v) from None

    def edge_index(self, e: str) -> int:
        try:
            return self._eindex[e]
        except KeyError:
            raise UnknownLabelError("edge", e) from None

    def edge(self, e: str) -> Edge:
        return self.edges[self.edge_index(e)]

    def incidences(self) -> Iterator[Incidence]:
        for e in self.edges:
            for v, s in e.members:
                yield Incidence(v, e.label, s)

    @cached_property
    def _signs(self) -> dict[tuple[str, str], int]:
        return {(i.vertex, i.edge): i.sign for i in self.incidences()}

    def sign(self, v: str, e: str) -> int:
        """Incidence orientation of ``(v, e)``."""
        try:
            return self._signs[(v, e)]
        except KeyError:
            self.vertex_index(v)
            self.edge_index(e)
            raise UnknownLabelError("incidence", f"({v}, {e})") from None

    def with_signs(self, sign_of) -> "OrientedHypergraph":
        """Same underlying hypergraph with signs ``sign_of(v, e, old_sign)``."""
        return OrientedHypergraph(
            self.vertices,
            tuple(
                Edge(e.label, tuple((v, sign_of(v, e.label, s)) for v, s in e.members))
                for e in self.edges
            ),
        )


def degree(G: OrientedHypergraph, v: str) -> int:
    G.vertex_index(v)
    return sum(1 for e in G.edges for u, _ in e.members if u == v)


def degrees(G: OrientedHypergraph) -> list[int]:
    d = [0] * G.n
    for e in G.edges:
        for v, _ in e.members:
            d[G.vertex_index(v)] += 1
    return d


def max_degree(G: OrientedHypergraph) -> int:
    if G.n == 0:
        raise PreconditionError("maximum degree of a hypergraph with no vertices")
    return max(degrees(G))


def edge_size(G: OrientedHypergraph, e: str) -> int:
    return len(G.edge(e))


def rank(G: OrientedHypergraph) -> int:
    return max((len(e) for e in G.edges), default=0)


def is_linear(G: OrientedHypergraph) -> bool:
    return first_nonlinear_pair(G) is None


def first_nonlinear_pair(G: OrientedHypergraph) -> Optional[tuple[str, str, tuple[str, ...]]]:
    sets = [set(e.vertices) for e in G.edges]
    for i, j in combinations(range(G.m), 2):
        shared = sets[i] & sets[j]
        if len(shared) > 1:
            ordered = tuple(sorted(shared, key=G.vertex_index))
            return G.edges[i].label, G.edges[j].label, ordered
    return None


def require_linear(G: OrientedHypergraph) -> None:
    bad = first_nonlinear_pair(G)
    if bad is not None:
        raise NotLinearError(*bad)


def uniformity(G: OrientedHypergraph) -> Optional[int]:
    """Common edge size, or None (no edges, mixed sizes, or all edges empty)."""
    sizes = {len(e) for e in G.edges}
    if len(sizes) != 1:
        return None
    k = sizes.pop()
    return k or None


def regularity(G: OrientedHypergraph) -> Optional[int]:
    ds = set(degrees(G))
    if len(ds) != 1:
        return None
    r = ds.pop()
    return r or None


def adjacency_sign(G: OrientedHypergraph, e: str, vi: str, vj: str) -> int:
    if vi == vj:
        raise PreconditionError(f"adjacency needs two distinct vertices, got {vi!r} twice")
    return -G.sign(vi, e) * G.sign(vj, e)


def adjacencies(G: OrientedHypergraph) -> list[Adjacency]:
    return [
        Adjacency(e.label, (u, v))
        for e in G.edges
        for u, v in combinations(e.vertices, 2)
    ]


def adjacency_count(G: OrientedHypergraph) -> int:
    return sum(comb(len(e), 2) for e in G.edges)
