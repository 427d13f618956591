"""Seeded random oriented hypergraphs and block designs for property checks."""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb
from typing import Optional

import numpy as np

from .designs import BlockDesign, complete_design, fano, validate_design
from .hypercore import Edge, OrientedHypergraph, is_linear, regularity, uniformity

MAX_ATTEMPTS = 10_000
_EDGE_RETRIES = 50


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    max_vertices: int = 10
    max_edges: int = 8
    min_edge_size: int = 0
    max_edge_size: Optional[int] = None
    linear: bool = False
    k_uniform: Optional[int] = None
    r_regular: Optional[int] = None
    two_regular: bool = False
    all_positive: bool = False

    @property
    def regular(self) -> Optional[int]:
        return 2 if self.two_regular else self.r_regular

    @property
    def size_cap(self) -> int:
        cap = self.max_vertices
        return cap if self.max_edge_size is None else min(cap, self.max_edge_size)

    def constraints(self) -> str:
        flags = []
        if self.linear:
            flags.append("linear")
        if self.k_uniform is not None:
            flags.append(f"kUniform({self.k_uniform})")
        if self.r_regular is not None:
            flags.append(f"rRegular({self.r_regular})")
        if self.two_regular:
            flags.append("twoRegular")
        if self.all_positive:
            flags.append("allPositive")
        return ", ".join(flags) or "none"

    def with_seed(self, seed: int) -> "GeneratorConfig":
        return replace(self, seed=seed)


def _uniform_regular_orders(cfg: GeneratorConfig) -> list[int]:
    k, r = cfg.k_uniform, cfg.regular
    out = []
    for n in range(max(k, 1), cfg.max_vertices + 1):
        if (n * r) % k:
            continue
        m = n * r // k
        if m > cfg.max_edges:
            continue
        if cfg.linear and m * comb(k, 2) > comb(n, 2):
            continue
        out.append(n)
    return out


def check_satisfiable(cfg: GeneratorConfig) -> None:
    """Reject constraint sets that no instance within the size limits can meet."""
    if cfg.max_vertices < 1 or cfg.max_edges < 1:
        raise GeneratorError("max_vertices and max_edges must be positive")
    if cfg.min_edge_size < 0 or cfg.min_edge_size > cfg.size_cap:
        raise GeneratorError(
            f"edge size range [{cfg.min_edge_size}, {cfg.size_cap}] is empty"
        )
    if cfg.two_regular and cfg.r_regular not in (None, 2):
        raise GeneratorError("twoRegular conflicts with rRegular(%d)" % cfg.r_regular)
    k, r = cfg.k_uniform, cfg.regular
    if k is not None and not (max(1, cfg.min_edge_size) <= k <= cfg.size_cap):
        raise GeneratorError(f"kUniform({k}) is outside the edge size range")
    if r is not None:
        if r < 1:
            raise GeneratorError(f"rRegular({r}) needs r >= 1")
        if r > cfg.max_edges:
            raise GeneratorError(f"rRegular({r}) needs at least {r} edges, max_edges={cfg.max_edges}")
        if k is not None and not _uniform_regular_orders(cfg):
            raise GeneratorError(
                f"no vertex count <= {cfg.max_vertices} gives n*{r} = m*{k} with m <= {cfg.max_edges}"
            )


def _choose(rng: np.random.Generator, pool: int, size: int) -> list[int]:
    return sorted(int(i) for i in rng.choice(pool, size=size, replace=False))


def _linear_with(sets: list[set], candidate: set) -> bool:
    return all(len(s & candidate) <= 1 for s in sets)


def _edges_by_edge(rng, cfg, n, m, sizes) -> Optional[list[set]]:
    """Each edge draws its own members; linearity enforced by redrawing an edge."""
    sets: list[set] = []
    for j in range(m):
        for _ in range(_EDGE_RETRIES):
            size = sizes[j] if sizes is not None else int(
                rng.integers(cfg.min_edge_size, min(n, cfg.size_cap) + 1)
            )
            cand = set(_choose(rng, n, size))
            if not cfg.linear or _linear_with(sets, cand):
                sets.append(cand)
                break
        else:
            return None
    return sets


def _edges_by_vertex(rng, cfg, n, m, capacity) -> Optional[list[set]]:
    """Each vertex joins ``r`` distinct edges (edge capacity ``k`` when uniform)."""
    r = cfg.regular
    sets: list[set] = [set() for _ in range(m)]
    for v in range(n):
        open_edges = [j for j in range(m) if capacity is None or len(sets[j]) < capacity]
        order = [open_edges[i] for i in rng.permutation(len(open_edges))]
        chosen: list[int] = []
        seen: set = set()
        for j in order:
            if cfg.linear and sets[j] & seen:
                continue
            chosen.append(j)
            seen |= sets[j]
            if len(chosen) == r:
                break
        if len(chosen) < r:
            return None
        for j in chosen:
            sets[j].add(v)
    return sets


def _draw(rng: np.random.Generator, cfg: GeneratorConfig) -> tuple[Optional[list[set]], int]:
    k, r = cfg.k_uniform, cfg.regular
    if r is not None and k is not None:
        orders = _uniform_regular_orders(cfg)
        n = orders[int(rng.integers(len(orders)))]
        return _edges_by_vertex(rng, cfg, n, n * r // k, capacity=k), n
    if r is not None:
        n = int(rng.integers(1, cfg.max_vertices + 1))
        m = int(rng.integers(r, cfg.max_edges + 1))
        return _edges_by_vertex(rng, cfg, n, m, capacity=None), n
    if k is not None:
        n = int(rng.integers(k, cfg.max_vertices + 1))
        m = int(rng.integers(1, cfg.max_edges + 1))
        return _edges_by_edge(rng, cfg, n, m, [k] * m), n
    n = int(rng.integers(max(1, cfg.min_edge_size), cfg.max_vertices + 1))
    m = int(rng.integers(0, cfg.max_edges + 1))
    return _edges_by_edge(rng, cfg, n, m, None), n


def satisfies(G: OrientedHypergraph, cfg: GeneratorConfig) -> bool:
    if G.n > cfg.max_vertices or G.m > cfg.max_edges:
        return False
    if any(not cfg.min_edge_size <= len(e) <= cfg.size_cap for e in G.edges):
        return False
    if cfg.linear and not is_linear(G):
        return False
    if cfg.k_uniform is not None and uniformity(G) != cfg.k_uniform:
        return False
    if cfg.regular is not None and regularity(G) != cfg.regular:
        return False
    if cfg.all_positive and any(s != 1 for e in G.edges for _, s in e.members):
        return False
    return True


def generate(cfg: GeneratorConfig) -> OrientedHypergraph:
    """Deterministic random instance for ``cfg.seed`` meeting every constraint flag.

    Candidates are drawn and rejected until one satisfies the constraints;
    ``GeneratorError`` is raised after 10,000 rejected candidates.
    """
    check_satisfiable(cfg)
    rng = np.random.default_rng(cfg.seed & (2**64 - 1))
    for _ in range(MAX_ATTEMPTS):
        sets, n = _draw(rng, cfg)
        if sets is None:
            continue
        vertices = tuple(f"v{i + 1}" for i in range(n))
        edges = []
        for j, members in enumerate(sets):
            ordered = sorted(members)
            signs = (
                [1] * len(ordered)
                if cfg.all_positive
                else [int(s) for s in rng.choice((1, -1), size=len(ordered))]
            )
            edges.append(Edge(f"e{j + 1}", tuple((vertices[i], s) for i, s in zip(ordered, signs))))
        G = OrientedHypergraph(vertices, tuple(edges))
        if satisfies(G, cfg):
            return G
    raise GeneratorError(
        f"no instance satisfying [{cfg.constraints()}] after {MAX_ATTEMPTS} attempts"
    )


def random_design(seed: int, max_points: int = 10) -> BlockDesign:
    """A BIBD with shuffled point and block order.

    Drawn from the Fano plane and the complete designs (all k-subsets of v
    points, at most 35 blocks) that fit in ``max_points``.
    """
    rng = np.random.default_rng(seed & (2**64 - 1))
    family = [("fano", 7, 3)] if max_points >= 7 else []
    family += [
        ("complete", v, k)
        for v in range(2, max_points + 1)
        for k in range(2, v + 1)
        if comb(v, k) <= 35
    ]
    if not family:
        raise GeneratorError("designs need at least 2 points")
    kind, v, k = family[int(rng.integers(len(family)))]
    base = fano() if kind == "fano" else complete_design(v, k, prefix="p")
    pts = [base.points[i] for i in rng.permutation(len(base.points))]
    order = rng.permutation(len(base.blocks))
    blocks = [base.blocks[i] for i in order]
    return validate_design(pts, blocks, [f"b{j + 1}" for j in range(len(blocks))])

