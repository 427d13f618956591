"""Balanced incomplete block designs as all-positive oriented hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from . import algebra as alg
from .hypercore import Edge, OrientedHypergraph, check_label
from .report import LawReport


class DesignError(ValueError):
    """The point/block system is not a BIBD; the message names the first violation."""


@dataclass(frozen=True)
class Params:
    v: int
    b: int
    r: int
    k: int
    lam: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.v, self.b, self.r, self.k, self.lam)


@dataclass(frozen=True)
class BlockDesign:
    points: tuple[str, ...]
    blocks: tuple[tuple[str, ...], ...]
    params: Params
    block_labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.block_labels:
            object.__setattr__(
                self, "block_labels", tuple(f"b{j}" for j in range(len(self.blocks)))
            )


def validate_design(
    points: Sequence[str],
    blocks: Sequence[Sequence[str]],
    block_labels: Sequence[str] = (),
    expected: Optional[Params] = None,
) -> BlockDesign:
    """Infer (v, b, r, k, lambda) by counting and check every BIBD condition.

    Raises ``DesignError`` naming the first offending block, point or pair.
    """
    points = tuple(check_label(p, "point label") for p in points)
    if not points:
        raise DesignError("a design needs at least one point")
    index = {p: i for i, p in enumerate(points)}
    if len(index) != len(points):
        raise DesignError("duplicate point label")
    if block_labels and len(block_labels) != len(blocks):
        raise DesignError("block label count does not match block count")
    labels = tuple(check_label(b, "block label") for b in block_labels) or tuple(
        f"b{j}" for j in range(len(blocks))
    )
    if len(set(labels)) != len(labels):
        raise DesignError("duplicate block label")
    if not blocks:
        raise DesignError("a design needs at least one block")

    canon = []
    for label, block in zip(labels, blocks):
        for p in block:
            if p not in index:
                raise DesignError(f"block {label} uses unknown point {p!r}")
        if len(set(block)) != len(block):
            raise DesignError(f"block {label} repeats a point")
        canon.append(tuple(sorted(block, key=index.__getitem__)))

    k = len(canon[0])
    for label, block in zip(labels, canon):
        if len(block) != k:
            raise DesignError(
                f"block {label} has size {len(block)}, block {labels[0]} has size {k}"
            )

    pair_counts = {
        (x, y): sum(1 for block in canon if x in block and y in block)
        for x, y in combinations(points, 2)
    }
    if pair_counts:
        lo = min(pair_counts, key=pair_counts.__getitem__)
        hi = max(pair_counts, key=pair_counts.__getitem__)
        if pair_counts[lo] != pair_counts[hi]:
            raise DesignError(
                f"pair {{{lo[0]}, {lo[1]}}} lies in {pair_counts[lo]} blocks but pair "
                f"{{{hi[0]}, {hi[1]}}} lies in {pair_counts[hi]}"
            )
        lam = pair_counts[lo]
    else:
        lam = 0

    replication = {p: 0 for p in points}
    for block in canon:
        for p in block:
            replication[p] += 1
    r = replication[points[0]]
    for p in points:
        if replication[p] != r:
            raise DesignError(
                f"point {p} lies in {replication[p]} blocks, point {points[0]} in {r}"
            )

    params = Params(len(points), len(canon), r, k, lam)
    if params.b * k != params.v * r or lam * (params.v - 1) != r * (k - 1):
        raise DesignError(f"parameters {params.as_tuple()} violate bk = vr or lambda(v-1) = r(k-1)")
    if expected is not None and expected != params:
        raise DesignError(
            f"declared parameters {expected.as_tuple()} differ from counted {params.as_tuple()}"
        )
    return BlockDesign(points, tuple(canon), params, labels)


def design_incidence_matrix(D: BlockDesign) -> np.ndarray:
    index = {p: i for i, p in enumerate(D.points)}
    C = np.zeros((len(D.points), len(D.blocks)), dtype=np.int64)
    for j, block in enumerate(D.blocks):
        for p in block:
            C[index[p], j] = 1
    return C


def design_to_hypergraph(D: BlockDesign) -> OrientedHypergraph:
    return OrientedHypergraph(
        D.points,
        tuple(
            Edge(label, tuple((p, 1) for p in block))
            for label, block in zip(D.block_labels, D.blocks)
        ),
    )


def gram_target(n: int, r: int, lam: int) -> np.ndarray:
    """``(r - lambda) I + lambda J`` of order ``n``."""
    return (r - lam) * alg.identity(n) + lam * alg.ones(n)


def check_design_identity(D: BlockDesign) -> LawReport:
    v, _, r, _, lam = D.params.as_tuple()
    rep = LawReport("bibd")
    target = gram_target(v, r, lam)
    G = design_to_hypergraph(D)
    H = alg.incidence_matrix(G)
    C = design_incidence_matrix(D)
    rep.check_equal("L(G) = H H^T", alg.laplacian_matrix(G), H @ H.T)
    rep.check_equal("L(G) = (r-lambda)I + lambda J", alg.laplacian_matrix(G), target)
    rep.check_equal("C C^T = (r-lambda)I + lambda J", C @ C.T, target)
    rep.check_equal("C = H(G)", C, H)
    return rep.finish()


def fano() -> BlockDesign:
    """Projective plane of order 2: blocks {i, i+1, i+3} mod 7."""
    points = tuple(str(i) for i in range(7))
    blocks = [[str((i + d) % 7) for d in (0, 1, 3)] for i in range(7)]
    return validate_design(points, blocks, tuple(f"b{i}" for i in range(7)))


def complete_design(v: int, k: int, prefix: str = "") -> BlockDesign:
    """All k-subsets of v points; a BIBD whenever 2 <= k <= v."""
    points = tuple(f"{prefix}{i}" for i in range(v))
    return validate_design(points, list(combinations(points, k)))
