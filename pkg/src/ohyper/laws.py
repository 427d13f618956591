"""Registry of checkable laws and the seeded verification harness.

Each law has a hypothesis test, a check, and a generator preset used to draw
random instances that are likely to meet the hypothesis.  ``check_law`` runs
one law on one instance; ``run_trials`` draws instances until ``trials`` of
them meet the hypothesis (at most ``100 * trials`` draws).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from . import algebra as alg
from .constructions import (
    enlarge_edges,
    incidence_dual,
    intersection_graph,
    k_section,
    line_label,
    same_up_to_edge_labels,
    strict_k_section,
)
from .designs import (
    DesignError,
    check_design_identity,
    design_incidence_matrix,
    design_to_hypergraph,
    gram_target,
    validate_design,
)
from .generate import GeneratorConfig, GeneratorError, generate, random_design
from .hypercore import (
    OrientedHypergraph,
    degrees,
    first_nonlinear_pair,
    is_linear,
    max_degree,
    regularity,
    uniformity,
)
from .io import serialize_ohg
from .report import LawReport
from .switching import (
    SwitchingPair,
    check_dual_switch_spectra,
    check_induced_switchings,
    check_switch_matrices,
    check_switch_spectra,
)

EIG_TOL = 1e-8


class UnknownLawError(KeyError):
    def __str__(self) -> str:
        return f"unknown law {self.args[0]!r}; known laws: {', '.join(LAWS)}"


@dataclass(frozen=True)
class Law:
    law_id: str
    hypothesis: Callable[[OrientedHypergraph], Optional[str]]
    check: Callable[[OrientedHypergraph, np.random.Generator, LawReport], None]
    preset: Callable[[np.random.Generator, GeneratorConfig], GeneratorConfig]
    designs: bool = False


LAWS: dict[str, Law] = {}


def _law(law_id, hypothesis=None, preset=None, designs=False):
    def register(fn):
        LAWS[law_id] = Law(
            law_id,
            hypothesis or (lambda G: None),
            fn,
            preset or (lambda rng, cfg: cfg),
            designs,
        )
        return fn

    return register


# hypotheses: return None when met, else the reason


def _linear(G):
    bad = first_nonlinear_pair(G)
    if bad is not None:
        return f"not linear: edges {bad[0]} and {bad[1]} share {len(bad[2])} vertices"
    return None


def _uniform(G):
    return None if uniformity(G) is not None else "not k-uniform"


def _regular(G):
    return None if regularity(G) is not None else "not r-regular"


def _all_of(*tests):
    def hyp(G):
        for t in tests:
            reason = t(G)
            if reason:
                return reason
        return None

    return hyp


def _two_uniform(G):
    return None if uniformity(G) == 2 else "not 2-uniform"


def _two_regular(G):
    return None if regularity(G) == 2 else "not 2-regular"


def _as_design(G: OrientedHypergraph):
    if any(s != 1 for e in G.edges for _, s in e.members):
        raise DesignError("some incidence is signed -1")
    return validate_design(G.vertices, [e.vertices for e in G.edges], G.edge_labels)


def _design_hyp(G):
    try:
        _as_design(G)
    except DesignError as exc:
        return f"not an all-positive balanced design: {exc}"
    return None


def _trace_gap_hyp(G):
    reason = _linear(G)
    if reason:
        return reason
    if regularity(G) == 2:
        return "2-regular"
    if sum(degrees(incidence_dual(G))) == sum(degrees(intersection_graph(G))):
        return "degree sums of the dual and the line graph are equal"
    return None


# presets for random trials


def _with(**kw):
    return lambda rng, cfg: replace(cfg, **kw)


def _pick(options, key, extra=None):
    def preset(rng, cfg):
        limit = cfg.max_vertices if key == "k_uniform" else cfg.max_edges
        usable = [x for x in options if x <= limit] or [min(options)]
        value = usable[int(rng.integers(len(usable)))]
        return replace(cfg, **{key: value}, **(extra or {}))

    return preset


# law bodies


@_law("lemma-2.1")
def _(G, rng, rep):
    rep.check_equal(
        "H(G*) = H(G)^T", alg.incidence_matrix(incidence_dual(G)), alg.incidence_matrix(G).T
    )


@_law("lemma-2.2")
def _(G, rng, rep):
    H = alg.incidence_matrix(G)
    D = incidence_dual(G)
    rep.check_equal("L(G) = D(G) - A(G)", alg.laplacian_matrix(G), alg.degree_matrix(G) - alg.adjacency_matrix(G))
    rep.check_equal("L(G) = H H^T", alg.laplacian_matrix(G), alg.mat_mul(H, H.T))
    rep.check_equal("L(G*) = D(G*) - A(G*)", alg.laplacian_matrix(D), alg.degree_matrix(D) - alg.adjacency_matrix(D))
    rep.check_equal("L(G*) = H^T H", alg.laplacian_matrix(D), alg.mat_mul(H.T, H))


def _edges_by_label(G):
    return {e.label: e.members for e in G.edges}


@_law("theorem-3.1", hypothesis=_linear, preset=_with(linear=True))
def _(G, rng, rep):
    line = intersection_graph(G)
    section = strict_k_section(incidence_dual(G), 2)
    relabelled = {line_label(*(u for u, _ in f.members)): f.members for f in section.edges}
    rep.check("Lambda(G) and [[G*]]_2 share vertices", line.vertices == section.vertices)
    rep.check(
        "Lambda(G) = [[G*]]_2 (edges relabelled ei~ej)",
        len(relabelled) == section.m and _edges_by_label(line) == relabelled,
        line_graph=line,
        strict_section=section,
    )


@_law("corollary-3.3", hypothesis=_all_of(_linear, _two_uniform), preset=_with(linear=True, k_uniform=2))
def _(G, rng, rep):
    D = incidence_dual(G)
    rep.check("Lambda(G*) = G up to edge labels", same_up_to_edge_labels(intersection_graph(D), G),
              line_graph=intersection_graph(D))
    # enlarging G* to any k >= max degree keeps G as the line graph
    if G.n:
        for k in (max(max_degree(G), 1), max_degree(G) + 1, max_degree(G) + 3):
            Hk = enlarge_edges(D, k)
            rep.check(
                f"Lambda(H_{k}) = G for the {k}-uniform enlargement of G*",
                uniformity(Hk) == k and is_linear(Hk)
                and same_up_to_edge_labels(intersection_graph(Hk), G),
                enlarged=Hk,
            )


@_law("corollary-3.7", hypothesis=_all_of(_linear, _two_regular), preset=_with(linear=True, two_regular=True))
def _(G, rng, rep):
    line, D = intersection_graph(G), incidence_dual(G)
    rep.check("Lambda(G) = G* up to edge labels", same_up_to_edge_labels(line, D), line_graph=line, dual=D)


@_law("theorem-4.1")
def _(G, rng, rep):
    A = alg.adjacency_matrix(G)
    rep.check_equal("A(G) = A([[G]]_2)", A, alg.adjacency_matrix(strict_k_section(G, 2)))
    rep.check_equal("A(G) = A([G]_2)", A, alg.adjacency_matrix(k_section(G, 2)))


@_law("corollary-4.2", hypothesis=_linear, preset=_with(linear=True))
def _(G, rng, rep):
    rep.check_equal(
        "A(G*) = A(Lambda(G))",
        alg.adjacency_matrix(incidence_dual(G)),
        alg.adjacency_matrix(intersection_graph(G)),
    )


@_law("lemma-4.3", hypothesis=_uniform, preset=_pick((1, 2, 3, 4), "k_uniform"))
def _(G, rng, rep):
    k = uniformity(G)
    H, D = alg.incidence_matrix(G), incidence_dual(G)
    L = alg.laplacian_matrix(D)
    rep.check_equal("L(G*) = H^T H", L, H.T @ H)
    rep.check_equal(f"L(G*) = {k}I - A(G*)", L, k * alg.identity(G.m) - alg.adjacency_matrix(D))


def _check_max_eig(rep, name, M, bound):
    spec = alg.symmetric_eigenvalues(M)
    if len(spec):
        rep.check(f"max eigenvalue of {name} <= {bound}", spec.max <= bound + EIG_TOL, spectrum=spec)


def _check_psd(rep, name, L):
    spec = alg.symmetric_eigenvalues(L)
    if len(spec):
        rep.check(f"{name} positive semidefinite", spec.min >= -EIG_TOL, spectrum=spec)


@_law(
    "theorem-4.4",
    hypothesis=_all_of(_linear, _uniform),
    preset=_pick((2, 3, 4), "k_uniform", {"linear": True}),
)
def _(G, rng, rep):
    k = uniformity(G)
    D = incidence_dual(G)
    _check_max_eig(rep, "A(Lambda(G))", alg.adjacency_matrix(intersection_graph(G)), k)
    _check_max_eig(rep, "A(G*)", alg.adjacency_matrix(D), k)
    _check_psd(rep, "L(G*)", alg.laplacian_matrix(D))


@_law("lemma-4.5", hypothesis=_regular, preset=_pick((1, 2, 3), "r_regular"))
def _(G, rng, rep):
    r = regularity(G)
    H, L = alg.incidence_matrix(G), alg.laplacian_matrix(G)
    rep.check_equal("L(G) = H H^T", L, H @ H.T)
    rep.check_equal(f"L(G) = {r}I - A(G)", L, r * alg.identity(G.n) - alg.adjacency_matrix(G))


@_law("theorem-4.6", hypothesis=_regular, preset=_pick((2, 3), "r_regular"))
def _(G, rng, rep):
    _check_max_eig(rep, "A(G)", alg.adjacency_matrix(G), regularity(G))
    _check_psd(rep, "L(G)", alg.laplacian_matrix(G))


@_law("lemma-4.7")
def _(G, rng, rep):
    L, LD = alg.laplacian_matrix(G), alg.laplacian_matrix(incidence_dual(G))
    a, b = alg.symmetric_eigenvalues(L), alg.symmetric_eigenvalues(LD)
    rep.check("L(G) and L(G*) share nonzero eigenvalues", alg.nonzero_spectra_equal(a, b), L_G=a, L_dual=b)
    _check_psd(rep, "L(G)", L)
    _check_psd(rep, "L(G*)", LD)
    rep.check("trace L(G) = sum of degrees", alg.trace(L) == sum(degrees(G)))


@_law("proposition-4.8", hypothesis=_trace_gap_hyp, preset=_with(linear=True))
def _(G, rng, rep):
    D, line = incidence_dual(G), intersection_graph(G)
    LD, LL = alg.laplacian_matrix(D), alg.laplacian_matrix(line)
    rep.check("trace L(G*) = sum of degrees of G*", alg.trace(LD) == sum(degrees(D)))
    rep.check("trace L(Lambda(G)) = sum of degrees of Lambda(G)", alg.trace(LL) == sum(degrees(line)))
    a, b = alg.symmetric_eigenvalues(LD), alg.symmetric_eigenvalues(LL)
    gaps = [x - y for x, y in zip(a.values, b.values)]
    if alg.trace(LD) > alg.trace(LL):
        rep.check("some lambda_j(L(G*)) > lambda_j(L(Lambda(G)))", any(g > EIG_TOL for g in gaps), L_dual=a, L_line=b)
    else:
        rep.check("some lambda_j(L(G*)) < lambda_j(L(Lambda(G)))", any(g < -EIG_TOL for g in gaps), L_dual=a, L_line=b)


@_law("lemma-5.1")
def _(G, rng, rep):
    rep.merge(check_switch_matrices(G, SwitchingPair.random(G, rng)))


@_law("theorem-5.2")
def _(G, rng, rep):
    rep.merge(check_switch_spectra(G, SwitchingPair.random(G, rng)))


@_law("corollary-5.3")
def _(G, rng, rep):
    s1 = SwitchingPair.random(G, rng)
    s2 = SwitchingPair.random(G, rng)
    rep.merge(check_dual_switch_spectra(G, s1, s2))


@_law("theorem-5.4", hypothesis=_linear, preset=_with(linear=True))
def _(G, rng, rep):
    rep.merge(check_induced_switchings(G, SwitchingPair.random(G, rng)))


@_law("theorem-6.1", hypothesis=_design_hyp, designs=True)
def _(G, rng, rep):
    d = _as_design(G)
    v, _, r, _, lam = d.params.as_tuple()
    H, L = alg.incidence_matrix(G), alg.laplacian_matrix(G)
    rep.check_equal("L(G) = H H^T", L, H @ H.T)
    rep.check_equal(f"L(G) = ({r}-{lam})I + {lam}J", L, gram_target(v, r, lam))


@_law("corollary-6.2", hypothesis=_design_hyp, designs=True)
def _(G, rng, rep):
    d = _as_design(G)
    v, _, r, _, lam = d.params.as_tuple()
    C = design_incidence_matrix(d)
    rep.check_equal(f"C C^T = ({r}-{lam})I + {lam}J", C @ C.T, gram_target(v, r, lam))
    rep.merge(check_design_identity(d))


def check_law(law_id: str, G: OrientedHypergraph, seed: int = 0) -> LawReport:
    """Run one law on ``G``; switching laws draw their switchings from ``seed``."""
    try:
        law = LAWS[law_id]
    except KeyError:
        raise UnknownLawError(law_id) from None
    reason = law.hypothesis(G)
    if reason:
        return LawReport.not_met(law_id, reason)
    rep = LawReport(law_id)
    law.check(G, np.random.default_rng(seed & (2**64 - 1)), rep)
    rep.finish()
    if not rep.passed:
        rep.witness = serialize_ohg(G)
    return rep


@dataclass
class TrialSummary:
    law_id: str
    met: int = 0
    attempts: int = 0
    failure: Optional[LawReport] = None
    failure_seed: Optional[int] = None
    exhausted: str = ""

    @property
    def status(self) -> str:
        if self.failure is not None:
            return "fail"
        return "pass" if not self.exhausted else "hypothesis not met"

    def line(self) -> str:
        text = f"{self.law_id}: {self.status} ({self.met} instances, {self.attempts} drawn)"
        if self.exhausted:
            text += f" [{self.exhausted}]"
        return text


def trial_instance(law: Law, cfg: GeneratorConfig, seed: int, attempt: int):
    """Deterministic ``(instance, instance_seed)`` for one attempt of one law."""
    law_no = list(LAWS).index(law.law_id)
    rng = np.random.default_rng([seed & (2**64 - 1), law_no, attempt])
    inst_seed = int(rng.integers(2**63))
    if law.designs:
        return design_to_hypergraph(random_design(inst_seed, cfg.max_vertices)), inst_seed
    return generate(law.preset(rng, cfg).with_seed(inst_seed)), inst_seed


def run_trials(
    law_id: str, trials: int, seed: int = 0, cfg: Optional[GeneratorConfig] = None
) -> TrialSummary:
    """Check ``law_id`` on ``trials`` random instances that meet its hypothesis.

    Stops at the first failing instance.
    """
    law = LAWS[law_id] if law_id in LAWS else None
    if law is None:
        raise UnknownLawError(law_id)
    cfg = cfg or GeneratorConfig()
    out = TrialSummary(law_id)
    for attempt in range(100 * trials):
        if out.met == trials:
            break
        out.attempts += 1
        try:
            G, inst_seed = trial_instance(law, cfg, seed, attempt)
        except GeneratorError as exc:
            out.exhausted = str(exc)
            return out
        rep = check_law(law_id, G, inst_seed)
        if not rep.hypothesis_met:
            continue
        out.met += 1
        if not rep.passed:
            out.failure, out.failure_seed = rep, inst_seed
            return out
    if out.met < trials:
        out.exhausted = f"only {out.met} of {trials} instances met the hypothesis"
    return out
