"""Oriented hypergraphs: incidence duals, sections, line graphs, switching,
integer matrices and Jacobi spectra, with a seeded law verifier."""

from .algebra import (
    Spectrum,
    adjacency_matrix,
    degree_matrix,
    incidence_matrix,
    laplacian_matrix,
    nonzero_spectra_equal,
    symmetric_eigenvalues,
)
from .constructions import (
    EnlargementPlan,
    SignedGraph,
    enlarge_edges,
    incidence_dual,
    intersection_graph,
    k_section,
    orient_signed_graph,
    strict_k_section,
    underlying_signed_graph,
)
from .designs import BlockDesign, fano, validate_design
from .generate import GeneratorConfig, generate
from .hypercore import Edge, OrientedHypergraph
from .io import parse_bibd, parse_ohg, serialize_bibd, serialize_ohg
from .laws import LAWS, check_law
from .switching import SwitchingPair, apply_switch

__version__ = "0.1.0"
