"""Strong power graphs of finite groups: exact construction, spectra,
spanning trees, Laplacian energy, permanents, line-graph and Cayley
classification, with every closed form paired against an independent oracle.

The strong power graph of a finite group G of order n joins distinct
elements a and b whenever a^i = b^j for some exponents 1 <= i, j <= n-1.
"""

from .errors import SizeGuardError
from .groups import (
    FiniteGroup,
    GroupError,
    GroupSpecError,
    InvalidOrderError,
    MissingInverseError,
    NoIdentityError,
    NotAssociativeError,
    NotLatinSquareError,
    element_order,
    euler_phi,
    generators,
    is_cyclic,
    load_cayley_table_csv,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_from_table,
    make_klein,
    make_symmetric,
    noncyclic_corpus,
    parse_group_spec,
)
from .graphs import (
    Graph,
    chromatic_number_exact,
    clique_plus_vertex_graph,
    complete_graph,
    connected_components,
    degree_sequence,
    disjoint_union,
    graph_from_edges,
    graph_from_json,
    graph_isomorphic,
    graph_to_dot,
    graph_to_json,
    induced_subgraph,
    is_complete,
    is_regular,
    power_closure,
    star_graph,
    strong_power_graph,
    strong_power_graph_bruteforce,
    vertex_connectivity_bruteforce,
)
from .spectral import (
    CharPoly,
    ExactSpectrum,
    IntMatrix,
    adjacency,
    algebraic_connectivity,
    char_poly_exact,
    char_poly_from_spectrum,
    closed_form_char_poly,
    closed_form_spectrum,
    det_bareiss,
    eigenvalues_numeric,
    laplacian,
    laplacian_energy_closed_form,
    laplacian_energy_from_spectrum,
    spanning_tree_count_formula,
    spanning_tree_count_kirchhoff,
    spectrum_to_json,
    to_matrix_market,
)
from .permanents import (
    CliqueParams,
    adjacency_permanent_formula,
    clique_plus_vertex_adjacency_permanent,
    clique_plus_vertex_laplacian_permanent,
    complete_graph_laplacian_permanent,
    laplacian_permanent_formula,
    permanent_expansion,
    permanent_ryser,
)
from .structure import (
    ConnectionSet,
    ForbiddenPatternSet,
    beineke_patterns,
    cayley_classification,
    cayley_graph,
    chi_formula,
    contains_induced,
    cyclic_line_graph_classification,
    cyclic_line_graph_root,
    full_connection_set,
    is_line_graph,
    kappa_formula,
    line_graph_construct,
    root_graph_search,
)
from .verify import (
    CHECK_NAMES,
    CheckRecord,
    KnownDiscrepancy,
    VerifyReport,
    load_known_discrepancies,
    run_verify,
)
from .cli import InvariantBundle, compute_invariant_bundle

__version__ = "0.1.0"

__all__ = [
    "SizeGuardError",
    "FiniteGroup",
    "GroupError",
    "GroupSpecError",
    "InvalidOrderError",
    "MissingInverseError",
    "NoIdentityError",
    "NotAssociativeError",
    "NotLatinSquareError",
    "element_order",
    "euler_phi",
    "generators",
    "is_cyclic",
    "load_cayley_table_csv",
    "make_cyclic",
    "make_dihedral",
    "make_direct_product",
    "make_from_table",
    "make_klein",
    "make_symmetric",
    "noncyclic_corpus",
    "parse_group_spec",
    "Graph",
    "chromatic_number_exact",
    "clique_plus_vertex_graph",
    "complete_graph",
    "connected_components",
    "degree_sequence",
    "disjoint_union",
    "graph_from_edges",
    "graph_from_json",
    "graph_isomorphic",
    "graph_to_dot",
    "graph_to_json",
    "induced_subgraph",
    "is_complete",
    "is_regular",
    "power_closure",
    "star_graph",
    "strong_power_graph",
    "strong_power_graph_bruteforce",
    "vertex_connectivity_bruteforce",
    "CharPoly",
    "ExactSpectrum",
    "IntMatrix",
    "adjacency",
    "algebraic_connectivity",
    "char_poly_exact",
    "char_poly_from_spectrum",
    "closed_form_char_poly",
    "closed_form_spectrum",
    "det_bareiss",
    "eigenvalues_numeric",
    "laplacian",
    "laplacian_energy_closed_form",
    "laplacian_energy_from_spectrum",
    "spanning_tree_count_formula",
    "spanning_tree_count_kirchhoff",
    "spectrum_to_json",
    "to_matrix_market",
    "CliqueParams",
    "adjacency_permanent_formula",
    "clique_plus_vertex_adjacency_permanent",
    "clique_plus_vertex_laplacian_permanent",
    "complete_graph_laplacian_permanent",
    "laplacian_permanent_formula",
    "permanent_expansion",
    "permanent_ryser",
    "ConnectionSet",
    "ForbiddenPatternSet",
    "beineke_patterns",
    "cayley_classification",
    "cayley_graph",
    "chi_formula",
    "contains_induced",
    "cyclic_line_graph_classification",
    "cyclic_line_graph_root",
    "full_connection_set",
    "is_line_graph",
    "kappa_formula",
    "line_graph_construct",
    "root_graph_search",
    "CHECK_NAMES",
    "CheckRecord",
    "KnownDiscrepancy",
    "VerifyReport",
    "load_known_discrepancies",
    "run_verify",
    "InvariantBundle",
    "compute_invariant_bundle",
]
