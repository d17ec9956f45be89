"""Exact toughness toolkit: solvers, recognizers, reduction gadgets, and
exhaustive verification sweeps for small graphs."""

from .errors import (
    DomainError,
    ParseError,
    SizeCapError,
    UnsupportedSizeError,
    WitnessNotFoundError,
)
from .graph import (
    Graph,
    complement,
    components_after_removal,
    delete_edge,
    is_bridge,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .values import CutsetWitness, Toughness
from .solver import (
    IndependenceResult,
    ToughnessResult,
    alpha_bruteforce,
    independence_number,
    is_t_tough,
    tough_set_with_ratio,
    toughness,
    toughness_via_decision,
)
from .recognizers import (
    BRIDGE,
    AlmostMinClassification,
    BridgeMark,
    MinToughCertificate,
    check_almost_minimal_characterizations,
    edge_witness,
    is_almost_minimally_1_tough,
    is_alpha_critical_decision,
    is_alpha_critical_graph,
    is_minimally_t_tough,
    verify_certificate,
)
from .gadgets import (
    GadgetLabeling,
    attach_pendants,
    blow_up,
    build_g_alpha,
    build_g_t_alpha,
    build_h,
    glue,
    glue_vertex_for_h_prime,
    minimize_to_h_prime,
)
from .enumeration import (
    canonical_code,
    canonical_graph,
    enumerate_connected_graphs,
    is_isomorphic,
)
from .harness import (
    SweepSpec,
    VerificationReport,
    verify_blowup_alpha_critical,
    verify_g_alpha_tough,
    verify_reduction_a_over_b,
    verify_reduction_min1tough,
    verify_reduction_min_t_tough,
    verify_reduction_one_over_b,
    verify_structural_invariants,
)

__version__ = "0.1.0"
