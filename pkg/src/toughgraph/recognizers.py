"""Decision procedures for the toughness-critical graph classes.

The recognizers never compute full toughness of an edge-deleted graph: a
single decision call both settles tau(G-e) < t and yields the per-edge
witness set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DomainError, WitnessNotFoundError
from .graph import Graph, components_after_removal, delete_edge, is_bridge
from .solver import (
    _check_solver_input,
    _coerce_t,
    _find_edge_witness,
    _py_ncomp,
    independence_number,
    is_t_tough,
    tough_set_with_ratio,
)
from .values import CutsetWitness


@dataclass(frozen=True)
class BridgeMark:
    """Marks an edge whose witness set is empty because the edge is a bridge."""


BRIDGE = BridgeMark()

EdgeWitness = Union[BridgeMark, CutsetWitness]


@dataclass(frozen=True)
class MinToughCertificate:
    t: Fraction
    tough_set: CutsetWitness
    per_edge: dict[tuple[int, int], EdgeWitness]

    def to_json_dict(self) -> dict:
        edges = []
        for e in sorted(self.per_edge):
            w = self.per_edge[e]
            bridge = isinstance(w, BridgeMark)
            edges.append(
                {
                    "edge": list(e),
                    "bridge": bridge,
                    "witness": [] if bridge else list(w.removed),
                }
            )
        return {
            "t": f"{self.t.numerator}/{self.t.denominator}",
            "toughSet": list(self.tough_set.removed),
            "edges": edges,
        }


class AlmostMinClassification(enum.Enum):
    MINIMALLY_ONE_TOUGH = "minimally-1-tough"
    IS_K2 = "K2"
    IS_K3 = "K3"
    NOT_ALMOST_MINIMAL = "not-almost-minimal"

    @property
    def holds(self) -> bool:
        return self is not AlmostMinClassification.NOT_ALMOST_MINIMAL


def edge_witness(g: Graph, t, e: tuple[int, int]) -> EdgeWitness:
    """Witness set for one edge of a minimally t-tough graph.

    Bridges get an empty-set mark.  For any other edge the returned S
    violates t-toughness in G-e while omega(G-S) <= |S|/t, which forces e to
    be a bridge in G-S.  Raises WitnessNotFoundError when no such set exists
    (i.e. the caller's minimality precondition was violated).
    """
    t = _coerce_t(t)
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e} not present")
    if is_bridge(g, e):
        return BRIDGE
    ge = delete_edge(g, e)
    mask = _find_edge_witness(ge, g, t.numerator, t.denominator)
    if mask < 0:
        raise WitnessNotFoundError(
            f"no witness set for edge {e}; graph is not minimally {t}-tough"
        )
    w = _py_ncomp(ge.adj, ((1 << g.n) - 1) & ~mask)
    return CutsetWitness.from_mask(mask, w)


def is_minimally_t_tough(
    g: Graph, t
) -> tuple[bool, Optional[MinToughCertificate]]:
    """tau(g) = t exactly and every single-edge deletion drops toughness below t."""
    t = _coerce_t(t)
    _check_solver_input(g)
    if not is_t_tough(g, t)[0]:
        return False, None
    tough_set = tough_set_with_ratio(g, t)
    if tough_set is None:
        # tau(g) > t (or g is complete)
        return False, None
    per_edge: dict[tuple[int, int], EdgeWitness] = {}
    for e in g.edges():
        if is_bridge(g, e):
            per_edge[e] = BRIDGE
            continue
        if is_t_tough(delete_edge(g, e), t)[0]:
            return False, None
        try:
            per_edge[e] = edge_witness(g, t, e)
        except WitnessNotFoundError:
            return False, None
    return True, MinToughCertificate(t, tough_set, per_edge)


def verify_certificate(g: Graph, t, cert: MinToughCertificate) -> bool:
    """Recompute every clause of a certificate from scratch via the core module."""
    t = Fraction(t)
    a, b = t.numerator, t.denominator
    ts = cert.tough_set
    if ts.component_count < 2 or ts.ratio != t:
        return False
    if components_after_removal(g, ts.removed) != ts.component_count:
        return False
    if set(cert.per_edge) != set(g.edges()):
        return False
    for e, w in cert.per_edge.items():
        if isinstance(w, BridgeMark):
            if not is_bridge(g, e):
                return False
            continue
        if is_bridge(g, e):
            return False
        s = w.removed
        ge = delete_edge(g, e)
        w_ge = components_after_removal(ge, s)
        if w_ge != w.component_count:
            return False
        if not (a * w_ge > b * len(s)):
            return False
        if not (a * components_after_removal(g, s) <= b * len(s)):
            return False
        gs_edges = [
            f for f in g.edges() if f[0] not in s and f[1] not in s
        ]
        g_minus_s = Graph(g.n, gs_edges)
        # bridge test restricted to the surviving vertices
        before = components_after_removal(g_minus_s, s)
        after = components_after_removal(delete_edge(g_minus_s, e), s)
        if after != before + 1:
            return False
    return True


def is_almost_minimally_1_tough(g: Graph) -> AlmostMinClassification:
    """Classify per the trichotomy: minimally 1-tough, K_2, K_3, or neither.

    Edgeless graphs (including K_1) are classified as not almost minimal: the
    defining universally-quantified edge condition is vacuous there and the
    trichotomy only covers graphs with at least one edge.
    """
    _check_solver_input(g)
    if g.n == 2 and g.edge_count() == 1:
        return AlmostMinClassification.IS_K2
    if g.n == 3 and g.edge_count() == 3:
        return AlmostMinClassification.IS_K3
    if g.edge_count() == 0:
        return AlmostMinClassification.NOT_ALMOST_MINIMAL
    if is_minimally_t_tough(g, Fraction(1))[0]:
        return AlmostMinClassification.MINIMALLY_ONE_TOUGH
    return AlmostMinClassification.NOT_ALMOST_MINIMAL


def check_almost_minimal_characterizations(g: Graph) -> bool:
    """Evaluate the three characterizations of almost minimal 1-toughness
    independently and report whether they agree.

    Edgeless graphs return True: the equivalence only concerns graphs with at
    least one edge.
    """
    _check_solver_input(g)
    if g.n > 20:
        raise DomainError("equivalence check capped at 20 vertices")
    edges = g.edges()
    if not edges:
        return True

    # (1) the definition: tau >= 1 and every deletion drops below 1
    def_holds = is_t_tough(g, 1)[0] and all(
        not is_t_tough(delete_edge(g, e), 1)[0] for e in edges
    )

    # (2) 1-tough and per-edge exact witness sets
    def witness_exists(e) -> bool:
        if is_bridge(g, e):
            return True
        ge = delete_edge(g, e)
        for mask in range(1 << g.n):
            s = [v for v in range(g.n) if mask >> v & 1]
            if components_after_removal(g, s) == len(s) and components_after_removal(
                ge, s
            ) == len(s) + 1:
                return True
        return False

    char2 = is_t_tough(g, 1)[0] and all(witness_exists(e) for e in edges)

    # (3) minimally 1-tough, or K_2, or K_3
    char3 = (
        is_minimally_t_tough(g, 1)[0]
        or (g.n == 2 and len(edges) == 1)
        or (g.n == 3 and len(edges) == 3)
    )

    return def_holds == char2 == char3


def is_alpha_critical_decision(g: Graph, k: int) -> bool:
    """alpha(g) < k, and deleting any edge brings alpha to at least k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if independence_number(g).alpha >= k:
        return False
    return all(
        independence_number(delete_edge(g, e)).alpha >= k for e in g.edges()
    )


def is_alpha_critical_graph(g: Graph) -> bool:
    """Every edge deletion strictly increases the independence number.

    Edgeless graphs are vacuously alpha-critical (documented choice; the
    universally-quantified definition has nothing to check).
    """
    alpha = independence_number(g).alpha
    return all(
        independence_number(delete_edge(g, e)).alpha > alpha for e in g.edges()
    )
