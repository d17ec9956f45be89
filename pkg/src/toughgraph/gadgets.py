"""Constructors for the reduction gadgets, with vertex-role labelings.

Vertex numbering is fixed (host/V blocks first, then U, then W, then
pendants or glued copies in index order) so graph6 outputs are stable for
golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import DomainError
from .graph import Graph, components_after_removal, delete_edge
from .solver import is_t_tough, toughness
from .values import Toughness


@dataclass(frozen=True)
class GadgetLabeling:
    """Maps every gadget vertex to a role tag like "V(2,0)" or "Pendant(1,3)"."""

    roles: dict[int, str]

    def vertices_with_prefix(self, prefix: str) -> list[int]:
        return sorted(v for v, r in self.roles.items() if r.startswith(prefix + "("))

    def to_json_dict(self) -> dict:
        return {"roles": {str(v): self.roles[v] for v in sorted(self.roles)}}


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DomainError("host graph must be connected")


def build_g_alpha(g: Graph, alpha: int) -> tuple[Graph, GadgetLabeling]:
    """Clique-block gadget for the minimally-1-tough reduction.

    2*n*alpha + alpha vertices: per host vertex i a clique V_i of size alpha,
    complete bipartite (V_i; V_j) for each host edge, one degree-2 vertex
    u(i,j) attached to v(i,j), and alpha hub vertices w_j each adjacent to
    u(0,j)..u(n-1,j).
    """
    if alpha < 1:
        raise DomainError("alpha must be a positive integer")
    _require_connected(g)
    return build_g_t_alpha(g, 1, alpha)


def build_g_t_alpha(g: Graph, t: int, alpha: int) -> tuple[Graph, GadgetLabeling]:
    """Generalized gadget for the minimally-t-tough reduction (integer t).

    Per host vertex i: a clique V_i of size t*alpha, matched 1:1 to t-cliques
    U(i,0)..U(i,alpha-1); per host edge a complete bipartite graph between the
    V blocks; hub blocks W_j of t vertices completely joined to every U(i,j).
    At t = 1 this coincides with the plain clique-block gadget, index for index.
    """
    if t < 1 or alpha < 1:
        raise DomainError("t and alpha must be positive integers")
    _require_connected(g)
    n = g.n
    if n < t:
        raise DomainError(f"host must have at least t={t} vertices, got {n}")
    ta = t * alpha
    v_at = lambda i, k: i * ta + k
    u_at = lambda i, k: n * ta + i * ta + k
    w_at = lambda j, l: 2 * n * ta + j * t + l

    edges = []
    roles: dict[int, str] = {}
    for i in range(n):
        for k in range(ta):
            roles[v_at(i, k)] = f"V({i},{k})"
        # clique on V_i
        for k in range(ta):
            for k2 in range(k + 1, ta):
                edges.append((v_at(i, k), v_at(i, k2)))
    for i, j in g.edges():
        for k in range(ta):
            for k2 in range(ta):
                edges.append((v_at(i, k), v_at(j, k2)))
    for i in range(n):
        for j in range(alpha):
            members = [u_at(i, j * t + s) for s in range(t)]
            for s, uv in enumerate(members):
                roles[uv] = f"U({i},{j},{s})"
            # matching to V_i and clique inside U(i,j)
            for s, uv in enumerate(members):
                edges.append((v_at(i, j * t + s), uv))
            for s in range(t):
                for s2 in range(s + 1, t):
                    edges.append((members[s], members[s2]))
            # complete bipartite (U(i,j); W_j)
            for uv in members:
                for l in range(t):
                    edges.append((uv, w_at(j, l)))
    for j in range(alpha):
        for l in range(t):
            roles[w_at(j, l)] = f"W({j},{l})"
    return Graph(2 * n * ta + ta, edges), GadgetLabeling(roles)


def attach_pendants(g: Graph, b: int) -> tuple[Graph, GadgetLabeling]:
    """Give every host vertex b-1 pendant leaves; n*b vertices total."""
    if b < 2:
        raise DomainError("b must be at least 2")
    _require_connected(g)
    n = g.n
    edges = list(g.edges())
    roles = {i: f"Host({i})" for i in range(n)}
    for i in range(n):
        for p in range(b - 1):
            leaf = n + i * (b - 1) + p
            roles[leaf] = f"Pendant({i},{p})"
            edges.append((i, leaf))
    return Graph(n * b, edges), GadgetLabeling(roles)


def build_h(a: int, b: int) -> tuple[Graph, GadgetLabeling]:
    """The a+b vertex graph with toughness exactly a/b (requires b >= 2a).

    Clique V of size a, joined completely to b-a independent vertices U, with
    a pendant partner w_i for each v_i.
    """
    if a < 1 or b < 2 * a or gcd(a, b) != 1:
        raise DomainError("need positive coprime a, b with b >= 2a")
    v_at = lambda i: i
    u_at = lambda j: a + j
    w_at = lambda i: b + i
    edges = []
    roles: dict[int, str] = {}
    for i in range(a):
        roles[v_at(i)] = f"V({i})"
        roles[w_at(i)] = f"W({i})"
        edges.append((v_at(i), w_at(i)))
        for i2 in range(i + 1, a):
            edges.append((v_at(i), v_at(i2)))
        for j in range(b - a):
            edges.append((v_at(i), u_at(j)))
    for j in range(b - a):
        roles[u_at(j)] = f"U({j})"
    return Graph(a + b, edges), GadgetLabeling(roles)


def minimize_to_h_prime(
    h: Graph, t, trace: Optional[list] = None
) -> Graph:
    """Greedily delete edges whose removal preserves t-toughness until none
    remains; the result is minimally t-tough.

    Edges are scanned in lexicographic order and the scan restarts after each
    deletion.  When h has the standard a+b layout of build_h, the structural
    postconditions (degree-1 W vertices, S = V a tough set) are asserted.
    """
    t = Fraction(t)
    if toughness(h).value != Toughness.finite(t):
        raise DomainError(f"input graph does not have toughness {t}")
    g = h
    changed = True
    while changed:
        changed = False
        for e in g.edges():
            ge = delete_edge(g, e)
            if is_t_tough(ge, t)[0]:
                g = ge
                if trace is not None:
                    trace.append(e)
                changed = True
                break
    a, b = t.numerator, t.denominator
    if h.n == a + b and b >= 2 * a:
        for i in range(a):
            if g.degree(b + i) != 1:
                raise RuntimeError("minimization broke a degree-1 W vertex")
        if components_after_removal(g, range(a)) != b:
            raise RuntimeError("S = V is no longer a tough set after minimization")
    return g


def glue(g: Graph, h: Graph, u: int) -> tuple[Graph, GadgetLabeling]:
    """Attach a fresh copy of h - {u} to every vertex of g, identifying the
    copy of u's unique neighbor with that vertex.
    """
    if not (0 <= u < h.n) or h.degree(u) != 1:
        raise DomainError("glue vertex must have degree exactly 1")
    v = h.neighbors(u)[0]
    rest = [x for x in range(h.n) if x != u and x != v]
    per_copy = len(rest)
    edges = list(g.edges())
    roles = {i: f"Host({i})" for i in range(g.n)}
    h_edges = [e for e in h.edges() if u not in e]
    for i in range(g.n):
        base = g.n + i * per_copy
        mapping = {v: i}
        for idx, x in enumerate(rest):
            mapping[x] = base + idx
            roles[base + idx] = f"GlueCopy({i},{x})"
        for x, y in h_edges:
            edges.append((mapping[x], mapping[y]))
    return Graph(g.n * (h.n - 1), edges), GadgetLabeling(roles)


def glue_vertex_for_h_prime(h_prime: Graph, a: int, b: int) -> int:
    """Deterministic degree-1 glue vertex of a minimized build_h output.

    Prefers the lowest-index degree-1 vertex in the U block.  For a >= 2 no
    such vertex may survive minimization (the U vertices can need both clique
    neighbors), so fall back to the lowest-index W vertex: it always has
    degree 1 and its neighbor also lies in the tough set V, which is the only
    property the glued construction relies on.
    """
    for j in range(b - a):
        if h_prime.degree(a + j) == 1:
            return a + j
    for i in range(a):
        if h_prime.degree(b + i) == 1:
            return b + i
    raise DomainError("minimized graph has no degree-1 vertex")


def blow_up(g: Graph, v: int, size: int) -> Graph:
    """Replace vertex v by a clique of the given size; every former neighbor
    becomes adjacent to all clique vertices.  size 1 is the identity."""
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    if size < 1:
        raise DomainError("clique size must be at least 1")
    edges = list(g.edges())
    clones = [g.n + c for c in range(size - 1)]
    for c in clones:
        edges.append((v, c))
        for nb in g.neighbors(v):
            edges.append((nb, c))
    for x in range(len(clones)):
        for y in range(x + 1, len(clones)):
            edges.append((clones[x], clones[y]))
    return Graph(g.n + size - 1, edges)
