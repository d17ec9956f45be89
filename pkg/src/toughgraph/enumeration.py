"""Exhaustive enumeration of small connected graphs up to isomorphism.

Canonical forms come from an individualization-refinement search (iterated
neighborhood-color refinement, branching on the first non-singleton class),
taking the minimum adjacency code over all discrete leaves.  Dependency-free
and fast enough through n = 8.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, parse_graph6, to_graph6

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def _refine(g: Graph, colors: list[int]) -> list[int]:
    n = g.n
    for _ in range(n):
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in g.neighbors(v))
            sigs.append((colors[v], tuple(nb)))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def _code_for_order(g: Graph, order: list[int]) -> int:
    # bit k set iff the k-th upper-triangle pair (by position) is an edge
    code = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            code <<= 1
            if g.has_edge(order[i], order[j]):
                code |= 1
            k += 1
    return code


def canonical_code(g: Graph) -> int:
    """Isomorphism-invariant integer code of the adjacency structure."""
    n = g.n
    if n == 0:
        return 0
    best = None

    def homogeneous(cls: list[int]) -> bool:
        # all members interchangeable: identical adjacency outside the class
        # and the induced subgraph complete or empty
        cmask = 0
        for v in cls:
            cmask |= 1 << v
        outside = {g.adj[v] & ~cmask for v in cls}
        if len(outside) > 1:
            return False
        inner = [g.adj[v] & cmask for v in cls]
        return all(x == 0 for x in inner) or all(
            x == cmask ^ (1 << v) for v, x in zip(cls, inner)
        )

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        nonsingleton = [classes[c] for c in sorted(classes) if len(classes[c]) > 1]
        if not nonsingleton or all(homogeneous(cls) for cls in nonsingleton):
            # every class-respecting order yields the same code
            order = sorted(range(n), key=lambda v: (colors[v], v))
            code = _code_for_order(g, order)
            if best is None or code < best:
                best = code
            return
        for v in nonsingleton[0]:
            branched = [2 * c for c in colors]
            branched[v] -= 1
            search(branched)

    search([g.degree(v) for v in range(n)])
    return best


def canonical_graph(g: Graph) -> Graph:
    """A deterministic representative of g's isomorphism class."""
    code = canonical_code(g)
    n = g.n
    edges = []
    bits = n * (n - 1) // 2
    k = bits - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _connected_g6(n: int) -> tuple[str, ...]:
    if n == 1:
        return (to_graph6(Graph(1)),)
    reps: dict[int, Graph] = {}
    for g6 in _connected_g6(n - 1):
        h = parse_graph6(g6)
        base_edges = h.edges()
        for nb_mask in range(1, 1 << (n - 1)):
            edges = base_edges + [
                (i, n - 1) for i in range(n - 1) if nb_mask >> i & 1
            ]
            cand = Graph(n, edges)
            code = canonical_code(cand)
            if code not in reps:
                reps[code] = canonical_graph(cand)
    return tuple(sorted(to_graph6(g) for g in reps.values()))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n
    labeled vertices, in a fixed deterministic (graph6-sorted) order."""
    if not 1 <= n <= 8:
        raise ValueError("enumeration supported for 1 <= n <= 8")
    for g6 in _connected_g6(n):
        yield parse_graph6(g6)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_code(g) == canonical_code(h)
