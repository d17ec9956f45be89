"""Immutable simple undirected graphs with dense 0..n-1 indices, plus text I/O.

Adjacency is stored as one integer bitmask per vertex, which keeps component
counting cheap inside the exhaustive subset loops downstream.  Graphs above 64
vertices are allowed here (constructions may exceed the solver cap); only the
exhaustive solvers reject them.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ParseError, UnsupportedSizeError


class Graph:
    """A labeled simple undirected graph. Instances are immutable values."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                out.append((u, b.bit_length() - 1))
                m ^= b
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def is_connected(self) -> bool:
        return self.n >= 1 and components_after_removal(self, ()) == 1

    def is_complete(self) -> bool:
        return all(self.degree(v) == self.n - 1 for v in range(self.n))

    # -- value semantics --------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"

    # -- common families (test and CLI convenience) -----------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """K_{1,leaves}: center is vertex 0."""
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# -- structural operations ------------------------------------------------


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Remove one edge; vertex indices are unchanged."""
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"edge {e} not present")
    return Graph(g.n, [f for f in g.edges() if f != (min(u, v), max(u, v))])


def complement(g: Graph) -> Graph:
    return Graph(
        g.n,
        [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ],
    )


def components_after_removal(g: Graph, s: Iterable[int]) -> int:
    """Number of connected components of g - s (0 when every vertex is removed)."""
    removed = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        removed |= 1 << v
    remain = ((1 << g.n) - 1) & ~removed
    count = 0
    while remain:
        comp = remain & -remain
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= g.adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & remain & ~comp
            comp |= frontier
        remain &= ~comp
        count += 1
    return count


def is_bridge(g: Graph, e: tuple[int, int]) -> bool:
    """True iff deleting e increases the number of components."""
    before = components_after_removal(g, ())
    return components_after_removal(delete_edge(g, e), ()) > before


# -- graph6 (short form, n <= 62) -----------------------------------------

_G6_MIN, _G6_MAX = 63, 126


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (standard 6-bit upper-triangle encoding)."""
    s = text.rstrip("\r\n")
    if not s:
        raise ParseError("empty graph6 input", 0)
    head = ord(s[0])
    if head == 126:
        raise ParseError("long-form graph6 header is not supported", 0)
    if not _G6_MIN <= head <= _G6_MAX:
        raise ParseError(f"invalid graph6 header byte {head}", 0)
    n = head - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 < need:
        raise ParseError("truncated graph6 bit stream", len(s))
    if len(s) - 1 > need:
        raise ParseError("trailing garbage after graph6 data", 1 + need)
    bits = []
    for k in range(need):
        c = ord(s[1 + k])
        if not _G6_MIN <= c <= _G6_MAX:
            raise ParseError(f"invalid graph6 data byte {c}", 1 + k)
        val = c - 63
        for shift in range(5, -1, -1):
            bits.append(val >> shift & 1)
    if any(bits[nbits:]):
        # locate the character carrying the offending padding bit
        bad = next(i for i in range(nbits, len(bits)) if bits[i])
        raise ParseError("nonzero padding bits", 1 + bad // 6)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as one graph6 line; labeled encoding, no canonicalization."""
    if g.n > 62:
        raise UnsupportedSizeError(f"graph6 short form supports n <= 62, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


# -- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v". Duplicate edges and loops are errors."""
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty edge-list input", 0)
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("edge-list header must be 'n m'", 0)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("edge-list header must be 'n m'", 0) from None
    if n < 0 or m < 0:
        raise ParseError("negative counts in edge-list header", 0)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}", len(text))
    edges = []
    seen = set()
    offset = len(lines[0]) + 1
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", offset)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge line must be 'u v'", offset) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range in edge ({u},{v})", offset)
        if u == v:
            raise ParseError(f"loop at vertex {u}", offset)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u},{v})", offset)
        seen.add(key)
        edges.append(key)
        offset += len(ln) + 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
