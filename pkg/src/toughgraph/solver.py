"""Exact decision and optimization engines for toughness and independence.

The hot loops live in `_kernels` (numba, n <= 62).  Pure-Python twins of each
kernel are kept here: they serve graphs in the 63..64 range allowed by the
contract and act as independent cross-check oracles in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

import numpy as np

from . import _kernels
from .errors import DomainError, SizeCapError
from .graph import Graph
from .values import CutsetWitness, Toughness

SOLVER_MAX_N = 64


def _check_solver_input(g: Graph) -> None:
    if g.n == 0:
        raise DomainError("solvers reject the empty graph")
    if g.n > SOLVER_MAX_N:
        raise SizeCapError(
            f"exhaustive solving is capped at {SOLVER_MAX_N} vertices, got {g.n}"
        )


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.adj, dtype=np.int64)


def _coerce_t(t) -> Fraction:
    t = Fraction(t)
    if t <= 0:
        raise DomainError("t must be positive")
    return t


# -- pure-Python twins of the kernels (oracles; also cover n in 63..64) ----


def _py_ncomp(adj, remain: int) -> int:
    comps = 0
    r = remain
    while r:
        comp = r & -r
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & r & ~comp
            comp |= frontier
        r &= ~comp
        comps += 1
    return comps


def _subsets_by_size(n: int, k: int):
    if k == 0:
        yield 0
        return
    full = (1 << n) - 1
    mask = (1 << k) - 1
    while mask <= full:
        yield mask
        c = mask & -mask
        r = mask + c
        mask = r | ((mask ^ r) >> 2) // c


def _py_best_cut(adj, n: int):
    best_s, best_w, best_m = -1, 0, 0
    for k in range(n):
        if best_w > 0 and (best_s == 0 or k * best_w >= best_s * (n - k)):
            break
        for mask in _subsets_by_size(n, k):
            w = _py_ncomp(adj, ((1 << n) - 1) & ~mask)
            if w >= 2 and (best_w == 0 or k * best_w < best_s * w):
                best_s, best_w, best_m = k, w, mask
    return best_s, best_w, best_m


def _py_find_violation(adj, n: int, a: int, b: int) -> int:
    if _py_ncomp(adj, (1 << n) - 1) >= 2:
        return 0
    for k in range(1, n):
        if a * (n - k) <= b * k:
            break
        for mask in _subsets_by_size(n, k):
            w = _py_ncomp(adj, ((1 << n) - 1) & ~mask)
            if w >= 2 and a * w > b * k:
                return mask
    return -1


def _py_find_exact_ratio(adj, n: int, a: int, b: int) -> int:
    for k in range(a, n, a):
        w_target = b * k // a
        if w_target > n - k:
            break
        if w_target < 2:
            continue
        for mask in _subsets_by_size(n, k):
            if _py_ncomp(adj, ((1 << n) - 1) & ~mask) == w_target:
                return mask
    return -1


def _py_find_edge_witness(adj_ge, adj_g, n: int, a: int, b: int) -> int:
    for k in range(1, n):
        if a * (n - k) <= b * k:
            break
        for mask in _subsets_by_size(n, k):
            rem = ((1 << n) - 1) & ~mask
            w2 = _py_ncomp(adj_ge, rem)
            if w2 >= 2 and a * w2 > b * k:
                if a * _py_ncomp(adj_g, rem) <= b * k:
                    return mask
    return -1


def _best_cut(g: Graph):
    if g.n <= _kernels.KERNEL_MAX_N:
        return _kernels.best_cut(_adj_array(g), g.n)
    return _py_best_cut(g.adj, g.n)


def _find_violation(g: Graph, a: int, b: int) -> int:
    if g.n <= _kernels.KERNEL_MAX_N:
        return int(_kernels.find_violation(_adj_array(g), g.n, a, b))
    return _py_find_violation(g.adj, g.n, a, b)


def _find_exact_ratio(g: Graph, a: int, b: int) -> int:
    if g.n <= _kernels.KERNEL_MAX_N:
        return int(_kernels.find_exact_ratio(_adj_array(g), g.n, a, b))
    return _py_find_exact_ratio(g.adj, g.n, a, b)


def _find_edge_witness(ge: Graph, g: Graph, a: int, b: int) -> int:
    if g.n <= _kernels.KERNEL_MAX_N:
        return int(
            _kernels.find_edge_witness(_adj_array(ge), _adj_array(g), g.n, a, b)
        )
    return _py_find_edge_witness(ge.adj, g.adj, g.n, a, b)


# -- results ---------------------------------------------------------------


@dataclass(frozen=True)
class ToughnessResult:
    value: Toughness
    witness: Optional[CutsetWitness]  # present iff value is finite; a tough set


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness_set: tuple[int, ...]


# -- toughness -------------------------------------------------------------


def is_t_tough(g: Graph, t) -> tuple[bool, Optional[CutsetWitness]]:
    """Decide tau(g) >= t; on failure, return a violating cutset.

    Disconnected graphs fail for every t > 0 with witness S = empty set;
    complete graphs succeed for every t.
    """
    t = _coerce_t(t)
    _check_solver_input(g)
    mask = _find_violation(g, t.numerator, t.denominator)
    if mask < 0:
        return True, None
    verts = CutsetWitness.from_mask(
        mask, _py_ncomp(g.adj, ((1 << g.n) - 1) & ~mask)
    )
    return False, verts


def toughness(g: Graph) -> ToughnessResult:
    """Exact toughness with a minimizing tough set as witness."""
    _check_solver_input(g)
    s, w, mask = _best_cut(g)
    if w == 0:
        return ToughnessResult(Toughness.infinite(), None)
    if s == 0:
        return ToughnessResult(Toughness.zero(), None)
    return ToughnessResult(
        Toughness.finite(Fraction(s, w)), CutsetWitness.from_mask(mask, w)
    )


def _candidate_ratios(n: int) -> list[Fraction]:
    cands = set()
    for a in range(1, n):
        for b in range(1, n):
            if gcd(a, b) == 1:
                cands.add(Fraction(a, b))
    return sorted(cands)


def toughness_via_decision(g: Graph) -> ToughnessResult:
    """Independent cross-check: binary search candidate ratios a/b, 1<=a,b<=n-1.

    Only defined for connected noncomplete graphs (elsewhere the candidate
    space of the ratio bound does not apply).
    """
    _check_solver_input(g)
    if not g.is_connected():
        raise DomainError("toughness_via_decision requires a connected graph")
    if g.is_complete():
        raise DomainError("toughness_via_decision requires a noncomplete graph")
    cands = _candidate_ratios(g.n)
    lo, hi = 0, len(cands) - 1
    # rightmost candidate for which the decision holds
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if is_t_tough(g, cands[mid])[0]:
            lo = mid
        else:
            hi = mid - 1
    tau = cands[lo]
    mask = _find_exact_ratio(g, tau.numerator, tau.denominator)
    if mask < 0:
        raise RuntimeError("no cutset attains the decided toughness; solver bug")
    w = _py_ncomp(g.adj, ((1 << g.n) - 1) & ~mask)
    return ToughnessResult(Toughness.finite(tau), CutsetWitness.from_mask(mask, w))


def tough_set_with_ratio(g: Graph, t) -> Optional[CutsetWitness]:
    """Deterministic cutset with ratio exactly t, or None if none exists."""
    t = _coerce_t(t)
    _check_solver_input(g)
    mask = _find_exact_ratio(g, t.numerator, t.denominator)
    if mask < 0:
        return None
    w = _py_ncomp(g.adj, ((1 << g.n) - 1) & ~mask)
    return CutsetWitness.from_mask(mask, w)


# -- independence number ---------------------------------------------------


def independence_number(g: Graph) -> IndependenceResult:
    """Exact maximum independent set via branch and bound on the densest vertex."""
    n = g.n
    adj = g.adj
    best_size = 0
    best_mask = 0

    def rec(remain: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size + remain.bit_count() <= best_size:
            return
        if remain == 0:
            best_size, best_mask = size, chosen
            return
        # highest remaining degree; isolated vertices are always taken
        v_best, d_best = -1, -1
        m = remain
        while m:
            b = m & -m
            v = b.bit_length() - 1
            d = (adj[v] & remain).bit_count()
            if d > d_best:
                v_best, d_best = v, d
            m ^= b
        bit = 1 << v_best
        rec(remain & ~(adj[v_best] | bit), chosen | bit, size + 1)
        if d_best > 0:
            rec(remain & ~bit, chosen, size)

    rec((1 << n) - 1, 0, 0)
    verts = tuple(v for v in range(n) if best_mask >> v & 1)
    return IndependenceResult(best_size, verts)


def alpha_bruteforce(g: Graph) -> int:
    """Exhaustive bitmask oracle; guard at n <= 30."""
    if g.n > 30:
        raise SizeCapError("brute-force independence oracle capped at 30 vertices")
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        ok = True
        m = mask
        while m:
            b = m & -m
            if g.adj[b.bit_length() - 1] & mask:
                ok = False
                break
            m ^= b
        if ok:
            best = size
    return best
