"""Exhaustive small-graph sweeps that run the reduction biconditionals as
executable properties and emit machine-readable reports.

Every sweep walks graphs in graph6-sorted order, so reports are byte-stable
(modulo wallTime).  Graphs that miss a sweep's preconditions or would push a
gadget past the vertex cap are counted as skipped, never dropped.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Optional

from .enumeration import enumerate_connected_graphs
from .errors import DomainError
from .gadgets import (
    attach_pendants,
    blow_up,
    build_g_alpha,
    build_g_t_alpha,
    build_h,
    glue,
    glue_vertex_for_h_prime,
    minimize_to_h_prime,
)
from .graph import Graph, parse_graph6, to_graph6
from .recognizers import (
    check_almost_minimal_characterizations,
    is_almost_minimally_1_tough,
    is_alpha_critical_graph,
    is_minimally_t_tough,
    verify_certificate,
)
from .solver import independence_number, is_t_tough, toughness, toughness_via_decision
from .values import Toughness

DEFAULT_VERTEX_CAP = 24


@dataclass
class VerificationReport:
    check_name: str
    params: dict
    total: int = 0
    passed: int = 0
    failed: list[str] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json_dict(self) -> dict:
        return {
            "checkName": self.check_name,
            "params": self.params,
            "totalGraphs": self.total,
            "passed": self.passed,
            "failed": list(self.failed),
            "skipped": list(self.skipped),
            "wallTime": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


# item -> (key, status, detail); status in {"pass", "fail", "skip"}
_CheckResult = tuple[str, str, str]


def _run_items(
    check_name: str,
    params: dict,
    items: list,
    worker: Callable[[object], _CheckResult],
    jobs: int = 1,
) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(check_name, params, total=len(items))
    if jobs > 1 and len(items) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            results = pool.map(worker, items)
    else:
        results = [worker(it) for it in items]
    for key, status, detail in sorted(results):
        if status == "pass":
            report.passed += 1
        elif status == "fail":
            report.failed.append(key if not detail else f"{key}: {detail}")
        else:
            report.skipped.append({"graph": key, "reason": detail})
    report.wall_time = time.perf_counter() - start
    return report


def _hosts(n_max: int, n_min: int = 1) -> list[str]:
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(to_graph6(g) for g in enumerate_connected_graphs(n))
    return out


# -- clique-block reduction (minimally 1-tough / t-tough) ------------------


def _w_min_t_tough(item) -> _CheckResult:
    g6, t, alpha, cap = item
    g = parse_graph6(g6)
    key = f"{g6}|t={t}|alpha={alpha}"
    if g.n < 2:
        return key, "skip", "host needs at least one edge"
    if g.n < t:
        return key, "skip", f"host smaller than t={t}"
    size = 2 * g.n * t * alpha + t * alpha
    if size > cap:
        return key, "skip", f"gadget size {size} exceeds cap {cap}"
    left = (
        is_alpha_critical_graph(g) and independence_number(g).alpha == alpha
    )
    gadget, _ = build_g_t_alpha(g, t, alpha)
    right = is_minimally_t_tough(gadget, Fraction(t))[0]
    if left == right:
        return key, "pass", ""
    return key, "fail", f"alpha-critical={left} but gadget minimal={right}"


def verify_reduction_min1tough(
    n_max: int,
    alpha_set: Iterable[int],
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    jobs: int = 1,
    n_min: int = 1,
) -> VerificationReport:
    items = [
        (g6, 1, alpha, vertex_cap)
        for g6 in _hosts(n_max, n_min)
        for alpha in sorted(alpha_set)
    ]
    return _run_items(
        "reduction-min1tough",
        {"nMax": n_max, "alphaSet": sorted(alpha_set), "vertexCap": vertex_cap},
        items,
        _w_min_t_tough,
        jobs,
    )


def verify_reduction_min_t_tough(
    t: int,
    n_max: int,
    alpha_set: Iterable[int],
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    jobs: int = 1,
    n_min: int = 1,
) -> VerificationReport:
    if t < 1:
        raise DomainError("t must be a positive integer")
    items = [
        (g6, t, alpha, vertex_cap)
        for g6 in _hosts(n_max, n_min)
        for alpha in sorted(alpha_set)
    ]
    return _run_items(
        "reduction-min-t-tough",
        {"t": t, "nMax": n_max, "alphaSet": sorted(alpha_set), "vertexCap": vertex_cap},
        items,
        _w_min_t_tough,
        jobs,
    )


# -- pendant reduction (1/b) ----------------------------------------------


def _w_one_over_b(item) -> _CheckResult:
    g6, b, cap = item
    g = parse_graph6(g6)
    key = f"{g6}|b={b}"
    if g.n * b > cap:
        return key, "skip", f"gadget size {g.n * b} exceeds cap {cap}"
    left = is_almost_minimally_1_tough(g).holds
    gadget, _ = attach_pendants(g, b)
    right = is_minimally_t_tough(gadget, Fraction(1, b))[0]
    if left == right:
        return key, "pass", ""
    return key, "fail", f"almost-minimal={left} but gadget minimal={right}"


def verify_reduction_one_over_b(
    b: int,
    n_max: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    jobs: int = 1,
    n_min: int = 1,
) -> VerificationReport:
    if b < 2:
        raise DomainError("b must be at least 2")
    items = [(g6, b, vertex_cap) for g6 in _hosts(n_max, n_min)]
    return _run_items(
        "reduction-one-over-b",
        {"b": b, "nMax": n_max, "vertexCap": vertex_cap},
        items,
        _w_one_over_b,
        jobs,
    )


# -- glued reduction (a/b <= 1/2) -----------------------------------------


def _w_a_over_b(item) -> _CheckResult:
    g6, a, b, h6, u, cap = item
    g = parse_graph6(g6)
    h_prime = parse_graph6(h6)
    key = f"{g6}|a={a}|b={b}"
    size = g.n * (h_prime.n - 1)
    if size > cap:
        return key, "skip", f"gadget size {size} exceeds cap {cap}"
    left = is_almost_minimally_1_tough(g).holds
    gadget, _ = glue(g, h_prime, u)
    right = is_minimally_t_tough(gadget, Fraction(a, b))[0]
    if left == right:
        return key, "pass", ""
    return key, "fail", f"almost-minimal={left} but glued gadget minimal={right}"


def verify_reduction_a_over_b(
    a: int,
    b: int,
    n_max: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    jobs: int = 1,
    n_min: int = 1,
) -> VerificationReport:
    if a < 1 or b < 2 * a or gcd(a, b) != 1:
        raise DomainError("need positive coprime a, b with b >= 2a")
    h, _ = build_h(a, b)
    h_prime = minimize_to_h_prime(h, Fraction(a, b))
    u = glue_vertex_for_h_prime(h_prime, a, b)
    h6 = to_graph6(h_prime)
    items = [(g6, a, b, h6, u, vertex_cap) for g6 in _hosts(n_max, n_min)]
    return _run_items(
        "reduction-a-over-b",
        {"a": a, "b": b, "nMax": n_max, "vertexCap": vertex_cap},
        items,
        _w_a_over_b,
        jobs,
    )


# -- one-directional gadget toughness check -------------------------------


def _w_gadget_tough(item) -> _CheckResult:
    g6, t, alpha, cap = item
    g = parse_graph6(g6)
    key = f"{g6}|t={t}|alpha={alpha}"
    if g.n < 2:
        return key, "skip", "host needs at least one edge"
    if g.n < t:
        return key, "skip", f"host smaller than t={t}"
    if independence_number(g).alpha > alpha:
        return key, "skip", f"hypothesis fails: alpha(G) > {alpha}"
    size = 2 * g.n * t * alpha + t * alpha
    if size > cap:
        return key, "skip", f"gadget size {size} exceeds cap {cap}"
    gadget, _ = build_g_t_alpha(g, t, alpha)
    if is_t_tough(gadget, Fraction(t))[0]:
        return key, "pass", ""
    return key, "fail", f"gadget is not {t}-tough"


def verify_g_alpha_tough(
    n_max: int,
    alpha_set: Iterable[int],
    t: int = 1,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    jobs: int = 1,
    n_min: int = 1,
) -> VerificationReport:
    items = [
        (g6, t, alpha, vertex_cap)
        for g6 in _hosts(n_max, n_min)
        for alpha in sorted(alpha_set)
    ]
    return _run_items(
        "g-alpha-tough",
        {"t": t, "nMax": n_max, "alphaSet": sorted(alpha_set), "vertexCap": vertex_cap},
        items,
        _w_gadget_tough,
        jobs,
    )


# -- clique blow-up preserves alpha-criticality ---------------------------


def _w_blowup(item) -> _CheckResult:
    g6, v, size, cap = item
    g = parse_graph6(g6)
    key = f"{g6}|v={v}|size={size}"
    if not is_alpha_critical_graph(g):
        return key, "skip", "base graph is not alpha-critical"
    if g.n + size - 1 > cap:
        return key, "skip", f"blown-up size exceeds cap {cap}"
    if is_alpha_critical_graph(blow_up(g, v, size)):
        return key, "pass", ""
    return key, "fail", "blow-up lost alpha-criticality"


def verify_blowup_alpha_critical(
    base_set: Iterable[Graph],
    size_max: int,
    vertex_cap: int = 12,
    jobs: int = 1,
) -> VerificationReport:
    items = []
    for g in base_set:
        g6 = to_graph6(g)
        for v in range(g.n):
            for size in range(1, size_max + 1):
                items.append((g6, v, size, vertex_cap))
    return _run_items(
        "blowup-alpha-critical",
        {"sizeMax": size_max, "vertexCap": vertex_cap},
        items,
        _w_blowup,
        jobs,
    )


# -- bundled structural invariants ----------------------------------------


def _w_structural(item) -> _CheckResult:
    g6 = item
    g = parse_graph6(g6)
    problems = []
    res = toughness(g)
    if g.is_connected() and not g.is_complete():
        val = res.value
        if not val.is_finite:
            problems.append("toughness not finite on connected noncomplete graph")
        else:
            a, b = val.value.numerator, val.value.denominator
            if not (1 <= a <= g.n - 1 and 1 <= b <= g.n - 1):
                problems.append(f"ratio bound violated: {a}/{b}")
            w = res.witness
            if w is None or w.ratio != val.value or not w.recheck(g):
                problems.append("tough-set witness fails recheck")
            elif w.component_count < 2:
                problems.append("tough-set witness is not a cutset")
    if not check_almost_minimal_characterizations(g):
        problems.append("trichotomy characterizations disagree")
    for t in (Fraction(1), Fraction(1, 2)):
        ok, cert = is_minimally_t_tough(g, t)
        if ok and not verify_certificate(g, t, cert):
            problems.append(f"certificate at t={t} fails recheck")
    if problems:
        return g6, "fail", "; ".join(problems)
    return g6, "pass", ""


def verify_structural_invariants(n_max: int, jobs: int = 1) -> VerificationReport:
    if n_max > 7:
        raise DomainError("structural sweep capped at n_max = 7")
    items = _hosts(n_max)
    report = _run_items(
        "structural", {"nMax": n_max}, items, _w_structural, jobs
    )
    # pairwise toughness-gap check, one synthetic item per vertex count
    start = time.perf_counter()
    for n in range(1, n_max + 1):
        report.total += 1
        taus = []
        for g in enumerate_connected_graphs(n):
            if not g.is_complete():
                taus.append((to_graph6(g), toughness(g).value.value))
        bad = []
        for i in range(len(taus)):
            for j in range(i + 1, len(taus)):
                d = taus[i][1] - taus[j][1]
                if d != 0 and abs(d) * n * n <= 1:
                    bad.append(f"{taus[i][0]}|{taus[j][0]}")
        if bad:
            report.failed.append(f"gap:n={n}: " + ", ".join(bad))
        else:
            report.passed += 1
    report.wall_time += time.perf_counter() - start
    return report


# -- sweep specs for the CLI ----------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    """Named harness check plus its parameters, as driven by the CLI."""

    check: str
    n_max: int = 4
    n_min: int = 1
    alpha_set: tuple[int, ...] = (1,)
    t: int = 1
    a: int = 1
    b: int = 2
    size_max: int = 2
    vertex_cap: int = DEFAULT_VERTEX_CAP
    jobs: int = 1
    graphs: Optional[tuple[str, ...]] = None  # graph6 lines overriding the enumerator

    def run(self) -> VerificationReport:
        if self.check == "reduction-min1tough":
            return verify_reduction_min1tough(
                self.n_max, self.alpha_set, self.vertex_cap, self.jobs, self.n_min
            )
        if self.check == "reduction-min-t-tough":
            return verify_reduction_min_t_tough(
                self.t, self.n_max, self.alpha_set, self.vertex_cap, self.jobs, self.n_min
            )
        if self.check == "reduction-one-over-b":
            return verify_reduction_one_over_b(
                self.b, self.n_max, self.vertex_cap, self.jobs, self.n_min
            )
        if self.check == "reduction-a-over-b":
            return verify_reduction_a_over_b(
                self.a, self.b, self.n_max, self.vertex_cap, self.jobs, self.n_min
            )
        if self.check == "g-alpha-tough":
            return verify_g_alpha_tough(
                self.n_max, self.alpha_set, self.t, self.vertex_cap, self.jobs, self.n_min
            )
        if self.check == "blowup-alpha-critical":
            if self.graphs:
                bases = [parse_graph6(s) for s in self.graphs]
            else:
                bases = [Graph.cycle(5), Graph.cycle(7)]
            return verify_blowup_alpha_critical(
                bases, self.size_max, min(self.vertex_cap, 12), self.jobs
            )
        if self.check == "structural":
            return verify_structural_invariants(self.n_max, self.jobs)
        raise DomainError(f"unknown check {self.check!r}")
