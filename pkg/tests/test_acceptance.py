"""Acceptance gate: ten end-to-end criteria, one pass/fail line each.

Run with `pytest -v tests/test_acceptance.py` (add -s to see the lines).
Time budgets assume the numba kernels are already compiled (the session
fixture warms them up).
"""

import time
from fractions import Fraction
from math import gcd

import networkx as nx

from toughgraph import (
    Graph,
    Toughness,
    build_h,
    components_after_removal,
    enumerate_connected_graphs,
    is_minimally_t_tough,
    minimize_to_h_prime,
    parse_graph6,
    to_graph6,
    tough_set_with_ratio,
    toughness,
    toughness_via_decision,
    verify_blowup_alpha_critical,
    verify_reduction_a_over_b,
    verify_reduction_min1tough,
    verify_reduction_min_t_tough,
    verify_reduction_one_over_b,
    verify_structural_invariants,
)

from conftest import petersen


class _Budget:
    def __init__(self, seconds):
        self.limit = seconds
        self.start = time.perf_counter()

    def done(self, criterion, detail):
        elapsed = time.perf_counter() - self.start
        assert elapsed < self.limit, f"criterion {criterion} over budget: {elapsed:.1f}s"
        print(f"criterion {criterion}: PASS ({detail}; {elapsed:.1f}s)")


def coprime_pairs(b_max):
    return [
        (a, b)
        for b in range(2, b_max + 1)
        for a in range(1, b // 2 + 1)
        if b >= 2 * a and gcd(a, b) == 1
    ]


def test_criterion_01_oracle_equivalence():
    budget = _Budget(10)
    total = checked = mismatches = 0
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            total += 1
            if g.is_complete():
                continue
            checked += 1
            a = toughness(g)
            b = toughness_via_decision(g)
            if a.value != b.value or a.witness.removed != b.witness.removed:
                mismatches += 1
    assert total == 143
    assert checked == 137  # 143 connected graphs minus K_1..K_6
    assert mismatches == 0
    budget.done(1, f"{checked} noncomplete graphs, 0 mismatches")


def test_criterion_02_known_values():
    budget = _Budget(10)
    assert toughness(Graph.path(4)).value == Toughness.finite(Fraction(1, 2))
    for n in range(4, 9):
        assert toughness(Graph.cycle(n)).value == Toughness.finite(1)
    for b in range(2, 6):
        assert toughness(Graph.star(b)).value == Toughness.finite(Fraction(1, b))
    assert toughness(petersen()).value == Toughness.finite(Fraction(4, 3))
    pairs = coprime_pairs(7)
    for a, b in pairs:
        h, _ = build_h(a, b)
        assert toughness(h).value == Toughness.finite(Fraction(a, b))
    budget.done(2, f"paths/cycles/stars/Petersen plus {len(pairs)} clique-pendant graphs")


def test_criterion_03_min1tough_biconditional():
    budget = _Budget(15 * 60 + 30 * 60)
    report = verify_reduction_min1tough(4, [1, 2])
    assert report.failed == []
    assert report.passed > 0
    # larger host: C_5 with alpha=2 on the 22-vertex gadget
    ext = verify_reduction_min1tough(5, [2], n_min=5)
    assert ext.failed == []
    key = to_graph6(Graph.cycle(5)) + "|t=1|alpha=2"
    assert not any(s["graph"] == key for s in ext.skipped)
    budget.done(3, f"n<=4 sweep {report.passed} passed + n=5 extension {ext.passed}")


def test_criterion_04_min_t_tough_biconditional():
    budget = _Budget(60)
    report = verify_reduction_min_t_tough(2, 3, [1], n_min=3)
    assert report.failed == [] and report.passed == 2
    # t=1 sweep agrees with the plain construction's sweep verdict for verdict
    a = verify_reduction_min1tough(4, [1, 2])
    b = verify_reduction_min_t_tough(1, 4, [1, 2])
    assert (a.passed, a.failed, a.skipped) == (b.passed, b.failed, b.skipped)
    budget.done(4, "t=2 on 14-vertex gadgets; t=1 sweep matches")


def test_criterion_05_one_over_b_biconditional():
    budget = _Budget(5 * 60)
    for b in (2, 3):
        report = verify_reduction_one_over_b(b, 5)
        assert report.failed == []
        assert report.total == 31  # connected hosts on <= 5 vertices
    budget.done(5, "b in {2,3}, all 31 hosts each")


def test_criterion_06_a_over_b_biconditional():
    budget = _Budget(20 * 60)
    r13 = verify_reduction_a_over_b(1, 3, 5)
    assert r13.failed == [] and not r13.skipped
    r25 = verify_reduction_a_over_b(2, 5, 4)
    assert r25.failed == [] and not r25.skipped
    budget.done(6, f"(1,3): {r13.passed} hosts; (2,5): {r25.passed} hosts")


def test_criterion_07_structural_invariants():
    budget = _Budget(60 + 15 * 60)
    r5 = verify_structural_invariants(5)
    assert r5.failed == []
    r6 = verify_structural_invariants(6)
    assert r6.failed == []
    budget.done(7, f"n<=5: {r5.passed} checks; n<=6: {r6.passed} checks")


def test_criterion_08_blowup_preserves_criticality():
    budget = _Budget(60)
    report = verify_blowup_alpha_critical(
        [Graph.cycle(5), Graph.cycle(7)], 3, vertex_cap=9
    )
    assert report.failed == [] and not report.skipped
    assert report.passed == 12 * 3  # 12 vertices x sizes 1..3
    budget.done(8, f"{report.passed} blow-ups, all alpha-critical")


def test_criterion_09_graph6_round_trip():
    budget = _Budget(1)
    count = 0
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            line = to_graph6(g)
            assert to_graph6(parse_graph6(line)) == line
            count += 1
    # 100 externally generated lines (networkx encoder as the outside source)
    rng_lines = []
    for seed in range(100):
        gg = nx.gnp_random_graph(4 + seed % 17, 0.4, seed=seed)
        rng_lines.append(nx.to_graph6_bytes(gg, header=False).decode().strip())
    for line in rng_lines:
        assert to_graph6(parse_graph6(line)) == line
    assert len(rng_lines) == 100
    budget.done(9, f"{count} corpus graphs + 100 external lines, byte-exact")


def test_criterion_10_h_prime_postconditions():
    budget = _Budget(2 * 60)
    pairs = coprime_pairs(7)
    for a, b in pairs:
        t = Fraction(a, b)
        hp = minimize_to_h_prime(build_h(a, b)[0], t)
        assert is_minimally_t_tough(hp, t)[0]
        for i in range(a):
            assert hp.degree(b + i) == 1
        assert components_after_removal(hp, range(a)) == b
        w = tough_set_with_ratio(hp, t)
        assert w is not None and w.ratio == t
    budget.done(10, f"{len(pairs)} coprime pairs with b <= 7")
