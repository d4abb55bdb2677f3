import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from dmds.graph import build_from_edges, cycle_graph, gnp_random_graph, is_dominating_set, path_graph, star_graph
from dmds.oracle import (
    OracleAborted,
    OracleInfeasible,
    OracleTooLarge,
    brute_force_min_dominating_set,
    exact_min_dominating_set,
    verify_solution,
)
from dmds.reductions import ReductionOutcome

from conftest import graphs


def test_star():
    assert exact_min_dominating_set(star_graph(5)) == {0}


def test_c6_needs_two():
    c6 = cycle_graph(6)
    assert not any(is_dominating_set(c6, {v}) for v in range(6))
    assert is_dominating_set(c6, {0, 3})
    assert len(exact_min_dominating_set(c6)) == 2


def test_p4_needs_two():
    p4 = path_graph(4)
    assert not any(is_dominating_set(p4, {v}) for v in range(4))
    assert any(is_dominating_set(p4, set(s)) for s in combinations(range(4), 2))
    assert len(exact_min_dominating_set(p4)) == 2


@pytest.mark.parametrize("n", range(3, 21))
def test_cycles(n):
    assert len(exact_min_dominating_set(cycle_graph(n))) == math.ceil(n / 3)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_matches_brute_force(g):
    d = exact_min_dominating_set(g)
    assert is_dominating_set(g, d)
    assert len(d) == len(brute_force_min_dominating_set(g))


def test_matches_brute_force_with_constraints():
    rng = random.Random(3)
    for _ in range(200):
        g = gnp_random_graph(rng.randint(1, 11), rng.choice([0.1, 0.3, 0.5]), rng)
        fixed = {v for v in range(g.n) if rng.random() < 0.15}
        barred = {v for v in range(g.n) if v not in fixed and rng.random() < 0.2}
        try:
            ref = brute_force_min_dominating_set(g, fixed, barred)
        except OracleInfeasible:
            with pytest.raises(OracleInfeasible):
                exact_min_dominating_set(g, fixed, barred)
            continue
        d = exact_min_dominating_set(g, fixed, barred)
        assert fixed <= d and not (d & barred)
        assert is_dominating_set(g, d)
        assert len(d) == len(ref)


def test_refuses_large_graphs():
    with pytest.raises(OracleTooLarge):
        exact_min_dominating_set(cycle_graph(27))


def test_node_limit_aborts():
    g = gnp_random_graph(24, 0.15, random.Random(1))
    with pytest.raises(OracleAborted):
        exact_min_dominating_set(g, node_limit=5)


def test_undominatable_vertex():
    g = build_from_edges(2, [(0, 1)])
    with pytest.raises(OracleInfeasible):
        exact_min_dominating_set(g, barred={0, 1})


def test_verify_solution():
    g = cycle_graph(6)
    red = ReductionOutcome(frozenset({0}), frozenset({1}))
    assert verify_solution(g, range(6))
    assert verify_solution(g, {0, 3}, red)
    assert not verify_solution(g, {2, 5}, red)  # misses fixed vertex 0
    assert not verify_solution(g, {0, 1, 3}, red)  # contains excluded vertex 1
    assert not verify_solution(g, {0})
