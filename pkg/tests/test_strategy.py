"""Violation reporting, move repair, greedy search, trace replay."""

import random

import pytest

import spglab as sl
from spglab.errors import BadParameter, BudgetExhausted
from spglab.spgjson import dumps, trace_to_document
from spglab.strategy import ADD_EDGE, CONTRACT, Move

from .helpers import random_legal_move, random_spg


def bad_path():
    return sl.make_spg(3, 2, [[(0, 1)], [(1, 2)], [(0, 2)]], [(0, 1), (1, 2)])


def test_violations_spindle_and_figure1():
    viols = sl.violations(sl.gen_spindle_family(2), sl.MAIN_PROPERTIES)
    assert [prop for prop, _ in viols] == ["dimension-reduction"]

    assert sl.violations(sl.gen_figure1(), ("dimension-reduction",)) == []

    with pytest.raises(BadParameter):
        sl.violations(sl.gen_figure1(), ("one-subset",))


def test_violations_complete_graph_never_lists_dr_or_adjacency():
    g = bad_path()
    while not g.is_complete:
        k = len(g.vertices)
        i, j = next((i, j) for i in range(k) for j in range(i + 1, k)
                    if not g.has_edge(i, j))
        g = sl.edge_addition(g, i, j)
    props = [prop for prop, _ in sl.violations(g, sl.MAIN_PROPERTIES)]
    assert "dimension-reduction" not in props
    assert "adjacency" not in props


def test_candidate_moves_repair_dimension_reduction_witness():
    g = bad_path()
    (prop, witness), = sl.violations(g, ("dimension-reduction",))
    moves = sl.candidate_moves(g, (prop, witness))
    assert Move(ADD_EDGE, (0, 2)) in moves
    for move in moves:
        after = sl.apply_move(g, move)
        assert sl.restriction(after, witness).connected


def test_candidate_moves_strong_adjacency_edge_contracts():
    g = sl.make_spg(4, 2, [[(0, 1)], [(2, 3)]], [(0, 1)])
    (prop, witness), = sl.violations(g, ("strong-adjacency",))
    assert witness == ("edge", (0, 1))
    assert sl.candidate_moves(g, (prop, witness)) == [Move(CONTRACT, (0, 1))]


def test_candidate_moves_endpoint_count_unrepairable():
    g = sl.make_spg(4, 2, [[(0, 1)], [(0, 2)], [(0, 3)]], [(0, 1), (1, 2)])
    viols = sl.violations(g, ("endpoint-count",))
    assert viols and sl.candidate_moves(g, viols[0]) == []


def test_scored_moves_ranked_by_post_diameter():
    g = sl.gen_spindle_family(2)
    (violation,) = sl.violations(g, ("dimension-reduction",))
    scored = sl.scored_candidate_moves(g, violation)
    assert scored
    diameters = [dia for _, dia in scored]
    assert diameters == sorted(diameters, reverse=True)


def test_strategy_search_already_compliant_gives_empty_trace():
    trace = sl.strategy_search(sl.gen_figure1(), sl.MAIN_PROPERTIES, budget=10)
    assert trace.steps == ()
    assert trace.final == trace.initial


def test_strategy_search_budget_zero():
    with pytest.raises(BudgetExhausted) as err:
        sl.strategy_search(sl.gen_spindle_family(2), sl.MAIN_PROPERTIES, budget=0)
    assert err.value.trace is not None
    assert err.value.trace.steps == ()


def test_strategy_search_spindle_reaches_all_targets():
    g = sl.gen_spindle_family(2)
    trace = sl.strategy_search(g, sl.MAIN_PROPERTIES, budget=200)
    assert sl.violations(trace.final, sl.MAIN_PROPERTIES) == []
    assert len(trace.steps) <= 200
    # diameter never increases along the trace
    diameters = [sl.diameter(g).value] + [s.diameter for s in trace.steps]
    assert all(b <= a for a, b in zip(diameters, diameters[1:]))


def test_strategy_trace_preservation_along_the_way():
    g = sl.gen_spindle_family(2)
    trace = sl.strategy_search(g, sl.MAIN_PROPERTIES, budget=200)
    watched = ("dimension-reduction", "adjacency", "endpoint-count")
    held = {p: sl.violations(g, (p,)) == [] for p in watched}
    for step in trace.steps:
        for p in watched:
            if held[p]:
                assert step.report.ok(p), p
            held[p] = step.report.ok(p)


def test_strategy_replay_and_determinism():
    g = sl.gen_spindle_family(2)
    t1 = sl.strategy_search(g, sl.MAIN_PROPERTIES, budget=200)
    t2 = sl.strategy_search(g, sl.MAIN_PROPERTIES, budget=200)
    assert dumps(trace_to_document(t1)) == dumps(trace_to_document(t2))
    states = t1.replay()
    assert states[-1] == t1.final
    # replay reproduces each recorded diameter
    for state, step in zip(states[1:], t1.steps):
        assert sl.diameter(state).value == step.diameter


def test_beam_search_mode():
    g = bad_path()
    trace = sl.strategy_search(g, ("adjacency",), budget=50, beam_width=8)
    assert sl.violations(trace.final, ("adjacency",)) == []
    again = sl.strategy_search(g, ("adjacency",), budget=50, beam_width=8)
    assert dumps(trace_to_document(trace)) == dumps(trace_to_document(again))


def test_random_move_sequences_preserve_gained_properties():
    rng = random.Random(424242)
    watched = ("dimension-reduction", "adjacency", "endpoint-count")
    for _ in range(30):
        g = random_spg(rng)
        held = {p: sl.violations(g, (p,)) == [] for p in watched}
        dia = sl.diameter(g).value
        for _ in range(rng.randint(1, 6)):
            move = random_legal_move(rng, g)
            if move is None:
                break
            g = sl.apply_move(g, move)
            new_dia = sl.diameter(g).value
            assert new_dia <= dia
            dia = new_dia
            for p in watched:
                now = sl.violations(g, (p,)) == []
                if held[p]:
                    assert now, (p, move)
                held[p] = now
