"""Property-based invariants over randomly built small SPGs."""

import itertools

from hypothesis import given, settings, strategies as st

import spglab as sl
from spglab.spgjson import dumps, parse, serialize


@st.composite
def small_spgs(draw):
    n = draw(st.integers(2, 5))
    d = draw(st.integers(1, min(3, n - 1)))
    universe = list(itertools.combinations(range(n), d))
    family = sorted(draw(st.sets(st.sampled_from(universe), min_size=1, max_size=6)))
    k = draw(st.integers(1, len(family)))
    assignment = [i if i < k else draw(st.integers(0, k - 1))
                  for i in range(len(family))]
    blocks = [[] for _ in range(k)]
    for dset, target in zip(family, assignment):
        blocks[target].append(dset)
    edges = set()
    for i in range(1, k):
        edges.add((draw(st.integers(0, i - 1)), i))
    extra = draw(st.sets(
        st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)), max_size=6))
    for i, j in extra:
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return sl.make_spg(n, d, blocks, sorted(edges))


@given(small_spgs())
@settings(max_examples=150, deadline=None)
def test_round_trip_serialization(g):
    assert parse(serialize(g)) == g
    assert dumps(serialize(parse(serialize(g)))) == dumps(serialize(g))


@given(small_spgs(), st.data())
@settings(max_examples=150, deadline=None)
def test_restriction_monotone_in_the_face(g, data):
    member = data.draw(st.sampled_from(g.dsets))
    large_face = data.draw(st.sets(st.sampled_from(member)))
    small_face = data.draw(st.sets(st.sampled_from(sorted(large_face))) if large_face
                           else st.just(set()))
    big = sl.restriction(g, sorted(large_face))
    small = sl.restriction(g, sorted(small_face))
    assert set(big.surviving_blocks) <= set(small.surviving_blocks)
    assert set(big.induced_edges) <= set(small.induced_edges)


@given(small_spgs(), st.data())
@settings(max_examples=150, deadline=None)
def test_distance_axioms(g, data):
    a = data.draw(st.sampled_from(g.dsets))
    b = data.draw(st.sampled_from(g.dsets))
    c = data.draw(st.sampled_from(g.dsets))
    dab = sl.distance(g, a, b)
    assert (dab == 0) == (g.block_of[a] == g.block_of[b])
    assert dab == sl.distance(g, b, a)
    assert dab <= sl.distance(g, a, c) + sl.distance(g, c, b)


@given(small_spgs(), st.data())
@settings(max_examples=120, deadline=None)
def test_moves_shrink_geometry(g, data):
    before = sl.diameter(g).value
    if g.edges:
        edge = data.draw(st.sampled_from(g.edges))
        contracted = sl.contraction(g, edge)
        assert len(contracted.vertices) == len(g.vertices) - 1
        after = sl.diameter(contracted).value
        assert before - 1 <= after <= before
    k = len(g.vertices)
    missing = [(i, j) for i in range(k) for j in range(i + 1, k)
               if not g.has_edge(i, j)]
    if missing:
        i, j = data.draw(st.sampled_from(missing))
        assert sl.diameter(sl.edge_addition(g, i, j)).value <= before


@given(small_spgs(), st.data())
@settings(max_examples=100, deadline=None)
def test_single_move_preserves_main_properties(g, data):
    held = {p: sl.violations(g, (p,)) == []
            for p in ("dimension-reduction", "adjacency", "endpoint-count")}
    k = len(g.vertices)
    moves = [sl.Move("contract", e) for e in g.edges]
    moves += [sl.Move("addEdge", (i, j)) for i in range(k)
              for j in range(i + 1, k) if not g.has_edge(i, j)]
    if not moves:
        return
    move = data.draw(st.sampled_from(moves))
    after = sl.apply_move(g, move)
    for prop, was_held in held.items():
        if was_held:
            assert sl.violations(after, (prop,)) == [], (prop, move)


@given(small_spgs())
@settings(max_examples=100, deadline=None)
def test_layering_valid_when_dimension_reduction_holds(g):
    if not sl.check_dimension_reduction(g).ok:
        return
    for root in g.dsets:
        layering = sl.spg_layering(g, root)
        assert layering.valid
        assert sl.check_clf(layering.clf).ok


@given(small_spgs())
@settings(max_examples=100, deadline=None)
def test_endpoint_count_plus_dr_implies_adjacency(g):
    if sl.check_endpoint_count(g).ok and sl.check_dimension_reduction(g).ok:
        assert sl.check_adjacency(g).ok
