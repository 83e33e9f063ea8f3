"""Move search: gain missing main properties via contraction and edge addition.

The engine is an experimentation harness, not an optimizer.  It finds a
current violation, enumerates moves that make that particular witness go
away, ranks them by the diameter of the graph after the move (higher
first, because both operations can only shrink distances and the point
of the exercise is to lose as little diameter as possible), and applies
the best one.  Endpoint-count violations have no repairing move at all:
the family of d-sets never changes, so a search should start from a
graph that already has that property.
"""

import logging
from dataclasses import dataclass

from .checks import (
    MAIN_PROPERTIES,
    PropertyReport,
    check_adjacency,
    check_dimension_reduction,
    check_endpoint_count,
    check_strong_adjacency,
    property_report,
)
from .core import Spg, contraction, diameter, edge_addition, restriction
from .errors import BadParameter, BudgetExhausted

logger = logging.getLogger(__name__)

_TARGET_CHECKERS = {
    "dimension-reduction": check_dimension_reduction,
    "adjacency": check_adjacency,
    "strong-adjacency": check_strong_adjacency,
    "endpoint-count": check_endpoint_count,
}

CONTRACT = "contract"
ADD_EDGE = "addEdge"


@dataclass(frozen=True)
class Move:
    kind: str
    endpoints: tuple

    def __post_init__(self):
        if self.kind not in (CONTRACT, ADD_EDGE):
            raise BadParameter(f"unknown move kind {self.kind!r}")
        i, j = self.endpoints
        object.__setattr__(self, "endpoints", (min(i, j), max(i, j)))


@dataclass(frozen=True)
class TraceStep:
    move: Move
    diameter: int
    report: PropertyReport


@dataclass(frozen=True)
class StrategyTrace:
    initial: Spg
    steps: tuple
    final: Spg
    targets: tuple

    def moves(self) -> tuple:
        return tuple(step.move for step in self.steps)

    def replay(self) -> list:
        """Reapply the recorded moves from the initial graph; the states must
        reproduce the trace exactly (the last one equals ``final``)."""
        states = [self.initial]
        for step in self.steps:
            states.append(apply_move(states[-1], step.move))
        return states


def apply_move(g: Spg, move: Move) -> Spg:
    if move.kind == CONTRACT:
        return contraction(g, move.endpoints)
    return edge_addition(g, *move.endpoints)


def violations(g: Spg, targets) -> list:
    """Current failures among the requested main properties, with witnesses,
    in canonical property order."""
    targets = tuple(targets)
    unknown = [t for t in targets if t not in MAIN_PROPERTIES]
    if unknown:
        raise BadParameter(f"unknown target properties: {unknown}")
    out = []
    for prop in MAIN_PROPERTIES:
        if prop not in targets:
            continue
        result = _TARGET_CHECKERS[prop](g)
        if not result.ok:
            out.append((prop, result.witness))
    return out


def _repairs_dimension_reduction(g: Spg, face):
    view = restriction(g, face)
    base = len(view.components)
    cands = []
    comps = view.components
    for ci in range(len(comps)):
        for cj in range(ci + 1, len(comps)):
            for u in comps[ci]:
                for v in comps[cj]:
                    cands.append(Move(ADD_EDGE, (u, v)))
    cands.extend(Move(CONTRACT, e) for e in g.edges)
    keep = []
    for move in cands:
        after = restriction(apply_move(g, move), face)
        if len(after.components) < base:
            keep.append(move)
    return keep


def _repairs_adjacency(g: Spg, pair):
    a, b = pair
    i, j = g.block_of[a], g.block_of[b]
    cands = [Move(ADD_EDGE, (i, j))]
    cands.extend(
        Move(CONTRACT, e) for e in g.edges if i in e or j in e
    )
    keep = []
    for move in cands:
        after = apply_move(g, move)
        i2, j2 = after.block_of[a], after.block_of[b]
        if i2 == j2 or after.has_edge(i2, j2):
            keep.append(move)
    return keep


def scored_candidate_moves(g: Spg, violation) -> list:
    """(move, diameter after move) pairs repairing the violation's witness,
    best-preserving first.

    Ties favor edge addition over contraction (it keeps the vertex
    count), then lower endpoints.  Strong-adjacency edge witnesses are
    repaired only by contracting the offending edge: adding edges can
    only create more unwitnessed edges.
    """
    prop, witness = violation
    if prop == "dimension-reduction":
        moves = _repairs_dimension_reduction(g, witness)
    elif prop == "adjacency":
        moves = _repairs_adjacency(g, witness)
    elif prop == "strong-adjacency":
        kind = witness[0]
        if kind == "pair":
            moves = _repairs_adjacency(g, witness[1:])
        else:
            moves = [Move(CONTRACT, witness[1])]
    elif prop == "endpoint-count":
        moves = []
    else:
        raise BadParameter(f"no repair rule for property {prop!r}")
    scored = [(move, diameter(apply_move(g, move)).value) for move in moves]
    scored.sort(key=lambda mv: (-mv[1], 0 if mv[0].kind == ADD_EDGE else 1,
                                mv[0].endpoints))
    return scored


def candidate_moves(g: Spg, violation) -> list:
    """Ranked repairing moves for one violation (see scored_candidate_moves)."""
    return [move for move, _ in scored_candidate_moves(g, violation)]


def strategy_search(g: Spg, targets=MAIN_PROPERTIES, budget: int = 200,
                    beam_width: int = 0) -> StrategyTrace:
    """Greedy best-first repair until every target holds or the budget runs out.

    Deterministic for fixed inputs.  Raises :class:`BudgetExhausted`
    (carrying the partial trace) when the budget is spent or no move can
    repair any remaining violation.  ``beam_width`` > 1 switches to a
    fixed-width beam over move sequences; the budget then counts every
    move applied to any beam line.
    """
    raw = tuple(targets)
    unknown = [t for t in raw if t not in MAIN_PROPERTIES]
    if unknown:
        raise BadParameter(f"unknown target properties: {unknown}")
    targets = tuple(t for t in MAIN_PROPERTIES if t in raw)
    if not check_endpoint_count(g).ok:
        logger.warning(
            "starting graph lacks the endpoint-count property; no move can gain it")
    if beam_width > 1:
        return _beam_search(g, targets, budget, beam_width)

    steps = []
    current = g
    while True:
        viols = violations(current, targets)
        if not viols:
            return StrategyTrace(g, tuple(steps), current, targets)
        if len(steps) >= budget:
            raise BudgetExhausted(
                f"budget of {budget} moves spent with {len(viols)} violations left",
                StrategyTrace(g, tuple(steps), current, targets))
        move = None
        for violation in viols:
            scored = scored_candidate_moves(current, violation)
            if scored:
                move = scored[0][0]
                break
        if move is None:
            raise BudgetExhausted(
                "no move repairs any remaining violation",
                StrategyTrace(g, tuple(steps), current, targets))
        current = apply_move(current, move)
        steps.append(TraceStep(move, diameter(current).value,
                               property_report(current)))


def _beam_search(g: Spg, targets, budget: int, width: int) -> StrategyTrace:
    beam = [(g, ())]
    spent = 0
    while True:
        for state, steps in beam:
            if not violations(state, targets):
                return StrategyTrace(g, steps, state, targets)
        pool = []
        for state, steps in beam:
            viols = violations(state, targets)
            scored = []
            for violation in viols:
                scored = scored_candidate_moves(state, violation)[:width]
                if scored:
                    break
            for move, dia in scored:
                if spent >= budget:
                    raise BudgetExhausted(
                        f"budget of {budget} moves spent",
                        StrategyTrace(g, beam[0][1], beam[0][0], targets))
                spent += 1
                after = apply_move(state, move)
                pool.append((after, steps + (TraceStep(
                    move, dia, property_report(after)),)))
        if not pool:
            raise BudgetExhausted(
                "no move repairs any remaining violation",
                StrategyTrace(g, beam[0][1], beam[0][0], targets))
        pool.sort(key=lambda item: (
            len(violations(item[0], targets)),
            -item[1][-1].diameter,
            tuple((s.move.kind, s.move.endpoints) for s in item[1]),
        ))
        beam = pool[:width]
