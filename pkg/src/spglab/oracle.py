"""Slow, obviously-correct reference computations.

These exist to validate the fast checkers and to compute tiny extremal
values by exhaustive search.  Budgets are hard limits: exceeding one
raises :class:`BudgetExceeded` rather than silently truncating, because
a wrong oracle is worse than none.
"""

import itertools
import time
from dataclasses import dataclass

from .checks import CheckResult, fails, holds
from .core import ConnectedLayerFamily, Spg, SymbolSet, dset_mask, restriction
from .errors import BudgetExceeded


@dataclass(frozen=True)
class OracleBudget:
    max_symbols: int = 6
    max_dimension: int = 3
    max_dsets: int = 24
    time_limit: float = 60.0

    def __post_init__(self):
        if min(self.max_symbols, self.max_dimension, self.max_dsets) < 1:
            raise BudgetExceeded("budget limits must be positive")
        if self.time_limit <= 0:
            raise BudgetExceeded("time limit must be positive")


DEFAULT_BUDGET = OracleBudget()


class _Deadline:
    def __init__(self, seconds: float, what: str):
        self.expires = time.monotonic() + seconds
        self.what = what

    def check(self):
        if time.monotonic() > self.expires:
            raise BudgetExceeded(f"{self.what} exceeded its time budget")


def _require(ok: bool, message: str):
    if not ok:
        raise BudgetExceeded(message)


def brute_dimension_reduction(g: Spg, budget: OracleBudget = DEFAULT_BUDGET) -> CheckResult:
    """Check the literal quantifier: every face F with |F| <= d gives a
    connected restriction.  Witness: the first failing face in
    (size, lex) order.
    """
    _require(g.symbols.n <= budget.max_symbols,
             f"n={g.symbols.n} exceeds budget max_symbols={budget.max_symbols}")
    _require(g.d <= budget.max_dimension,
             f"d={g.d} exceeds budget max_dimension={budget.max_dimension}")
    _require(len(g.dsets) <= budget.max_dsets,
             f"family size {len(g.dsets)} exceeds budget max_dsets={budget.max_dsets}")
    deadline = _Deadline(budget.time_limit, "brute dimension-reduction check")
    for size in range(g.d + 1):
        for face in itertools.combinations(range(g.symbols.n), size):
            deadline.check()
            if not restriction(g, face).connected:
                return fails(face)
    return holds()


def brute_diameter(g: Spg, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """All-pairs shortest paths by triangle relaxation; cross-checks BFS."""
    k = len(g.vertices)
    _require(k <= budget.max_dsets,
             f"block count {k} exceeds budget max_dsets={budget.max_dsets}")
    big = k + 1
    dist = [[0 if i == j else big for j in range(k)] for i in range(k)]
    for i, j in g.edges:
        dist[i][j] = dist[j][i] = 1
    for mid in range(k):
        row_mid = dist[mid]
        for i in range(k):
            row_i = dist[i]
            via = row_i[mid]
            for j in range(k):
                if via + row_mid[j] < row_i[j]:
                    row_i[j] = via + row_mid[j]
    return max(dist[i][j] for i in range(k) for j in range(k))


@dataclass(frozen=True)
class MaxClfResult:
    """Outcome of the exhaustive layer-family search."""

    value: int
    witness: ConnectedLayerFamily
    isomorphism_classes: int


def _canonical_sequence(seq, n: int):
    """Minimal relabeling of a layer sequence over all symbol permutations."""
    best = None
    for perm in itertools.permutations(range(n)):
        image = tuple(
            tuple(sorted(tuple(sorted(perm[s] for s in a)) for a in layer))
            for layer in seq
        )
        if best is None or image < best:
            best = image
    return best


def brute_max_clf_diameter(n: int, d: int, budget: OracleBudget = DEFAULT_BUDGET,
                           one_subset: bool = True) -> MaxClfResult:
    """Exhaustive search for the longest connected layer family on n symbols.

    With ``one_subset`` every layer is a single d-set; the search roots
    every sequence at {0..d-1}, which is sound isomorph rejection since
    any family can be relabeled to start there.  The general mode
    enumerates ordered layer partitions of every subfamily and is only
    practical for very small n.  Returns the maximum diameter, the first
    witness found, and the number of isomorphism classes (under symbol
    permutations) attaining the maximum.
    """
    _require(n <= budget.max_symbols,
             f"n={n} exceeds budget max_symbols={budget.max_symbols}")
    _require(d <= budget.max_dimension,
             f"d={d} exceeds budget max_dimension={budget.max_dimension}")
    if d < 1 or n < d:
        raise BudgetExceeded(f"no d-sets exist for n={n}, d={d}")
    all_dsets = list(itertools.combinations(range(n), d))
    _require(len(all_dsets) <= budget.max_dsets,
             f"{len(all_dsets)} d-sets exceed budget max_dsets={budget.max_dsets}")
    deadline = _Deadline(budget.time_limit, "layer-family search")
    masks = {a: dset_mask(a) for a in all_dsets}

    best = {"t": -1, "seqs": []}

    def record(layers):
        t = len(layers) - 1
        if t > best["t"]:
            best["t"] = t
            best["seqs"] = [tuple(layers)]
        elif t == best["t"]:
            best["seqs"].append(tuple(layers))

    if one_subset:
        root = tuple(range(d))

        def extend(seq, seq_masks):
            deadline.check()
            record([(a,) for a in seq])
            used = set(seq)
            for cand in all_dsets:
                if cand in used:
                    continue
                mc = masks[cand]
                ok = True
                for i in range(len(seq) - 1):
                    f = seq_masks[i] & mc
                    if any(f & ~seq_masks[j] for j in range(i + 1, len(seq))):
                        ok = False
                        break
                if ok:
                    extend(seq + [cand], seq_masks + [mc])

        extend([root], [masks[root]])
    else:

        def layer_ok(layers, layer_masks, new_layer_masks):
            k = len(layers)
            for i in range(k - 1):
                for ma in layer_masks[i]:
                    for mb in new_layer_masks:
                        f = ma & mb
                        for j in range(i + 1, k):
                            if not any(f & ~m == 0 for m in layer_masks[j]):
                                return False
            return True

        def extend(used, layers, layer_masks):
            deadline.check()
            record(layers)
            remaining = [a for a in all_dsets if a not in used]
            for size in range(1, len(remaining) + 1):
                for combo in itertools.combinations(remaining, size):
                    new_masks = [masks[a] for a in combo]
                    if layer_ok(layers, layer_masks, new_masks):
                        extend(used | set(combo), layers + [combo],
                               layer_masks + [new_masks])

        for size in range(1, len(all_dsets) + 1):
            for combo in itertools.combinations(all_dsets, size):
                extend(set(combo), [combo], [[masks[a] for a in combo]])

    classes = {_canonical_sequence(seq, n) for seq in best["seqs"]}
    witness_layers = best["seqs"][0]
    witness = ConnectedLayerFamily(SymbolSet(n), d, witness_layers)
    return MaxClfResult(best["t"], witness, len(classes))
