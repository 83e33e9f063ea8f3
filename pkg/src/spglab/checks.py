"""Property checkers for subset partition graphs and their relatives.

Each checker returns a :class:`CheckResult`: ``ok`` plus a concrete
witness when the property fails (for the spindle property the witness is
the apex pair on success instead).  Checkers are total: they never raise
on degenerate but valid inputs such as a single-block graph.
"""

from dataclasses import dataclass

from .core import (
    BaseAbstraction,
    ConnectedLayerFamily,
    Spg,
    as_dset,
    clf_connectivity_witness,
    dset_mask,
    find_apices,
    mask_to_dset,
    path_order,
    restriction,
)
from .errors import InvalidClf

MAIN_PROPERTIES = (
    "dimension-reduction",
    "adjacency",
    "strong-adjacency",
    "endpoint-count",
)

ALL_PROPERTIES = MAIN_PROPERTIES + (
    "polytopal-endpoint-count",
    "one-subset",
    "d-regularity",
    "d-connectedness",
    "d-neighbors",
    "spindle",
    "clf-shape",
    "ultraconnected",
)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def holds(witness=None) -> CheckResult:
    return CheckResult(True, witness)


def fails(witness) -> CheckResult:
    return CheckResult(False, witness)


# -- main properties ---------------------------------------------------------------

def check_dimension_reduction(g: Spg) -> CheckResult:
    """Every restriction to a face of size <= d is connected.

    Only faces of the form F = A ∩ A' over pairs of family members are
    tested.  This is complete: if some G_F is disconnected with surviving
    members A, A' in different components, then F' := A ∩ A' ⊇ F, the
    survivors of F' are a subset of the survivors of F, and any path in
    G_{F'} is a path in G_F — so G_{F'} is disconnected as well and the
    pair (A, A') exhibits it.  Faces with fewer than two survivors are
    connected by convention.  Witness: the separating face.
    """
    ds = g.dsets
    masks = [dset_mask(a) for a in ds]
    seen = set()
    for x in range(len(ds)):
        for y in range(x + 1, len(ds)):
            f = masks[x] & masks[y]
            if f in seen:
                continue
            seen.add(f)
            face = mask_to_dset(f)
            if not restriction(g, face).connected:
                return fails(face)
    return holds()


def check_adjacency(g: Spg) -> CheckResult:
    """D-sets sharing d-1 symbols lie in the same or adjacent blocks.  Witness: the pair."""
    ds = g.dsets
    masks = [dset_mask(a) for a in ds]
    want = g.d - 1
    for x in range(len(ds)):
        for y in range(x + 1, len(ds)):
            if (masks[x] & masks[y]).bit_count() != want:
                continue
            i, j = g.block_of[ds[x]], g.block_of[ds[y]]
            if i != j and not g.has_edge(i, j):
                return fails((ds[x], ds[y]))
    return holds()


def check_strong_adjacency(g: Spg) -> CheckResult:
    """Adjacency holds and every edge {i, j} is witnessed by A in block i, A' in
    block j with |A ∩ A'| = d-1.

    (The witnessing pair is read as one member from each endpoint block.)
    Witness: ("pair", A, A') for an adjacency failure, ("edge", (i, j))
    for an unwitnessed edge.
    """
    adj = check_adjacency(g)
    if not adj.ok:
        return fails(("pair",) + adj.witness)
    want = g.d - 1
    for i, j in g.edges:
        mi = g.block_masks[i]
        mj = g.block_masks[j]
        if not any((a & b).bit_count() == want for a in mi for b in mj):
            return fails(("edge", (i, j)))
    return holds()


def check_endpoint_count(g: Spg, mode: str = "polyhedral") -> CheckResult:
    """Each (d-1)-set lies in at most 2 family members ("polyhedral") or in
    exactly 0 or 2 ("polytopal").

    Counts are accumulated over the d facets of each member, so only
    faces actually contained in some member are ever touched.  Witness:
    (face, count).
    """
    if mode not in ("polyhedral", "polytopal"):
        raise ValueError(f"unknown endpoint-count mode {mode!r}")
    counts = {}
    for a in g.dsets:
        m = dset_mask(a)
        for s in a:
            facet = m ^ (1 << s)
            counts[facet] = counts.get(facet, 0) + 1
    for facet, c in counts.items():
        if c > 2 or (mode == "polytopal" and c == 1):
            return fails((mask_to_dset(facet), c))
    return holds()


# -- auxiliary properties -------------------------------------------------------------

def check_one_subset(g: Spg) -> CheckResult:
    """Every block is a singleton.  Witness: the first offending block index."""
    for i, block in enumerate(g.vertices):
        if len(block) != 1:
            return fails(i)
    return holds()


def check_d_regularity(g: Spg) -> CheckResult:
    """Every graph vertex has degree exactly d.  Witness: (block, degree)."""
    for i in range(len(g.vertices)):
        if g.degree(i) != g.d:
            return fails((i, g.degree(i)))
    return holds()


def check_d_neighbors(g: Spg) -> CheckResult:
    """Every member has exactly d other members at intersection size d-1.

    Witness: (d-set, count).
    """
    ds = g.dsets
    masks = [dset_mask(a) for a in ds]
    want = g.d - 1
    for x in range(len(ds)):
        c = sum(
            1 for y in range(len(ds))
            if y != x and (masks[x] & masks[y]).bit_count() == want
        )
        if c != g.d:
            return fails((ds[x], c))
    return holds()


def _vertex_disjoint_paths(adjacency, s: int, t: int, need: int) -> int:
    """Count vertex-disjoint s-t paths by unit-capacity flow, stopping at ``need``.

    Vertices are split into in/out halves with capacity 1 (s and t are
    uncapacitated), so augmenting paths are internally vertex-disjoint.
    """
    n = len(adjacency)
    big = n + 1
    cap = {}
    out = [[] for _ in range(2 * n)]

    def add(u, v, c):
        if (u, v) not in cap:
            out[u].append(v)
            out[v].append(u)
            cap[(u, v)] = 0
            cap[(v, u)] = 0
        cap[(u, v)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for v in adjacency[u]:
            add(2 * u + 1, 2 * v, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < need:
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for u in queue:
                for v in out[u]:
                    if cap[(u, v)] > 0 and v not in parent:
                        parent[v] = u
                        nxt.append(v)
            queue = nxt
        if sink not in parent:
            break
        v = sink
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1
    return flow


def check_d_connectedness(g: Spg) -> CheckResult:
    """Vertex connectivity of the block graph is at least d.

    Decided by counting vertex-disjoint paths between all non-adjacent
    pairs; a complete graph on m blocks passes exactly when m - 1 >= d.
    Witness: ("pair", i, j, paths) or ("complete", m - 1).
    """
    k = len(g.vertices)
    nonadjacent = [
        (i, j) for i in range(k) for j in range(i + 1, k) if not g.has_edge(i, j)
    ]
    if not nonadjacent:
        return holds() if k - 1 >= g.d else fails(("complete", k - 1))
    for i, j in nonadjacent:
        flow = _vertex_disjoint_paths(g.adjacency, i, j, g.d)
        if flow < g.d:
            return fails(("pair", i, j, flow))
    return holds()


def check_spindle(g: Spg) -> CheckResult:
    """Some two family members partition the symbol set (requires n = 2d).

    On success the witness carries the apex pair found (recorded apices
    are used when present, otherwise the lexicographically first pair).
    """
    apices = find_apices(g)
    if apices is None:
        return fails(None)
    return holds(apices)


# -- layer families and base abstractions ----------------------------------------------

def check_clf(layers) -> CheckResult:
    """Between-layer connectivity: for i < j < k, each A ∈ layer i, A' ∈ layer k
    has a superset of A ∩ A' in layer j.  Witness: (i, j, k, A, A').
    """
    if isinstance(layers, ConnectedLayerFamily):
        canon = layers.layers
    else:
        canon = tuple(tuple(sorted(as_dset(a) for a in layer)) for layer in layers)
        if not canon or any(not layer for layer in canon):
            raise InvalidClf("layers must be nonempty")
        seen = set()
        for layer in canon:
            for a in layer:
                if a in seen:
                    raise InvalidClf(f"d-set {list(a)} appears in two layers")
                seen.add(a)
    witness = clf_connectivity_witness(canon)
    return holds() if witness is None else fails(witness)


def check_clf_shape(g: Spg) -> CheckResult:
    """The underlying graph is a path and its blocks, in path order, form a
    valid connected layer family.

    Witness: ("not-a-path", None) or ("connectivity", (i, j, k, A, A')).
    """
    order = path_order(g)
    if order is None:
        return fails(("not-a-path", None))
    layers = tuple(g.vertices[i] for i in order)
    witness = clf_connectivity_witness(layers)
    if witness is not None:
        return fails(("connectivity", witness))
    return holds()


def check_base_abstraction(b: BaseAbstraction) -> CheckResult:
    """Every pair of nodes is joined by a path through supersets of their
    intersection.  Witness: the first failing pair.
    """
    masks = [dset_mask(a) for a in b.nodes]
    n = len(b.nodes)
    for p in range(n):
        for q in range(p + 1, n):
            f = masks[p] & masks[q]
            allowed = [f & ~m == 0 for m in masks]
            seen = {p}
            queue = [p]
            reached = False
            while queue and not reached:
                nxt = []
                for u in queue:
                    for v in b.adjacency[u]:
                        if v in seen or not allowed[v]:
                            continue
                        if v == q:
                            reached = True
                            break
                        seen.add(v)
                        nxt.append(v)
                    if reached:
                        break
                queue = nxt
            if not reached:
                return fails((b.nodes[p], b.nodes[q]))
    return holds()


def check_ultraconnected(obj) -> CheckResult:
    """Edges coincide with intersection size d-1.

    For a base abstraction this is the literal condition on node pairs.
    For an SPG it is read at block level: blocks i ≠ j are adjacent
    exactly when some cross pair intersects in d-1 symbols (the natural
    generalization; it reduces to the node condition for singleton
    blocks).  Witness: ("false-edge"|"missing-edge", pair).
    """
    if isinstance(obj, BaseAbstraction):
        masks = [dset_mask(a) for a in obj.nodes]
        want = obj.d - 1
        for p in range(len(obj.nodes)):
            for q in range(p + 1, len(obj.nodes)):
                linked = (masks[p] & masks[q]).bit_count() == want
                if linked != obj.has_edge(p, q):
                    kind = "missing-edge" if linked else "false-edge"
                    return fails((kind, (obj.nodes[p], obj.nodes[q])))
        return holds()
    g = obj
    want = g.d - 1
    for i in range(len(g.vertices)):
        for j in range(i + 1, len(g.vertices)):
            linked = any(
                (a & b).bit_count() == want
                for a in g.block_masks[i] for b in g.block_masks[j]
            )
            if linked != g.has_edge(i, j):
                kind = "missing-edge" if linked else "false-edge"
                return fails((kind, (i, j)))
    return holds()


# -- aggregation -----------------------------------------------------------------------

@dataclass(frozen=True)
class PropertyReport:
    """Deterministic name -> CheckResult map over all checkable properties."""

    results: tuple  # tuple of (name, CheckResult) in ALL_PROPERTIES order

    def check(self, name: str) -> CheckResult:
        for key, result in self.results:
            if key == name:
                return result
        raise KeyError(name)

    def ok(self, name: str) -> bool:
        return self.check(name).ok

    def failures(self) -> tuple:
        return tuple((k, r.witness) for k, r in self.results if not r.ok)

    def as_dict(self) -> dict:
        return dict(self.results)


def property_report(g: Spg) -> PropertyReport:
    """Run every checker against an SPG."""
    results = (
        ("dimension-reduction", check_dimension_reduction(g)),
        ("adjacency", check_adjacency(g)),
        ("strong-adjacency", check_strong_adjacency(g)),
        ("endpoint-count", check_endpoint_count(g, "polyhedral")),
        ("polytopal-endpoint-count", check_endpoint_count(g, "polytopal")),
        ("one-subset", check_one_subset(g)),
        ("d-regularity", check_d_regularity(g)),
        ("d-connectedness", check_d_connectedness(g)),
        ("d-neighbors", check_d_neighbors(g)),
        ("spindle", check_spindle(g)),
        ("clf-shape", check_clf_shape(g)),
        ("ultraconnected", check_ultraconnected(g)),
    )
    return PropertyReport(results)
