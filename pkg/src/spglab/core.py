"""Core types and structural operations for subset partition graphs.

A *subset partition graph* (SPG) over a symbol set of size ``n`` is a
connected graph whose vertices are pairwise-disjoint, nonempty blocks of
d-element subsets ("d-sets") of the symbols.  The blocks partition a
family of d-sets; beyond connectivity the graph is unconstrained, and
combinatorial properties of interest are checked separately (see
:mod:`spglab.checks`).  Connected layer families and base abstractions
are the path-shaped and node-per-d-set relatives of the same structure.

All values are immutable; every operation returns a new value.  D-sets
are plain sorted tuples of 0-based symbols, blocks are lexicographically
sorted tuples of d-sets, and edges are (i, j) index pairs with i < j, so
equality, hashing and serialization are deterministic.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadEdge,
    DisconnectedGraph,
    DisconnectedInput,
    DSetNotPresent,
    EdgeExists,
    EmptyBlock,
    InvalidApices,
    InvalidClf,
    NoSuchEdge,
    NotAPath,
    NotASpindle,
    OverlappingBlocks,
    SelfLoop,
    UnknownSymbol,
    WrongCardinality,
)

# A d-set is a strictly increasing tuple of symbols; a block is a
# lexicographically sorted tuple of d-sets.
DSet = tuple
Block = tuple
Edge = tuple


def as_dset(symbols) -> DSet:
    """Canonicalize an iterable of symbols into a sorted, duplicate-free tuple."""
    members = tuple(sorted(int(s) for s in symbols))
    for a, b in zip(members, members[1:]):
        if a == b:
            raise WrongCardinality(f"duplicate symbol {a} in d-set {list(members)}")
    return members


def dset_mask(dset) -> int:
    mask = 0
    for s in dset:
        mask |= 1 << s
    return mask


def mask_to_dset(mask: int) -> DSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class SymbolSet:
    """The ground set: symbols are the integers 0..n-1, with optional display labels."""

    n: int
    labels: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise WrongCardinality(f"symbol set must be nonempty, got n={self.n}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
            if len(self.labels) != self.n:
                raise WrongCardinality(
                    f"{len(self.labels)} labels for {self.n} symbols")
            if len(set(self.labels)) != self.n:
                raise WrongCardinality("labels must be distinct")

    def label(self, s: int) -> str:
        return self.labels[s] if self.labels else str(s)


@dataclass(frozen=True)
class Spg:
    """A subset partition graph in canonical form.  Build via :func:`make_spg`."""

    symbols: SymbolSet
    d: int
    vertices: tuple  # tuple of blocks, each a sorted tuple of d-sets
    edges: tuple     # sorted tuple of (i, j) pairs, i < j
    apices: tuple = None  # optional recorded spindle apices (pair of d-sets)

    @property
    def n(self) -> int:
        return self.symbols.n

    @property
    def t(self) -> int:
        return len(self.vertices) - 1

    @cached_property
    def dsets(self) -> tuple:
        """The family of d-sets, flattened in block-index order."""
        return tuple(a for block in self.vertices for a in block)

    @cached_property
    def block_of(self) -> dict:
        return {a: i for i, block in enumerate(self.vertices) for a in block}

    @cached_property
    def block_masks(self) -> tuple:
        return tuple(tuple(dset_mask(a) for a in block) for block in self.vertices)

    @cached_property
    def adjacency(self) -> tuple:
        nbrs = [[] for _ in self.vertices]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @property
    def is_complete(self) -> bool:
        k = len(self.vertices)
        return len(self.edges) == k * (k - 1) // 2


@dataclass(frozen=True)
class RestrictedView:
    """Blocks and edges of an SPG that survive restriction to a face.

    Not itself an SPG: the view may be empty or disconnected.
    """

    parent: Spg
    face: tuple
    surviving_blocks: tuple
    induced_edges: tuple

    @cached_property
    def components(self) -> tuple:
        """Connected components of the surviving blocks, each sorted, in min-index order."""
        alive = set(self.surviving_blocks)
        nbrs = {i: [] for i in self.surviving_blocks}
        for i, j in self.induced_edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        comps = []
        for start in self.surviving_blocks:
            if start not in alive:
                continue
            comp = [start]
            alive.discard(start)
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in nbrs[u]:
                    if v in alive:
                        alive.discard(v)
                        comp.append(v)
                        queue.append(v)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def connected(self) -> bool:
        """Empty and single-block views count as connected."""
        return len(self.components) <= 1


@dataclass(frozen=True)
class ConnectedLayerFamily:
    """Ordered, disjoint, nonempty layers of d-sets.  Diameter is len(layers)-1.

    The between-layer connectivity property is *not* enforced by the
    constructor; check it with :func:`clf_connectivity_witness` or
    :func:`spglab.checks.check_clf`.
    """

    symbols: SymbolSet
    d: int
    layers: tuple

    @property
    def n(self) -> int:
        return self.symbols.n

    @property
    def diameter(self) -> int:
        return len(self.layers) - 1

    @cached_property
    def dsets(self) -> tuple:
        return tuple(a for layer in self.layers for a in layer)


@dataclass(frozen=True)
class BaseAbstraction:
    """A connected graph on d-sets themselves (one d-set per node)."""

    symbols: SymbolSet
    d: int
    nodes: tuple  # sorted tuple of d-sets
    edges: tuple  # sorted tuple of (i, j) node-index pairs, i < j

    @property
    def n(self) -> int:
        return self.symbols.n

    @cached_property
    def node_index(self) -> dict:
        return {a: i for i, a in enumerate(self.nodes)}

    @cached_property
    def adjacency(self) -> tuple:
        nbrs = [[] for _ in self.nodes]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_set


@dataclass(frozen=True)
class DiameterResult:
    value: int
    farthest_pair: tuple


@dataclass(frozen=True)
class Layering:
    """Distance layers from a root, plus the verdict of the layer-connectivity check."""

    clf: ConnectedLayerFamily
    valid: bool
    witness: tuple = None


# -- construction ---------------------------------------------------------------

def _as_symbolset(symbols) -> SymbolSet:
    return symbols if isinstance(symbols, SymbolSet) else SymbolSet(int(symbols))


def _canonical_blocks(symbols: SymbolSet, d: int, raw_blocks) -> tuple:
    if d < 1:
        raise WrongCardinality(f"dimension must be >= 1, got {d}")
    blocks = []
    owner = {}
    for i, raw in enumerate(raw_blocks):
        block = tuple(sorted({as_dset(a) for a in raw}))
        if not block:
            raise EmptyBlock(f"block {i} is empty")
        for a in block:
            if len(a) != d:
                raise WrongCardinality(
                    f"d-set {list(a)} in block {i} has {len(a)} symbols, expected {d}")
            if a[0] < 0 or a[-1] >= symbols.n:
                raise UnknownSymbol(
                    f"d-set {list(a)} in block {i} uses a symbol outside 0..{symbols.n - 1}")
            if a in owner:
                raise OverlappingBlocks(
                    f"d-set {list(a)} appears in blocks {owner[a]} and {i}")
            owner[a] = i
        blocks.append(block)
    if not blocks:
        raise EmptyBlock("a subset partition graph needs at least one block")
    return tuple(blocks)


def _canonical_edges(count: int, raw_edges) -> tuple:
    edges = set()
    for e in raw_edges:
        i, j = (int(x) for x in e)
        if i == j:
            raise BadEdge(f"self-loop at block {i}")
        if not (0 <= i < count and 0 <= j < count):
            raise BadEdge(f"edge ({i}, {j}) out of range for {count} blocks")
        edges.add((min(i, j), max(i, j)))
    return tuple(sorted(edges))


def _bfs_distances(adjacency, start: int):
    dist = [None] * len(adjacency)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def make_spg(symbols, d: int, vertex_blocks, edges, apices=None) -> Spg:
    """Validate and canonicalize into an :class:`Spg`.

    Blocks keep their given order (indices are vertex identity); within a
    block d-sets are sorted, and edges are normalized to sorted (i, j)
    pairs with duplicates collapsed.
    """
    symbols = _as_symbolset(symbols)
    blocks = _canonical_blocks(symbols, d, vertex_blocks)
    edge_t = _canonical_edges(len(blocks), edges)

    nbrs = [[] for _ in blocks]
    for i, j in edge_t:
        nbrs[i].append(j)
        nbrs[j].append(i)
    dist = _bfs_distances(nbrs, 0)
    if any(x is None for x in dist):
        missing = next(i for i, x in enumerate(dist) if x is None)
        raise DisconnectedGraph(f"block {missing} is unreachable from block 0")

    if apices is not None:
        a1, a2 = (as_dset(a) for a in apices)
        owner = {a for block in blocks for a in block}
        if a1 not in owner or a2 not in owner:
            raise InvalidApices(f"apices {list(a1)}, {list(a2)} must be members of the family")
        if dset_mask(a1) & dset_mask(a2):
            raise InvalidApices("apices must be disjoint")
        if dset_mask(a1) | dset_mask(a2) != (1 << symbols.n) - 1:
            raise InvalidApices("apices must cover every symbol")
        apices = (a1, a2) if a1 <= a2 else (a2, a1)

    return Spg(symbols, d, blocks, edge_t, apices)


def make_clf(symbols, d: int, layers) -> ConnectedLayerFamily:
    """Validate layer shape (nonempty, disjoint, d-sets in range); not connectivity."""
    symbols = _as_symbolset(symbols)
    blocks = _canonical_blocks(symbols, d, layers)
    return ConnectedLayerFamily(symbols, d, blocks)


def make_base(symbols, d: int, nodes, edges) -> BaseAbstraction:
    """Build a base abstraction from d-sets and edges given as d-set pairs."""
    symbols = _as_symbolset(symbols)
    node_blocks = _canonical_blocks(symbols, d, [[a] for a in nodes])
    node_t = tuple(sorted(b[0] for b in node_blocks))
    index = {a: i for i, a in enumerate(node_t)}
    raw = []
    for a, b in edges:
        a, b = as_dset(a), as_dset(b)
        if a not in index or b not in index:
            missing = a if a not in index else b
            raise DSetNotPresent(f"edge endpoint {list(missing)} is not a node")
        raw.append((index[a], index[b]))
    edge_t = _canonical_edges(len(node_t), raw)
    nbrs = [[] for _ in node_t]
    for i, j in edge_t:
        nbrs[i].append(j)
        nbrs[j].append(i)
    dist = _bfs_distances(nbrs, 0)
    if any(x is None for x in dist):
        missing = next(i for i, x in enumerate(dist) if x is None)
        raise DisconnectedInput(f"node {list(node_t[missing])} is unreachable")
    return BaseAbstraction(symbols, d, node_t, edge_t)


# -- restriction -----------------------------------------------------------------

def restriction(g: Spg, face) -> RestrictedView:
    """Keep only blocks containing at least one d-set that contains ``face``.

    Edges between surviving blocks are kept as-is.  The result may be
    empty or disconnected; it is a view, not an SPG.
    """
    face = as_dset(face)
    if face and (face[0] < 0 or face[-1] >= g.symbols.n):
        raise UnknownSymbol(f"face {list(face)} uses a symbol outside 0..{g.symbols.n - 1}")
    fmask = dset_mask(face)
    surviving = tuple(
        i for i, masks in enumerate(g.block_masks)
        if any(fmask & ~m == 0 for m in masks)
    )
    alive = set(surviving)
    induced = tuple(e for e in g.edges if e[0] in alive and e[1] in alive)
    return RestrictedView(g, face, surviving, induced)


# -- contraction and edge addition -------------------------------------------------

def contraction(g: Spg, edge) -> Spg:
    """Merge the two endpoint blocks of an existing edge.

    The merged block takes index min(i, j); blocks after j shift down by
    one, incident edges are re-targeted, self-loops dropped and parallel
    edges collapsed.
    """
    i, j = sorted(int(x) for x in edge)
    if not g.has_edge(i, j):
        raise NoSuchEdge(f"({i}, {j}) is not an edge")
    merged = tuple(sorted(g.vertices[i] + g.vertices[j]))
    blocks = [merged if k == i else blk
              for k, blk in enumerate(g.vertices) if k != j]

    def remap(k):
        if k == j:
            return i
        return k - 1 if k > j else k

    edges = set()
    for a, b in g.edges:
        a2, b2 = remap(a), remap(b)
        if a2 != b2:
            edges.add((min(a2, b2), max(a2, b2)))
    return make_spg(g.symbols, g.d, blocks, sorted(edges), g.apices)


def edge_addition(g: Spg, i: int, j: int) -> Spg:
    """Return the same SPG with one extra edge {i, j}."""
    i, j = int(i), int(j)
    if i == j:
        raise SelfLoop(f"cannot add a loop at block {i}")
    k = len(g.vertices)
    if not (0 <= i < k and 0 <= j < k):
        raise BadEdge(f"edge ({i}, {j}) out of range for {k} blocks")
    if g.has_edge(i, j):
        raise EdgeExists(f"({min(i, j)}, {max(i, j)}) is already an edge")
    edges = sorted(g.edges + ((min(i, j), max(i, j)),))
    return make_spg(g.symbols, g.d, g.vertices, edges, g.apices)


# -- distances -------------------------------------------------------------------

def diameter(g: Spg) -> DiameterResult:
    """Graph diameter of the block graph, with the first pair (lex order) realizing it."""
    best = 0
    pair = (0, 0)
    for i in range(len(g.vertices)):
        dist = _bfs_distances(g.adjacency, i)
        for j in range(i + 1, len(g.vertices)):
            if dist[j] > best:
                best = dist[j]
                pair = (i, j)
    return DiameterResult(best, pair)


def distance(g: Spg, a, b) -> int:
    """Block distance between the blocks containing two d-sets."""
    a, b = as_dset(a), as_dset(b)
    try:
        i = g.block_of[a]
    except KeyError:
        raise DSetNotPresent(f"d-set {list(a)} does not occur in the family") from None
    try:
        j = g.block_of[b]
    except KeyError:
        raise DSetNotPresent(f"d-set {list(b)} does not occur in the family") from None
    if i == j:
        return 0
    return _bfs_distances(g.adjacency, i)[j]


def find_apices(g: Spg):
    """First pair (lex order) of family members partitioning the symbol set, or None."""
    if g.symbols.n != 2 * g.d:
        return None
    if g.apices is not None:
        return g.apices
    present = set(g.dsets)
    full = (1 << g.symbols.n) - 1
    for a in sorted(present):
        comp = mask_to_dset(full ^ dset_mask(a))
        if comp in present and a <= comp:
            return (a, comp)
    return None


def spindle_length(g: Spg) -> int:
    """Block distance between the spindle apices."""
    apices = find_apices(g)
    if apices is None:
        raise NotASpindle(
            "no two family members partition the symbol set"
            if g.symbols.n == 2 * g.d else f"n={g.symbols.n} is not 2*d={2 * g.d}")
    return distance(g, apices[0], apices[1])


# -- layering and conversions -------------------------------------------------------

def clf_connectivity_witness(layers):
    """First (i, j, k, A, A') such that no member of layer j contains A∩A', or None.

    Scanned in ascending (i, k, A, A', j) order, so the witness is
    deterministic.  A cache keyed by (intersection, j) keeps repeated
    faces cheap.
    """
    layer_masks = [[dset_mask(a) for a in layer] for layer in layers]
    cache = {}
    for i in range(len(layers)):
        for k in range(i + 2, len(layers)):
            for a, ma in zip(layers[i], layer_masks[i]):
                for b, mb in zip(layers[k], layer_masks[k]):
                    f = ma & mb
                    for j in range(i + 1, k):
                        key = (f, j)
                        hit = cache.get(key)
                        if hit is None:
                            hit = any(f & ~m == 0 for m in layer_masks[j])
                            cache[key] = hit
                        if not hit:
                            return (i, j, k, a, b)
    return None


def spg_layering(g: Spg, root) -> Layering:
    """Layers of d-sets by block distance from the root's block.

    The layers always partition the family; whether they satisfy the
    layer-connectivity property is reported in the ``valid`` flag (it can
    fail when the graph does not have the dimension reduction property).
    """
    root = as_dset(root)
    try:
        start = g.block_of[root]
    except KeyError:
        raise DSetNotPresent(f"d-set {list(root)} does not occur in the family") from None
    dist = _bfs_distances(g.adjacency, start)
    ecc = max(dist)
    raw = [[] for _ in range(ecc + 1)]
    for k, block in enumerate(g.vertices):
        raw[dist[k]].extend(block)
    layers = tuple(tuple(sorted(layer)) for layer in raw)
    clf = ConnectedLayerFamily(g.symbols, g.d, layers)
    witness = clf_connectivity_witness(layers)
    return Layering(clf, witness is None, witness)


def base_layering(b: BaseAbstraction, root) -> ConnectedLayerFamily:
    """Distance layers of a base abstraction from a root d-set."""
    root = as_dset(root)
    try:
        start = b.node_index[root]
    except KeyError:
        raise DSetNotPresent(f"d-set {list(root)} is not a node") from None
    dist = _bfs_distances(b.adjacency, start)
    ecc = max(dist)
    raw = [[] for _ in range(ecc + 1)]
    for k, node in enumerate(b.nodes):
        raw[dist[k]].append(node)
    layers = tuple(tuple(sorted(layer)) for layer in raw)
    return ConnectedLayerFamily(b.symbols, b.d, layers)


def clf_to_base(clf: ConnectedLayerFamily) -> BaseAbstraction:
    """Graph on the d-sets with edges between members of the same or adjacent layers."""
    witness = clf_connectivity_witness(clf.layers)
    if witness is not None:
        i, j, k, a, b = witness
        raise InvalidClf(
            f"layers {i} < {j} < {k}: no member of layer {j} contains "
            f"{list(a)} ∩ {list(b)}")
    layer_of = {}
    for li, layer in enumerate(clf.layers):
        for a in layer:
            layer_of[a] = li
    nodes = tuple(sorted(clf.dsets))
    edges = []
    for x in range(len(nodes)):
        for y in range(x + 1, len(nodes)):
            if abs(layer_of[nodes[x]] - layer_of[nodes[y]]) <= 1:
                edges.append((x, y))
    return BaseAbstraction(clf.symbols, clf.d, nodes, tuple(edges))


def clf_to_spg(clf: ConnectedLayerFamily) -> Spg:
    """The path-shaped SPG whose blocks are the layers in order."""
    edges = [(i, i + 1) for i in range(len(clf.layers) - 1)]
    return make_spg(clf.symbols, clf.d, clf.layers, edges)


def path_order(g: Spg):
    """Block indices in path order (smaller endpoint first), or None if not a path."""
    k = len(g.vertices)
    if k == 1:
        return [0]
    if len(g.edges) != k - 1:
        return None
    degs = [g.degree(i) for i in range(k)]
    if max(degs) > 2:
        return None
    ends = [i for i, dg in enumerate(degs) if dg == 1]
    if len(ends) != 2:
        return None
    order = [min(ends)]
    prev = None
    while len(order) < k:
        cur = order[-1]
        nxt = [v for v in g.adjacency[cur] if v != prev]
        if len(nxt) != 1:
            return None
        prev = cur
        order.append(nxt[0])
    return order


def spg_to_clf(g: Spg) -> ConnectedLayerFamily:
    """Reinterpret a path-shaped SPG as layers along the path."""
    order = path_order(g)
    if order is None:
        raise NotAPath("the underlying graph is not a path")
    layers = tuple(g.vertices[i] for i in order)
    return ConnectedLayerFamily(g.symbols, g.d, layers)
