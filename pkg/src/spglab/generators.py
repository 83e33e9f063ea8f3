"""Concrete subset partition graph families.

Four families plus one fixture:

* :func:`gen_spindle_family` — the path-shaped spindle family G_m on
  4m symbols whose apex distance is 2m² (an eighth of n²).
* :func:`gen_cyclic_construction` — the family built from two mirrored
  copies of the polar of an even-dimensional cyclic polytope, joined
  along a Hamiltonian path of its dual graph.
* :func:`gen_cube_spg` — the vertex graph of the combinatorial cube.
* :func:`gen_hirsch_path_clf` — the sliding-window layer family
  {1..d}, {2..d+1}, ..., of diameter n-d.
* :func:`gen_figure1` — the 6-block, n=6, d=3 fixture equal to the
  3-cube after contracting the edges (123,126) and (345,456).

Symbol encodings are fixed so generated documents are byte-stable:
spindle symbol (i, j) -> 2(i-1)+(j-1); cyclic primed s' -> s+k; cube
opposite facets are s and s+dim.
"""

import itertools
from math import comb

from .core import ConnectedLayerFamily, Spg, SymbolSet, as_dset, make_clf, make_spg
from .errors import BadParameter, NoHamiltonianPath


# -- spindle family -------------------------------------------------------------------

def _spindle_index_set(m: int):
    triples = [(a, b, c) for a in range(m) for b in range(m) for c in (0, 1)]
    triples.append((m, 0, 0))
    return sorted(triples)


def _spindle_dset(m: int, a: int, b: int, c: int):
    """Members (i, j) of the d-set indexed by (a, b, c), encoded as 2(i-1)+(j-1)."""
    cells = []
    for i in range(a + 1, a + m - b):
        cells += [(i, 1), (i, 2)]
    for j in range(c + 1, 3):
        cells.append((a + m - b, j))
    for j in range(1, c + 1):
        cells.append((a + m - b + 1, j))
    for i in range(a + m - b + 2, a + m + 2):
        cells += [(i, 1), (i, 2)]
    return as_dset(2 * (i - 1) + (j - 1) for i, j in cells)


def gen_spindle_family(m: int) -> Spg:
    """The path G_m: singleton blocks A_{a,b,c} in lexicographic index order.

    n = 4m, d = 2m, 2m²+1 blocks; the first and last blocks are the
    recorded apices and their distance is 2m².
    """
    if m < 1:
        raise BadParameter(f"spindle family needs m >= 1, got {m}")
    index = _spindle_index_set(m)
    dsets = [_spindle_dset(m, *triple) for triple in index]
    labels = [f"({i},{j})" for i in range(1, 2 * m + 1) for j in (1, 2)]
    symbols = SymbolSet(4 * m, tuple(labels))
    blocks = [[a] for a in dsets]
    edges = [(i, i + 1) for i in range(len(dsets) - 1)]
    return make_spg(symbols, 2 * m, blocks, edges, apices=(dsets[0], dsets[-1]))


# -- cyclic polytope machinery -----------------------------------------------------------

def gale_facets(k: int, half_d: int) -> list:
    """Facets of the cyclic polytope with k vertices in dimension half_d
    (even), as 1-based half_d-subsets of {1..k} in lexicographic order.

    A subset F qualifies exactly when, for every pair i < j of
    non-members, the number of members strictly between i and j is even.
    """
    if half_d < 2 or half_d % 2 != 0:
        raise BadParameter(f"dimension must be even and >= 2, got {half_d}")
    if k <= half_d:
        raise BadParameter(f"need more vertices ({k}) than the dimension ({half_d})")
    facets = []
    for cand in itertools.combinations(range(1, k + 1), half_d):
        members = set(cand)
        non = [x for x in range(1, k + 1) if x not in members]
        ok = True
        for a in range(len(non)):
            i = non[a]
            for j in non[a + 1:]:
                if sum(1 for f in cand if i < f < j) % 2:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            facets.append(cand)
    return facets


def dual_graph(facets) -> dict:
    """Ridge adjacency: facet indices joined when they share all but one element."""
    facets = [as_dset(f) for f in facets]
    if len(set(facets)) != len(facets):
        raise BadParameter("facets must be pairwise distinct")
    if len({len(f) for f in facets}) > 1:
        raise BadParameter("facets must share one cardinality")
    sets = [set(f) for f in facets]
    size = len(facets[0]) if facets else 0
    adj = {i: [] for i in range(len(facets))}
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if len(sets[i] & sets[j]) == size - 1:
                adj[i].append(j)
                adj[j].append(i)
    return {i: tuple(sorted(ns)) for i, ns in adj.items()}


class _SearchCap(Exception):
    pass


def _ham_search(graph: dict, forbid_distance2_chords: bool, cap):
    nodes = sorted(graph)
    if not nodes:
        raise BadParameter("empty graph")
    total = len(nodes)
    nbr = {u: set(vs) for u, vs in graph.items()}
    spent = [0]

    def extend(path, visited):
        if cap is not None:
            spent[0] += 1
            if spent[0] > cap:
                raise _SearchCap()
        if len(path) == total:
            return path
        ranked = sorted(
            (v for v in graph[path[-1]] if v not in visited),
            key=lambda v: (sum(1 for w in graph[v] if w not in visited), v),
        )
        for v in ranked:
            if forbid_distance2_chords and len(path) >= 2 and v in nbr[path[-2]]:
                continue
            visited.add(v)
            path.append(v)
            found = extend(path, visited)
            if found is not None:
                return found
            path.pop()
            visited.discard(v)
        return None

    for start in nodes:
        found = extend([start], {start})
        if found is not None:
            return found
    return None


def hamiltonian_path(graph: dict) -> list:
    """A Hamiltonian ordering of the nodes, found by deterministic backtracking.

    Starts from node 0 (the lexicographically least facet when the graph
    came from :func:`dual_graph`); at each step unvisited neighbors are
    tried fewest-unvisited-neighbors-first with index ties broken
    ascending.  Later start nodes are tried in index order only if no
    path begins at an earlier one, so the result is reproducible.
    """
    found = _ham_search(graph, False, None)
    if found is None:
        raise NoHamiltonianPath(
            f"no Hamiltonian path in a graph on {len(graph)} nodes")
    return found


def _bridge_friendly_path(graph: dict) -> list:
    """A Hamiltonian path avoiding chords between positions two apart, when
    one can be found within a fixed search budget; otherwise any path.

    The bridging d-sets of consecutive rungs share the full middle half,
    so if the path also has a distance-2 chord they end up with d-1
    common symbols in non-adjacent blocks and the adjacency property
    breaks.  Chord-free paths avoid that entirely; they do not exist for
    every vertex count, in which case the plain path is used and the
    defect is observable through the checkers.
    """
    try:
        found = _ham_search(graph, True, 500_000)
    except _SearchCap:
        found = None
    return found if found is not None else hamiltonian_path(graph)


def cyclic_vertex_count(n: int, d: int) -> int:
    """Number of vertices of the polar: n/(n - d/2) * C(n/2 - d/4, d/4), exact."""
    numerator = n * comb(n // 2 - d // 4, d // 4)
    if numerator % (n - d // 2):
        raise BadParameter(f"vertex-count formula is not integral at (n={n}, d={d})")
    return numerator // (n - d // 2)


def gen_cyclic_construction(n: int, d: int) -> Spg:
    """Two mirrored polars of a cyclic polytope joined along a Hamiltonian path.

    Block layout: indices 0..t-1 are the singleton blocks {Z_i ∪ Z_i'}
    along the path; block t + 2(i-1) + (l-1) holds the bridging d-set
    W_{i,l} for i = 1..t-1, l = 1, 2.  Each W block is adjacent to its
    two neighboring Z blocks and the Z blocks are never directly
    adjacent, so the diameter is 2(t-1).

    The literal d-sets depend on which Hamiltonian path the deterministic
    search finds; the counts, properties and diameter do not.
    """
    if d < 8 or d % 4 != 0:
        raise BadParameter(f"dimension must be a positive multiple of 4, >= 8; got {d}")
    if n % 2 != 0 or n <= d:
        raise BadParameter(f"symbol count must be even and exceed d={d}; got {n}")
    k = n // 2
    facets = gale_facets(k, d // 2)
    t = len(facets)
    if t != cyclic_vertex_count(n, d):
        raise BadParameter(
            f"facet enumeration ({t}) disagrees with the vertex-count formula at (n={n}, d={d})")
    order = _bridge_friendly_path(dual_graph(facets))

    # 0-based symbols: facet element s in 1..k maps to s-1, its mirror to s-1+k.
    z = [frozenset(s - 1 for s in facets[i]) for i in order]
    blocks = [[as_dset(sorted(zi) + sorted(s + k for s in zi))] for zi in z]
    for i in range(t - 1):
        w1 = z[i + 1] | {s + k for s in z[i]}
        w2 = z[i] | {s + k for s in z[i + 1]}
        blocks.append([as_dset(w1)])
        blocks.append([as_dset(w2)])
    edges = []
    for i in range(t - 1):
        for l in (0, 1):
            w = t + 2 * i + l
            edges += [(i, w), (i + 1, w)]
    labels = [str(s + 1) for s in range(k)] + [f"{s + 1}'" for s in range(k)]
    return make_spg(SymbolSet(n, tuple(labels)), d, blocks, edges)


# -- cubes, paths and the six-block fixture ------------------------------------------------

def gen_cube_spg(dim: int) -> Spg:
    """The dim-cube as an SPG: opposite facets are the symbol pairs (s, s+dim),
    vertices pick one symbol per pair, edges swap a single pair.
    """
    if dim < 1:
        raise BadParameter(f"cube dimension must be >= 1, got {dim}")
    dsets = sorted(
        as_dset(s + dim * bit for s, bit in enumerate(choice))
        for choice in itertools.product((0, 1), repeat=dim)
    )
    index = {a: i for i, a in enumerate(dsets)}
    edges = []
    for a in dsets:
        for s in a:
            partner = s + dim if s < dim else s - dim
            b = as_dset([x for x in a if x != s] + [partner])
            if a < b:
                edges.append((index[a], index[b]))
    labels = tuple(str(s + 1) for s in range(2 * dim))
    return make_spg(SymbolSet(2 * dim, labels), dim, [[a] for a in dsets], edges)


def gen_hirsch_path_clf(n: int, d: int) -> ConnectedLayerFamily:
    """Sliding-window layers {i..i+d-1} for i = 0..n-d; diameter n-d."""
    if d < 1 or n <= d:
        raise BadParameter(f"need n > d >= 1, got n={n}, d={d}")
    layers = [[tuple(range(i, i + d))] for i in range(n - d + 1)]
    labels = tuple(str(s + 1) for s in range(n))
    return make_clf(SymbolSet(n, labels), d, layers)


def gen_figure1() -> Spg:
    """Six blocks over six symbols (d = 3): {123,126}, {135}, {156}, {234},
    {246}, {345,456} with ten edges — exactly the 3-cube after contracting
    (123,126) and (345,456).
    """
    blocks = [
        [(0, 1, 2), (0, 1, 5)],
        [(0, 2, 4)],
        [(0, 4, 5)],
        [(1, 2, 3)],
        [(1, 3, 5)],
        [(2, 3, 4), (3, 4, 5)],
    ]
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5),
    ]
    labels = tuple(str(s + 1) for s in range(6))
    return make_spg(SymbolSet(6, labels), 3, blocks, edges)
