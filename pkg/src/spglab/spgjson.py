"""Canonical JSON documents for graphs, reports and traces.

The graph document is::

    {"format": "spg/1", "n": 6, "d": 3, "labels": ["1", ...]?,
     "vertices": [[[0,1,2],[0,1,5]], ...], "edges": [[0,1], ...],
     "apices": [[0,1,2],[3,4,5]]?}

Symbols are 0-based, d-sets strictly ascending, block contents sorted
lexicographically, edges as [i, j] with i < j in sorted order.  Layer
families use the same document with "edges" omitted and "shape": "path".
Parsing is strict: a document that is not already canonical is rejected
with a diagnostic naming the offending entry, so parse∘serialize is the
identity on everything serialize emits.
"""

import json

from . import core
from .checks import CheckResult, PropertyReport
from .errors import DocumentSyntaxError, SpgError, ValidationError
from .strategy import Move, StrategyTrace

FORMAT_SPG = "spg/1"
FORMAT_REPORT = "spg-report/1"
FORMAT_TRACE = "spg-trace/1"


def dumps(doc) -> str:
    """Deterministic rendering used by the CLI and test goldens."""
    return json.dumps(doc, indent=2) + "\n"


# -- serialization ------------------------------------------------------------------

def spg_to_document(g: core.Spg) -> dict:
    doc = {"format": FORMAT_SPG, "n": g.symbols.n, "d": g.d}
    if g.symbols.labels is not None:
        doc["labels"] = list(g.symbols.labels)
    doc["vertices"] = [[list(a) for a in block] for block in g.vertices]
    doc["edges"] = [list(e) for e in g.edges]
    if g.apices is not None:
        doc["apices"] = [list(a) for a in g.apices]
    return doc


def clf_to_document(clf: core.ConnectedLayerFamily) -> dict:
    doc = {"format": FORMAT_SPG, "n": clf.symbols.n, "d": clf.d, "shape": "path"}
    if clf.symbols.labels is not None:
        doc["labels"] = list(clf.symbols.labels)
    doc["vertices"] = [[list(a) for a in layer] for layer in clf.layers]
    return doc


def serialize(obj) -> dict:
    if isinstance(obj, core.Spg):
        return spg_to_document(obj)
    if isinstance(obj, core.ConnectedLayerFamily):
        return clf_to_document(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# -- strict parsing ------------------------------------------------------------------

def _expect(cond, message):
    if not cond:
        raise DocumentSyntaxError(message)


def _check_header(doc, allowed):
    _expect(isinstance(doc, dict), "document must be a JSON object")
    _expect(doc.get("format") == FORMAT_SPG,
            f"format must be {FORMAT_SPG!r}, got {doc.get('format')!r}")
    for key in doc:
        _expect(key in allowed, f"unexpected key {key!r}")
    for key in ("n", "d", "vertices"):
        _expect(key in doc, f"missing key {key!r}")
    _expect(isinstance(doc["n"], int) and not isinstance(doc["n"], bool),
            "n must be an integer")
    _expect(isinstance(doc["d"], int) and not isinstance(doc["d"], bool),
            "d must be an integer")
    if "labels" in doc:
        _expect(isinstance(doc["labels"], list)
                and all(isinstance(x, str) for x in doc["labels"]),
                "labels must be a list of strings")


def _parse_dset(entry, where):
    _expect(isinstance(entry, list) and entry
            and all(isinstance(x, int) and not isinstance(x, bool) for x in entry),
            f"{where} must be a nonempty list of integers")
    _expect(all(a < b for a, b in zip(entry, entry[1:])),
            f"{where} must be strictly ascending")
    return tuple(entry)


def _parse_blocks(doc):
    _expect(isinstance(doc["vertices"], list) and doc["vertices"],
            "vertices must be a nonempty list of blocks")
    blocks = []
    for i, raw in enumerate(doc["vertices"]):
        _expect(isinstance(raw, list) and raw,
                f"vertices[{i}] must be a nonempty list of d-sets")
        block = [_parse_dset(a, f"vertices[{i}][{j}]") for j, a in enumerate(raw)]
        _expect(all(x < y for x, y in zip(block, block[1:])),
                f"vertices[{i}] must be sorted lexicographically without duplicates")
        blocks.append(block)
    return blocks


def _symbols(doc) -> core.SymbolSet:
    labels = tuple(doc["labels"]) if "labels" in doc else None
    try:
        return core.SymbolSet(doc["n"], labels)
    except SpgError as err:
        raise ValidationError(err) from err


def document_to_spg(doc) -> core.Spg:
    _check_header(doc, ("format", "n", "d", "labels", "vertices", "edges", "apices"))
    _expect("edges" in doc, "missing key 'edges'")
    blocks = _parse_blocks(doc)
    _expect(isinstance(doc["edges"], list), "edges must be a list")
    edges = []
    for i, raw in enumerate(doc["edges"]):
        _expect(isinstance(raw, list) and len(raw) == 2
                and all(isinstance(x, int) and not isinstance(x, bool) for x in raw),
                f"edges[{i}] must be a pair of integers")
        _expect(raw[0] < raw[1], f"edges[{i}] must have the smaller index first")
        edges.append(tuple(raw))
    _expect(all(x < y for x, y in zip(edges, edges[1:])),
            "edges must be sorted without duplicates")
    apices = None
    if "apices" in doc:
        raw = doc["apices"]
        _expect(isinstance(raw, list) and len(raw) == 2,
                "apices must be a pair of d-sets")
        apices = tuple(_parse_dset(a, f"apices[{j}]") for j, a in enumerate(raw))
    try:
        return core.make_spg(_symbols(doc), doc["d"], blocks, edges, apices)
    except SpgError as err:
        if isinstance(err, (ValidationError, DocumentSyntaxError)):
            raise
        raise ValidationError(err) from err


def document_to_clf(doc) -> core.ConnectedLayerFamily:
    _check_header(doc, ("format", "n", "d", "shape", "labels", "vertices"))
    if "shape" in doc:
        _expect(doc["shape"] == "path", f"shape must be 'path', got {doc['shape']!r}")
    layers = _parse_blocks(doc)
    try:
        return core.make_clf(_symbols(doc), doc["d"], layers)
    except SpgError as err:
        if isinstance(err, (ValidationError, DocumentSyntaxError)):
            raise
        raise ValidationError(err) from err


def parse(doc):
    """Dispatch on document shape: with "edges" an SPG, without a layer family."""
    _expect(isinstance(doc, dict), "document must be a JSON object")
    if "edges" in doc:
        return document_to_spg(doc)
    return document_to_clf(doc)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentSyntaxError(f"invalid JSON: {err}") from err
    return parse(doc)


# -- reports and witnesses -------------------------------------------------------------

def _json_value(value):
    if isinstance(value, tuple):
        return [_json_value(v) for v in value]
    return value


def witness_to_json(prop: str, result: CheckResult):
    """Property-specific witness rendering for reports and API responses."""
    w = result.witness
    if w is None:
        return None
    if prop == "dimension-reduction":
        return {"face": list(w)}
    if prop == "adjacency":
        return {"pair": [list(w[0]), list(w[1])]}
    if prop in ("strong-adjacency",):
        if w[0] == "pair":
            return {"pair": [list(w[1]), list(w[2])]}
        return {"edge": list(w[1])}
    if prop in ("endpoint-count", "polytopal-endpoint-count"):
        return {"face": list(w[0]), "count": w[1]}
    if prop == "one-subset":
        return {"block": w}
    if prop == "d-regularity":
        return {"block": w[0], "degree": w[1]}
    if prop == "d-connectedness":
        if w[0] == "complete":
            return {"complete": True, "connectivity": w[1]}
        return {"pair": [w[1], w[2]], "connectivity": w[3]}
    if prop == "d-neighbors":
        return {"dset": list(w[0]), "count": w[1]}
    if prop == "spindle":
        return {"apices": [list(w[0]), list(w[1])]}
    if prop == "clf-shape":
        if w[0] == "not-a-path":
            return {"reason": "not-a-path"}
        i, j, k, a, b = w[1]
        return {"layers": [i, j, k], "pair": [list(a), list(b)]}
    if prop == "ultraconnected":
        return {"kind": w[0], "pair": [_json_value(w[1][0]), _json_value(w[1][1])]}
    return _json_value(w)


def report_to_document(report: PropertyReport, n: int = None, d: int = None) -> dict:
    doc = {"format": FORMAT_REPORT}
    if n is not None:
        doc["n"] = n
    if d is not None:
        doc["d"] = d
    props = {}
    for name, result in report.results:
        entry = {"holds": result.ok}
        witness = witness_to_json(name, result)
        if witness is not None:
            entry["witness"] = witness
        props[name] = entry
    doc["properties"] = props
    return doc


# -- traces ---------------------------------------------------------------------------

def move_to_document(move: Move) -> dict:
    return {"kind": move.kind, "endpoints": list(move.endpoints)}


def document_to_move(doc) -> Move:
    _expect(isinstance(doc, dict) and set(doc) == {"kind", "endpoints"},
            "a move needs exactly 'kind' and 'endpoints'")
    _expect(isinstance(doc["endpoints"], list) and len(doc["endpoints"]) == 2,
            "move endpoints must be a pair")
    return Move(doc["kind"], tuple(doc["endpoints"]))


def trace_to_document(trace: StrategyTrace) -> dict:
    moves = []
    for step in trace.steps:
        entry = move_to_document(step.move)
        entry["diameter"] = step.diameter
        entry["report"] = report_to_document(step.report)["properties"]
        moves.append(entry)
    return {
        "format": FORMAT_TRACE,
        "targets": list(trace.targets),
        "initial": spg_to_document(trace.initial),
        "moves": moves,
        "final": spg_to_document(trace.final),
        "finalDiameter": core.diameter(trace.final).value,
    }


def document_to_moves(doc) -> list:
    """The move list of a trace document, for replay."""
    _expect(isinstance(doc, dict) and doc.get("format") == FORMAT_TRACE,
            f"format must be {FORMAT_TRACE!r}")
    return [document_to_move({"kind": m["kind"], "endpoints": m["endpoints"]})
            for m in doc.get("moves", [])]
