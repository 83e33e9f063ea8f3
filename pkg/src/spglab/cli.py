"""Command-line surface.

Exit codes: 0 on success, 1 on a domain failure (a requested property
fails or a domain error is raised), 2 on usage errors.  All output is a
deterministic byte stream for fixed inputs.
"""

import argparse
import sys

from . import core, generators, oracle, spgjson, strategy
from .checks import ALL_PROPERTIES, PropertyReport, property_report
from .errors import BudgetExhausted, SpgError


def _read_spg(path: str) -> core.Spg:
    with open(path, "r", encoding="utf-8") as fh:
        obj = spgjson.loads(fh.read())
    if isinstance(obj, core.ConnectedLayerFamily):
        return core.clf_to_spg(obj)
    return obj


def _emit(doc, out: str = None):
    text = spgjson.dumps(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_symbol_list(text: str):
    if text.strip() == "":
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_edge(text: str):
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 2:
        raise SpgError(f"expected two comma-separated indices, got {text!r}")
    return tuple(parts)


# -- subcommand handlers -----------------------------------------------------------

def _cmd_generate(args) -> int:
    if args.family == "spindle":
        obj = generators.gen_spindle_family(args.m)
    elif args.family == "cyclic":
        obj = generators.gen_cyclic_construction(args.n, args.d)
    elif args.family == "cube":
        obj = generators.gen_cube_spg(args.dim)
    elif args.family == "hirsch-path":
        obj = generators.gen_hirsch_path_clf(args.n, args.d)
    else:
        obj = generators.gen_figure1()
    _emit(spgjson.serialize(obj), args.out)
    return 0


def _format_table(report_doc: dict) -> str:
    lines = []
    width = max(len(name) for name in report_doc["properties"])
    for name, entry in report_doc["properties"].items():
        status = "holds" if entry["holds"] else "FAILS"
        witness = "" if entry["holds"] else f"  witness={entry.get('witness')}"
        lines.append(f"{name:<{width}}  {status}{witness}")
    return "\n".join(lines) + "\n"


def _cmd_check(args) -> int:
    g = _read_spg(args.file)
    if args.properties == "all":
        wanted = ALL_PROPERTIES
    else:
        wanted = tuple(p.strip() for p in args.properties.split(","))
        unknown = [p for p in wanted if p not in ALL_PROPERTIES]
        if unknown:
            raise SpgError(f"unknown properties: {unknown}")
    report = property_report(g)
    results = dict(report.results)
    if args.brute:
        results["dimension-reduction"] = oracle.brute_dimension_reduction(g)
    selected = PropertyReport(tuple(
        (name, results[name]) for name in ALL_PROPERTIES if name in wanted))
    doc = spgjson.report_to_document(selected, g.symbols.n, g.d)
    if args.brute:
        doc["brute"] = True
    if args.format == "table":
        sys.stdout.write(_format_table(doc))
    else:
        _emit(doc)
    return 0 if all(selected.ok(name) for name in wanted) else 1


def _cmd_diameter(args) -> int:
    result = core.diameter(_read_spg(args.file))
    _emit({"diameter": result.value, "farthestPair": list(result.farthest_pair)})
    return 0


def _cmd_distance(args) -> int:
    g = _read_spg(args.file)
    value = core.distance(g, _parse_symbol_list(args.from_),
                          _parse_symbol_list(args.to))
    _emit({"distance": value})
    return 0


def _cmd_restrict(args) -> int:
    g = _read_spg(args.file)
    view = core.restriction(g, _parse_symbol_list(args.face))
    _emit({
        "face": list(view.face),
        "survivingBlocks": list(view.surviving_blocks),
        "inducedEdges": [list(e) for e in view.induced_edges],
        "connected": view.connected,
    })
    return 0


def _cmd_contract(args) -> int:
    g = core.contraction(_read_spg(args.file), _parse_edge(args.edge))
    _emit(spgjson.spg_to_document(g), args.out)
    return 0


def _cmd_add_edge(args) -> int:
    g = core.edge_addition(_read_spg(args.file), *_parse_edge(args.edge))
    _emit(spgjson.spg_to_document(g), args.out)
    return 0


def _cmd_layer(args) -> int:
    g = _read_spg(args.file)
    layering = core.spg_layering(g, _parse_symbol_list(args.root))
    witness = None
    if layering.witness is not None:
        i, j, k, a, b = layering.witness
        witness = {"layers": [i, j, k], "pair": [list(a), list(b)]}
    _emit({
        "clf": spgjson.clf_to_document(layering.clf),
        "valid": layering.valid,
        "witness": witness,
    }, args.out)
    return 0


def _cmd_search(args) -> int:
    g = _read_spg(args.file)
    targets = tuple(p.strip() for p in args.targets.split(","))
    try:
        trace = strategy.strategy_search(
            g, targets, budget=args.budget,
            beam_width=8 if args.beam else 0)
    except BudgetExhausted as err:
        if args.out and err.trace is not None:
            _emit(spgjson.trace_to_document(err.trace), args.out)
        raise
    doc = spgjson.trace_to_document(trace)
    if args.out:
        _emit(doc, args.out)
    _emit({
        "moves": len(trace.steps),
        "finalDiameter": doc["finalDiameter"],
        "targetsHold": True,
    })
    return 0


def _budget_from_args(args) -> oracle.OracleBudget:
    return oracle.OracleBudget(
        max_symbols=args.max_symbols,
        max_dimension=args.max_dimension,
        max_dsets=args.max_dsets,
        time_limit=args.time_limit,
    )


def _cmd_oracle(args) -> int:
    budget = _budget_from_args(args)
    if args.oracle_op == "dimension-reduction":
        result = oracle.brute_dimension_reduction(_read_spg(args.file), budget)
        _emit({
            "holds": result.ok,
            "witness": None if result.ok else {"face": list(result.witness)},
        })
        return 0 if result.ok else 1
    if args.oracle_op == "diameter":
        _emit({"diameter": oracle.brute_diameter(_read_spg(args.file), budget)})
        return 0
    result = oracle.brute_max_clf_diameter(
        args.n, args.d, budget, one_subset=not args.general)
    _emit({
        "value": result.value,
        "witness": spgjson.clf_to_document(result.witness),
        "isomorphismClasses": result.isomorphism_classes,
    })
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    uvicorn.run(create_app(), host=args.bind, port=args.port, log_level="warning")
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spglab",
        description="Workbench for subset partition graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a canonical graph document")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    g_spindle = gen_sub.add_parser("spindle")
    g_spindle.add_argument("--m", type=int, required=True)
    g_cyclic = gen_sub.add_parser("cyclic")
    g_cyclic.add_argument("--n", type=int, required=True)
    g_cyclic.add_argument("--d", type=int, required=True)
    g_cube = gen_sub.add_parser("cube")
    g_cube.add_argument("--dim", type=int, required=True)
    g_hirsch = gen_sub.add_parser("hirsch-path")
    g_hirsch.add_argument("--n", type=int, required=True)
    g_hirsch.add_argument("--d", type=int, required=True)
    gen_sub.add_parser("figure1")
    for p in (g_spindle, g_cyclic, g_cube, g_hirsch, gen_sub.choices["figure1"]):
        p.add_argument("--out")
        p.set_defaults(func=_cmd_generate)

    check = sub.add_parser("check", help="run property checkers")
    check.add_argument("file")
    check.add_argument("--properties", default="all")
    check.add_argument("--brute", action="store_true",
                       help="use the brute-force dimension-reduction oracle")
    check.add_argument("--format", choices=("json", "table"), default="json")
    check.set_defaults(func=_cmd_check)

    dia = sub.add_parser("diameter")
    dia.add_argument("file")
    dia.set_defaults(func=_cmd_diameter)

    dist = sub.add_parser("distance")
    dist.add_argument("file")
    dist.add_argument("--from", dest="from_", required=True,
                      metavar="A", help="comma-separated symbols of a d-set")
    dist.add_argument("--to", required=True, metavar="B")
    dist.set_defaults(func=_cmd_distance)

    restr = sub.add_parser("restrict")
    restr.add_argument("file")
    restr.add_argument("--face", required=True, help="comma-separated symbols")
    restr.set_defaults(func=_cmd_restrict)

    contract = sub.add_parser("contract")
    contract.add_argument("file")
    contract.add_argument("--edge", required=True, help="i,j")
    contract.add_argument("--out")
    contract.set_defaults(func=_cmd_contract)

    add_edge = sub.add_parser("add-edge")
    add_edge.add_argument("file")
    add_edge.add_argument("--edge", required=True, help="i,j")
    add_edge.add_argument("--out")
    add_edge.set_defaults(func=_cmd_add_edge)

    layer = sub.add_parser("layer")
    layer.add_argument("file")
    layer.add_argument("--root", required=True,
                       help="comma-separated symbols of the root d-set")
    layer.add_argument("--out")
    layer.set_defaults(func=_cmd_layer)

    search = sub.add_parser("search", help="greedy repair of main properties")
    search.add_argument("file")
    search.add_argument("--targets",
                        default="dimension-reduction,adjacency,strong-adjacency,endpoint-count")
    search.add_argument("--budget", type=int, default=200)
    search.add_argument("--beam", action="store_true")
    search.add_argument("--out", help="write the trace document here")
    search.set_defaults(func=_cmd_search)

    orc = sub.add_parser("oracle", help="brute-force reference computations")
    orc_sub = orc.add_subparsers(dest="oracle_op", required=True)
    o_dr = orc_sub.add_parser("dimension-reduction")
    o_dr.add_argument("file")
    o_dia = orc_sub.add_parser("diameter")
    o_dia.add_argument("file")
    o_clf = orc_sub.add_parser("max-clf-diameter")
    o_clf.add_argument("--n", type=int, required=True)
    o_clf.add_argument("--d", type=int, required=True)
    o_clf.add_argument("--general", action="store_true",
                       help="allow layers with several d-sets (tiny n only)")
    for p in (o_dr, o_dia, o_clf):
        p.add_argument("--max-symbols", type=int, default=6)
        p.add_argument("--max-dimension", type=int, default=3)
        p.add_argument("--max-dsets", type=int, default=24)
        p.add_argument("--time-limit", type=float, default=60.0)
        p.set_defaults(func=_cmd_oracle)

    serve = sub.add_parser("serve", help="run the workbench HTTP API")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--bind", default="127.0.0.1")
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpgError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
