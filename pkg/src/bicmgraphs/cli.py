"""Command-line surface.

Exit codes: 0 ok, 1 a predicate came out false, 2 input error, 3 size guard,
4 internal-consistency violation (a theorem audit failed).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .audit import run_audit
from .bicm import certify_bicm
from .classify import recognize_bipartite_bicm, recognize_chordal_bicm, reduction_ideal_check
from .errors import ConsistencyError, InputError, SizeGuardError
from .generic import generic_graph, generic_ideal, generic_matrix
from .graphs import (Graph, Tree, graph_from_json_dict, graph_to_json_dict,
                     is_bipartite, is_chordal, parse_edge_list, to_dot)
from .ideals import alexander_dual, edge_ideal, ideal_to_json_dict
from .resolutions import FieldSpec, betti_table
from .separation import first_separability_witness, inseparable_model, is_inseparable

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_SIZE = 3
EXIT_INCONSISTENT = 4


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return graph_from_json_dict(obj)
    return parse_edge_list(text)


def _load_tree(path: str) -> Tree:
    return Tree(_load_graph(path))


def _field(args) -> FieldSpec:
    return FieldSpec(args.field)


def _emit(args, obj: dict, pretty_text: str | None = None) -> None:
    if args.pretty and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(obj, sort_keys=True, indent=2))


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    cert = certify_bicm(g, _field(args))
    _emit(args, cert.to_json_dict(), cert.pretty())
    if not cert.consistent:
        return EXIT_INCONSISTENT
    return EXIT_OK if cert.verdict else EXIT_FALSE


def _cmd_dual(args) -> int:
    g = _load_graph(args.graph)
    dual = alexander_dual(edge_ideal(g))
    _emit(args, ideal_to_json_dict(dual), str(dual))
    return EXIT_OK


def _cmd_betti(args) -> int:
    g = _load_graph(args.graph)
    table = betti_table(edge_ideal(g), _field(args))
    _emit(args, table.to_json_dict(), table.pretty())
    return EXIT_OK


def _cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    cert = certify_bicm(g, _field(args))
    out: dict = {"certificate": cert.to_json_dict(), "bipartite": None, "chordal": None}
    lines = [cert.pretty()]
    if is_bipartite(g) is not None:
        witness = recognize_bipartite_bicm(g)
        if witness is not None:
            out["bipartite"] = witness.to_json_dict()
            lines.append("bipartite staircase witness:")
            lines.append(f"  one side  {list(witness.v_order)}")
            lines.append(f"  other side {list(witness.w_order)}")
    if is_chordal(g) is not None:
        witness = recognize_chordal_bicm(g)
        if witness is not None:
            wd = witness.to_json_dict()
            wd["reduction_ideal_is_full_square"] = reduction_ideal_check(g, witness)
            out["chordal"] = wd
            lines.append("chordal witness:")
            lines.append(f"  facets {wd['facets']}")
            lines.append(f"  free vertices {wd['free_vertices']}")
            lines.append(f"  center {wd['center']}")
    if out["bipartite"] is None and out["chordal"] is None:
        lines.append("no classified family witness")
    _emit(args, out, "\n".join(lines))
    return EXIT_OK if (out["bipartite"] is not None or out["chordal"] is not None) else EXIT_FALSE


def _cmd_generic_graph(args) -> int:
    tree = _load_tree(args.tree)
    g, pairs = generic_graph(tree)
    matrix = generic_matrix(tree)
    out = {
        "tree": graph_to_json_dict(tree.graph),
        "graph": graph_to_json_dict(g),
        "vertex_pairs": [[i, j] for i, j in pairs],
        "generic_matrix": matrix.to_json_dict(),
        "generic_ideal": ideal_to_json_dict(generic_ideal(tree)),
    }
    lines = [f"generic graph on {g.n} vertices, {g.edge_count()} edges"]
    for t, (i, j) in enumerate(pairs, start=1):
        lines.append(f"  vertex {t} = ({i},{j})")
    lines.append("edges: " + ", ".join(f"{a}-{b}" for a, b in g.edges()))
    _emit(args, out, "\n".join(lines))
    return EXIT_OK


def _cmd_insep_model(args) -> int:
    g = _load_graph(args.graph)
    model = inseparable_model(g)
    out = {
        "tree": graph_to_json_dict(model.tree.graph),
        "graph": graph_to_json_dict(model.graph),
        "vertex_pairs": [[i, j] for i, j in model.vertex_pairs],
        "substitution": dict(sorted(model.substitution.items())),
    }
    lines = [f"inseparable model on {model.graph.n} vertices",
             f"tree edges: {model.tree.edges()}",
             "substitution:"]
    lines += [f"  {k} -> {v}" for k, v in sorted(model.substitution.items())]
    _emit(args, out, "\n".join(lines))
    return EXIT_OK


def _cmd_is_inseparable(args) -> int:
    g = _load_graph(args.graph)
    verdict = is_inseparable(g)
    witness = None if verdict else first_separability_witness(g)
    out = {"inseparable": verdict,
           "witness": None if witness is None else
           {"vertex": witness[0], "components": witness[1]}}
    text = "inseparable" if verdict else (
        f"separable: neighborhood complement of vertex {witness[0]} "
        f"splits into {witness[1]}")
    _emit(args, out, text)
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_audit(args) -> int:
    chars = (0, 2) if args.field == 0 else (0, args.field)
    progress = None
    if args.pretty:
        def progress(n, done, total):
            if done == total or done % 50 == 0:
                print(f"  n={n}: {done}/{total}", end="\r", file=sys.stderr)
    report = run_audit(args.n_max, characteristics=chars, big=args.big,
                       seed=args.seed, progress=progress)
    payload = report.to_json()
    if args.golden:
        golden = Path(args.golden)
        if args.regen:
            golden.write_text(payload)
            print(f"regenerated {golden}", file=sys.stderr)
        else:
            if not golden.exists():
                raise InputError(f"golden file {golden} does not exist (use --regen)")
            if golden.read_text() != payload:
                print("audit report differs from golden file", file=sys.stderr)
                return EXIT_INCONSISTENT
    if args.pretty:
        print(report.pretty())
    else:
        sys.stdout.write(payload)
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


def _cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    dot = to_dot(g)
    if args.output:
        Path(args.output).write_text(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def _add_field(p) -> None:
    p.add_argument("--field", type=int, default=0, metavar="P",
                   help="field characteristic: 0 (default) or a prime")


def _add_pretty(p) -> None:
    p.add_argument("--pretty", action="store_true", help="human-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicmgraphs",
        description="Certify, classify and model bi-Cohen-Macaulay graphs.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full bi-CM certificate for a graph")
    p.add_argument("graph")
    _add_field(p)
    _add_pretty(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("dual", help="Alexander dual of the edge ideal")
    p.add_argument("graph")
    _add_pretty(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("betti", help="graded Betti table of the edge ideal")
    p.add_argument("graph")
    _add_field(p)
    _add_pretty(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("classify", help="bipartite/chordal family witnesses")
    p.add_argument("graph")
    _add_field(p)
    _add_pretty(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("generic-graph", help="generic bi-CM graph of a tree")
    p.add_argument("tree")
    _add_pretty(p)
    p.set_defaults(func=_cmd_generic_graph)

    p = sub.add_parser("insep-model", help="inseparable model of a bi-CM graph")
    p.add_argument("graph")
    _add_pretty(p)
    p.set_defaults(func=_cmd_insep_model)

    p = sub.add_parser("is-inseparable", help="neighborhood-complement test")
    p.add_argument("graph")
    _add_pretty(p)
    p.set_defaults(func=_cmd_is_inseparable)

    p = sub.add_parser("audit", help="exhaustive theorem audit up to n vertices")
    p.add_argument("n_max", type=int)
    _add_field(p)
    _add_pretty(p)
    p.add_argument("--big", action="store_true",
                   help="allow 7 or 8 vertices (slow; 8 certifies survivors only)")
    p.add_argument("--seed", type=int, default=0,
                   help="shuffles the scan order; the report is identical")
    p.add_argument("--golden", metavar="PATH", help="compare the report against a golden file")
    p.add_argument("--regen", action="store_true", help="rewrite the golden file")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("export-dot", help="DOT rendering of a graph file")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
