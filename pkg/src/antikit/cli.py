"""Command-line front end.

Exit status: 0 on success, 1 when the library refuses (e.g. a shelling of an
infeasible set, a family that is not a split-graph shelling antimatroid),
2 on bad input.  ``--json`` switches any verb to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import closure_opt, feasibility, hardness, structure
from .errors import InputError, Refusal
from .family import SetFamily, format_set, parse_family, parse_set_tokens
from .numeric import format_number, parse_number
from .split_graph import SplitGraph, format_graph, graph_to_dict, normalize, parse_graph

log = logging.getLogger("antikit")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _graph(path: str) -> SplitGraph:
    return parse_graph(_read(path))


def _ids(tokens, g: SplitGraph | None = None) -> frozenset[int]:
    s = parse_set_tokens(tokens, "set argument: ")
    if g is not None:
        g.check_subset(s)
    return s


def _emit(args, text: str, payload) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


# -- verbs -------------------------------------------------------------------


def cmd_validate(args) -> int:
    g = _graph(args.graph)
    if args.normalize:
        g = normalize(g)
    _emit(args, format_graph(g), graph_to_dict(g))
    return 0


def cmd_feasible(args) -> int:
    g = _graph(args.graph)
    s = _ids(args.ids, g)
    ok = feasibility.is_feasible(g, s)
    cls = feasibility.classify(g, s) if ok else None
    text = f"feasible ({cls})" if ok else "not feasible"
    _emit(args, text, {"set": sorted(s), "feasible": ok, "class": str(cls) if cls else None})
    return 0


def cmd_shelling(args) -> int:
    g = _graph(args.graph)
    s = _ids(args.ids, g)
    order = feasibility.shelling(g, s)
    text = " ".join(map(str, order)) if order else "-"
    _emit(args, text, {"set": sorted(s), "shelling": list(order)})
    return 0


def cmd_classify(args) -> int:
    g = _graph(args.graph)
    s = _ids(args.ids, g)
    cls = feasibility.classify(g, s)
    _emit(args, str(cls), {"set": sorted(s), "class": str(cls)})
    return 0


def cmd_enumerate(args) -> int:
    g = _graph(args.graph)
    fam = feasibility.enumerate_feasible(g)
    payload = fam.to_json()
    if args.classes:
        labels = [str(feasibility.classify(g, s)) for s in fam]
        text = "".join(f"{format_set(s)}  [{c}]\n" for s, c in zip(fam, labels))
        payload["classes"] = labels
    else:
        text = fam.to_text()
    _emit(args, text, payload)
    return 0


def cmd_maxweight(args) -> int:
    g = _graph(args.graph)
    weights = closure_opt.complete_weights(g, closure_opt.parse_weights(_read(args.weights)))
    sense = closure_opt.MIN if args.min else closure_opt.MAX
    res = closure_opt.max_weight_feasible(g, weights, sense)
    text = (
        f"set: {format_set(res.best_set)}\n"
        f"weight: {format_number(res.best_weight)}\n"
        f"class: {res.cls}\n"
    )
    payload = {
        "set": sorted(res.best_set),
        "weight": format_number(res.best_weight),
        "class": str(res.cls),
        "sense": sense,
    }
    _emit(args, text, payload)
    return 0


def cmd_paths(args) -> int:
    g = _graph(args.graph)
    if args.normalize:
        g = normalize(g)
    paths = structure.path_poset(g)
    text = "".join(f"{p.cls}: {format_set(p.members)}\n" for p in paths)
    payload = {
        "count": len(paths),
        "paths": [
            {"class": p.cls, "members": sorted(p.members), "anchor": list(p.anchor) if isinstance(p.anchor, tuple) else p.anchor}
            for p in paths
        ],
    }
    _emit(args, text, payload)
    return 0


def cmd_circuits(args) -> int:
    g = _graph(args.graph)
    circuits = structure.rooted_circuits(g)
    text = "".join(f"{c}\n" for c in circuits)
    payload = {
        "circuits": [
            {"root": c.root, "support": sorted(c.support), "class": c.cls, "critical": c.critical}
            for c in circuits
        ]
    }
    _emit(args, text, payload)
    return 0


def cmd_free(args) -> int:
    g = _graph(args.graph)
    s = _ids(args.ids, g)
    ok = structure.is_free(g, s)
    _emit(args, "free" if ok else "not free", {"set": sorted(s), "free": ok})
    return 0


def _family(args) -> SetFamily:
    text = _read(args.family)
    if getattr(args, "graph", False):
        return feasibility.enumerate_feasible(parse_graph(text))
    return parse_family(text)


def cmd_trace(args) -> int:
    fam = _family(args)
    tr = structure.trace(fam, _ids(args.ids))
    _emit(args, tr.to_text(), tr.to_json())
    return 0


def cmd_reconstruct(args) -> int:
    g = structure.reconstruct_graph(_family(args), force_canonical=args.force_canonical)
    _emit(args, format_graph(g), graph_to_dict(g))
    return 0


def cmd_recognize(args) -> int:
    res = structure.recognize(_family(args), force_canonical=args.force_canonical)
    if isinstance(res, structure.NotSplitShelling):
        text = f"not a split graph shelling antimatroid: {res.reason}\n"
        if res.witness and isinstance(res.witness[0], frozenset):
            witness = [sorted(s) for s in res.witness]
            text += "".join(f"witness set: {format_set(s)}\n" for s in witness)
        else:
            witness = list(res.witness)
            text += f"witness vertices: {format_set(witness)}\n" if witness else ""
        _emit(args, text, {"recognized": False, "reason": res.reason, "witness": witness})
        return 1
    _emit(args, format_graph(res), {"recognized": True, "graph": graph_to_dict(res)})
    return 0


def _in_order(inst, elements) -> list:
    return [x for x in inst.vertex_elements + inst.edge_elements if x in elements]


def cmd_hardness(args) -> int:
    graph = hardness.parse_simple_graph(_read(args.graph))
    inst = hardness.build_reduction(graph, parse_number(args.delta))
    elements = inst.vertex_elements + inst.edge_elements
    paths = hardness.reduction_path_poset(inst)
    lines = [f"delta: {format_number(inst.delta)}"]
    lines += [f"{hardness.element_str(x)}  {format_number(inst.weights[x])}" for x in elements]
    lines.append(f"paths: {len(paths)}")
    payload = {
        "delta": format_number(inst.delta),
        "elements": [
            {"element": hardness.element_str(x), "weight": format_number(inst.weights[x])}
            for x in elements
        ],
        "paths": len(paths),
    }
    if args.extract is not None:
        chosen = frozenset(hardness.parse_element(t, graph) for t in args.extract if t != "-")
        trimmed, indep = hardness.extract_independent_set(inst, chosen)
        w = inst.weight(chosen)
        lines += [
            f"weight: {format_number(w)}",
            "trimmed: " + (" ".join(hardness.element_str(x) for x in _in_order(inst, trimmed)) or "-"),
            f"independent: {format_set(indep)}",
            f"bound: {format_number(inst.delta * len(indep))} >= {format_number(w)}",
        ]
        payload["extract"] = {
            "weight": format_number(w),
            "trimmed": [hardness.element_str(x) for x in _in_order(inst, trimmed)],
            "independent": sorted(indep),
        }
    if args.optimum:
        best = hardness.max_feasible_weight(inst)
        mis = hardness.max_independent_set_size(graph)
        lines += [f"optimum weight: {format_number(best)}", f"max independent set: {mis}"]
        payload["optimum"] = {"weight": format_number(best), "max_independent_set": mis}
    _emit(args, "\n".join(lines) + "\n", payload)
    return 0


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="antikit", description="Split graph shelling antimatroids."
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help, **kw):
        p = sub.add_parser(name, parents=[common], help=help, **kw)
        p.set_defaults(func=func)
        return p

    ids_help = "vertex ids; '-' for the empty set"

    p = verb("validate", cmd_validate, "check a graph file and print it canonically")
    p.add_argument("graph")
    p.add_argument("--normalize", action="store_true")

    for name, func, help in [
        ("feasible", cmd_feasible, "test whether a vertex set is feasible"),
        ("shelling", cmd_shelling, "print a simplicial shelling of a feasible set"),
        ("classify", cmd_classify, "Star or IFeasible(i) class of a feasible set"),
        ("free", cmd_free, "test whether a vertex set is free"),
    ]:
        p = verb(name, func, help)
        p.add_argument("graph")
        p.add_argument("ids", nargs="+", help=ids_help)

    p = verb("enumerate", cmd_enumerate, "list every feasible set")
    p.add_argument("graph")
    p.add_argument("--classes", action="store_true", help="tag each set with its class")

    p = verb("maxweight", cmd_maxweight, "maximum (or minimum) weight feasible set")
    p.add_argument("graph")
    p.add_argument("weights")
    p.add_argument("--min", action="store_true", help="minimise instead")

    p = verb("paths", cmd_paths, "paths of the antimatroid, grouped P1/P2/P3")
    p.add_argument("graph")
    p.add_argument("--normalize", action="store_true", help="normalize the partition first")

    p = verb("circuits", cmd_circuits, "rooted circuits")
    p.add_argument("graph")

    p = verb("trace", cmd_trace, "trace of a family on a vertex set")
    p.add_argument("family")
    p.add_argument("ids", nargs="+", help=ids_help)
    p.add_argument("--graph", action="store_true", help="the input file is a graph; trace its feasible family")

    for name, func, help in [
        ("reconstruct", cmd_reconstruct, "recover the split graph from a feasible family"),
        ("recognize", cmd_recognize, "decide whether a family is a split graph shelling antimatroid"),
    ]:
        p = verb(name, func, help)
        p.add_argument("family")
        p.add_argument("--force-canonical", action="store_true", help="answer 2^V with the edgeless graph")

    p = verb("hardness", cmd_hardness, "edge-cover reduction of an arbitrary graph")
    p.add_argument("graph", help="file with 'V: ...' and 'E: a-b ...' lines")
    p.add_argument("--delta", default="0.1")
    p.add_argument("--extract", nargs="+", metavar="ELEMENT", help="feasible set to trim (vertices and a-b edges)")
    p.add_argument("--optimum", action="store_true", help="also compute the optimum and the maximum independent set")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    # library warnings (e.g. defaulted weights) go to stderr for this call only
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("warning: %(message)s"))
    handler.setLevel(logging.WARNING)
    log.addHandler(handler)
    try:
        return args.func(args)
    except Refusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        log.removeHandler(handler)


run = main


if __name__ == "__main__":
    sys.exit(main())
