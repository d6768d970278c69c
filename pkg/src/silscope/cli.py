"""Command-line surface: classification reports, generator listings, the
verification suite, and word-engine access.

Subcommands: classify | sils | gens | presentation | verify | reduce | act.
Graphs are read from JSON ({"vertices": [{"name", "order"}], "edges": [...]})
or DOT files with an ``order`` vertex attribute.  Exit codes: 0 success,
1 verification found counterexamples, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import harness, outer, sils, words
from .graphs import GraphError, LabelledGraph, load_graph, to_dot, to_json_dict

REPORT_VERSION = 1


def _vertex_names(g: LabelledGraph, vertices) -> list:
    return [g.names[v] for v in sorted(vertices)]


def _sil_dict(g: LabelledGraph, s: sils.Sil) -> dict:
    return {"pair": [g.names[s.pair[0]], g.names[s.pair[1]]],
            "component": _vertex_names(g, s.component),
            "coxeter": s.coxeter}


def _pc_dict(g: LabelledGraph, pc: outer.PartialConjugation) -> dict:
    return {"vertex": g.names[pc.vertex],
            "component": _vertex_names(g, pc.component),
            "order": g.orders[pc.vertex]}


def build_report(g: LabelledGraph, ordering=None) -> dict:
    """The full classification report as a JSON-ready dict."""
    sil_list = sils.enumerate_sils(g)
    stil_list = sils.enumerate_stils(g)
    fsil_list = sils.enumerate_fsils(g, sil_list)
    out_class = outer.classify(g, sil_list, stil_list, fsil_list)
    pres = outer.presentation(g, ordering)
    disc = outer.disconnected_structure(g)

    warnings = []
    if (out_class.kind is outer.OutKind.LARGE and out_class.fsils
            and not out_class.stils and not out_class.non_coxeter_sils):
        warnings.append(
            "largeness rests solely on a flexible separating triple: every "
            "separating pair here is a Coxeter pair and there is no separating "
            "triple, so a census that ignored flexible triples would report "
            "VirtuallyAbelianNotZ instead of Large")

    report = {
        "version": REPORT_VERSION,
        "graph": to_json_dict(g),
        "class": out_class.kind.value,
        "evidence": {
            "coxeter_sils": out_class.coxeter_sils,
            "non_coxeter_sils": out_class.non_coxeter_sils,
            "stils": out_class.stils,
            "fsils": out_class.fsils,
        },
        "sils": [_sil_dict(g, s) for s in sil_list],
        "stils": [{"triple": [g.names[v] for v in s.triple],
                   "component": _vertex_names(g, s.component)}
                  for s in stil_list],
        "fsils": [{"triple": [g.names[v] for v in f.triple],
                   "witnesses": [_sil_dict(g, s) for s in f.sils]}
                  for f in fsil_list],
        "p0": [_pc_dict(g, pc) for pc in pres.generators],
        "presentation": {
            "generators": [_pc_dict(g, pc) for pc in pres.generators],
            "commuting_edges": sorted(map(list, pres.commuting_edges)),
            "summary": pres.summary,
        },
        "disconnected": None if disc is None else {
            "components": [_vertex_names(g, c) for c in disc.components],
            "status": disc.status,
            "reason": disc.reason,
            "quotients": (None if disc.quotients is None
                          else [_vertex_names(g, q) for q in disc.quotients]),
            "summary": disc.summary,
        },
        "warnings": warnings,
    }
    return report


def _parse_ordering(g: LabelledGraph, text: str | None):
    if text is None:
        return None
    names = [t.strip() for t in text.split(",") if t.strip()]
    ordering = [g.index(name) for name in names]
    if sorted(ordering) != list(range(g.n)):
        raise GraphError(
            f"ordering must list every vertex exactly once, got {names}")
    return ordering


_GENSPEC_RE = re.compile(r"^\s*chi\s+(\S+)\s*\{([^{}]*)\}\s*$")


def _parse_genspec(g: LabelledGraph, text: str) -> outer.PartialConjugation:
    """Parse 'chi VERTEX {a,b,c}' into a validated partial conjugation."""
    m = _GENSPEC_RE.match(text)
    if not m:
        raise GraphError(
            f"cannot parse generator spec {text!r}; expected 'chi VERTEX {{a,b,c}}'")
    vertex = g.index(m.group(1))
    comp_names = [t.strip() for t in m.group(2).split(",") if t.strip()]
    comp = frozenset(g.index(name) for name in comp_names)
    try:
        return outer.validate_partial_conjugation(g, vertex, comp)
    except ValueError as exc:
        raise GraphError(str(exc)) from exc


def _word_json(g: LabelledGraph, w) -> dict:
    return {"literal": words.format_word(g, w),
            "syllables": [[g.names[v], e] for v, e in w]}


# ---------------------------------------------------------------------------
# Subcommands


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    ordering = _parse_ordering(g, args.ordering)
    report = build_report(g, ordering)
    print(json.dumps(report, indent=2, ensure_ascii=False))
    if args.dot:
        sil_list = sils.enumerate_sils(g)
        acting = {v for s in sil_list for v in s.pair}
        separated = {v for s in sil_list for v in s.component} - acting
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(g, acting, separated))
    return 0


def cmd_sils(args) -> int:
    g = load_graph(args.graph)
    for s in sils.enumerate_sils(g):
        print(json.dumps(_sil_dict(g, s), ensure_ascii=False))
    return 0


def cmd_gens(args) -> int:
    g = load_graph(args.graph)
    ordering = _parse_ordering(g, args.ordering)
    for pc in outer.build_p0(g, ordering).gens:
        print(json.dumps(_pc_dict(g, pc), ensure_ascii=False))
    return 0


def cmd_presentation(args) -> int:
    g = load_graph(args.graph)
    ordering = _parse_ordering(g, args.ordering)
    pres = outer.presentation(g, ordering)
    print(json.dumps({
        "generators": [_pc_dict(g, pc) for pc in pres.generators],
        "commuting_edges": sorted(map(list, pres.commuting_edges)),
        "summary": pres.summary,
    }, ensure_ascii=False))
    return 0


def cmd_verify(args) -> int:
    checks = (tuple(t.strip() for t in args.checks.split(",") if t.strip())
              if args.checks else harness.DEFAULT_CHECKS)
    orders = tuple(int(t) for t in args.orders.split(",") if t.strip())
    try:
        spec = harness.EnumSpec(
            max_vertices=args.max_vertices,
            orders=orders,
            dedup_isomorphic=args.dedup,
            checks=checks,
            oracle_depth=args.oracle_depth,
            oracle_max_vertices=args.oracle_max_vertices,
            workers=args.workers,
        )
        reports = harness.run_suite(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for report in reports:
        print(report.to_json_line())
    print(json.dumps({
        "checked_graphs": harness.count_graphs(spec),
        "checks": sorted(checks),
        "counterexamples": len(reports),
        "dedup": spec.dedup_isomorphic,
        "max_vertices": spec.max_vertices,
        "orders": list(orders),
    }, sort_keys=True))
    return 1 if reports else 0


def cmd_reduce(args) -> int:
    g = load_graph(args.graph)
    w = words.parse_word_literal(g, args.word)
    reduced = words.reduce(g, w)
    print(json.dumps({"input": args.word, "reduced": _word_json(g, reduced)},
                     ensure_ascii=False))
    return 0


def cmd_act(args) -> int:
    g = load_graph(args.graph)
    pc = _parse_genspec(g, args.generator)
    w = words.parse_word_literal(g, args.word)
    image = words.apply(g, pc, w)
    print(json.dumps({"generator": pc.label(g), "input": args.word,
                      "image": _word_json(g, image)}, ensure_ascii=False))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="silscope",
        description="Separating-intersection analysis of labelled graphs: "
                    "detect separating pairs/triples, build the partial-"
                    "conjugation generators, and classify the outer "
                    "automorphism group of the associated graph product.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name, func, help_text, ordering=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="path to a graph JSON or DOT file")
        if ordering:
            p.add_argument("--ordering", default=None,
                           help="comma-separated vertex names; default is input order")
        p.set_defaults(func=func)
        return p

    p = add_graph_cmd("classify", cmd_classify,
                      "full classification report as JSON", ordering=True)
    p.add_argument("--dot", default=None, metavar="PATH",
                   help="also write a DOT rendering with separating pairs "
                        "and components highlighted")
    add_graph_cmd("sils", cmd_sils, "list separating pairs, one JSON line each")
    add_graph_cmd("gens", cmd_gens, "list the generating set, one JSON line each",
                  ordering=True)
    add_graph_cmd("presentation", cmd_presentation,
                  "commutation presentation and factored summary", ordering=True)

    p = sub.add_parser("verify", help="run the exhaustive small-graph property suite")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--orders", default="2",
                   help="comma-separated prime-power vertex orders (default: 2)")
    p.add_argument("--dedup", action="store_true",
                   help="one representative per isomorphism class")
    p.add_argument("--checks", default=None,
                   help=f"comma-separated check ids (default: all: "
                        f"{','.join(harness.DEFAULT_CHECKS)})")
    p.add_argument("--oracle-depth", type=int,
                   default=int(os.environ.get("SILSCOPE_ORACLE_DEPTH", "4")),
                   help="innerness search radius for the word-engine oracle "
                        "(env SILSCOPE_ORACLE_DEPTH overrides the default of 4)")
    p.add_argument("--oracle-max-vertices", type=int, default=5,
                   help="skip the word-engine oracle above this vertex count")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="canonical normal form of a word")
    p.add_argument("graph")
    p.add_argument("word", help="space-separated name^k tokens, e.g. 'v1 d v1'")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("act", help="apply a partial conjugation to a word")
    p.add_argument("graph")
    p.add_argument("generator", help="generator spec, e.g. 'chi v1 {d,e,f}'")
    p.add_argument("word")
    p.set_defaults(func=cmd_act)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON at line {exc.lineno} column {exc.colno}: "
              f"{exc.msg}", file=sys.stderr)
        return 2
    except (GraphError, words.WordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
