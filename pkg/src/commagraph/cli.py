"""Command-line surface: construct, transform and check, JSON everywhere.

All results go to standard output as JSON; human-readable summaries go to
standard error.  Exit codes: 0 success, 1 a check suite failed, 2 bad
input, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import verify
from .comma import (
    comma_object_from_json,
    comma_object_to_json,
    comma_morphism_to_json,
    coreflect,
    embed_graph,
)
from .errors import InputError, MalformedInput
from .graphs import enumerate_graph_homs, graph_from_json, graph_to_json
from .groups import (
    CLOSURE_DEFAULT_CAP,
    FiniteGroup,
    commutation_graph,
    enumerate_homs_raag_to_finite,
    group_from_json,
    group_to_json,
    raag_is_identity,
    raag_of,
    raag_reduce,
    word_from_tokens,
    word_to_tokens,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def _emit(data, args) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _cmd_gamma(args) -> int:
    g = graph_from_json(_load_json(args.graph))
    w = embed_graph(g)
    _note(f"embedded a graph with {len(g.vertices)} vertices and {len(g.edges)} edges")
    _emit(comma_object_to_json(w), args)
    return 0


def _cmd_coreflect(args) -> int:
    w = comma_object_from_json(_load_json(args.object), closure_cap=args.closure_cap)
    core = coreflect(w)
    _note(f"coreflection graph has {len(core.graph.edges)} edges on {len(core.graph.vertices)} vertices")
    _emit({"graph": graph_to_json(core.graph), "counit": comma_morphism_to_json(core.counit)}, args)
    return 0


def _cmd_raag_reduce(args) -> int:
    g = graph_from_json(_load_json(args.graph))
    raag = raag_of(g)
    word = word_from_tokens(args.word)
    reduced = raag_reduce(raag, word)
    identity = raag_is_identity(raag, word)
    _note(f"reduced {len(word)} letters to {len(reduced)}")
    _emit({"reduced": word_to_tokens(reduced), "identity": identity}, args)
    return 0


def _cmd_commutation_graph(args) -> int:
    h = group_from_json(_load_json(args.group), closure_cap=args.closure_cap)
    if not isinstance(h, FiniteGroup):
        raise MalformedInput("commutation graphs need a finite group")
    graph = commutation_graph(h)
    _note(f"group of order {len(h.elements)}, commutation graph has {len(graph.edges)} edges")
    _emit(graph_to_json(graph), args)
    return 0


def _cmd_homs(args) -> int:
    g = graph_from_json(_load_json(args.graph))
    other = _load_json(args.target)
    if isinstance(other, dict) and "vertices" in other:
        h = graph_from_json(other)
        homs = enumerate_graph_homs(g, h)
        payload = {
            "count": len(homs),
            "dom": graph_to_json(g),
            "cod": graph_to_json(h),
            "homs": [{v: f.vmap.mapping[v] for v in g.vertices} for f in homs],
        }
    else:
        h = group_from_json(other, closure_cap=args.closure_cap)
        if not isinstance(h, FiniteGroup):
            raise MalformedInput("hom enumeration needs a graph or a finite group")
        homs = enumerate_homs_raag_to_finite(raag_of(g), h)
        payload = {
            "count": len(homs),
            "dom": graph_to_json(g),
            "group": group_to_json(h),
            "homs": [{v: f.generator_images[v] for v in g.vertices} for f in homs],
        }
    _note(f"{payload['count']} homomorphisms")
    _emit(payload, args)
    return 0


def _cmd_check(args) -> int:
    names = list(args.suites)
    if "all" in names:
        names = list(verify.SUITE_NAMES)
    for name in names:
        if name not in verify.SUITE_NAMES:
            raise _UsageError(f"unknown suite {name!r}; known: {', '.join(verify.SUITE_NAMES)}, all")

    def run(name: str) -> verify.CheckReport:
        return verify.run_suite(
            name,
            max_vertices=args.max_vertices,
            max_word_len=args.max_word_len,
            seed=args.seed,
        )

    if args.parallel and len(names) > 1:
        with ThreadPoolExecutor(max_workers=len(names)) as pool:
            reports = list(pool.map(run, names))
    else:
        reports = [run(name) for name in names]
    for report in reports:
        status = "passed" if report.passed else "FAILED"
        _note(f"{report.name}: {status} ({report.cases_checked} cases; {report.scope})")
    _emit([report.to_json() for report in reports], args)
    return 0 if all(report.passed for report in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="commagraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write the JSON result to this file instead of stdout")
        p.add_argument(
            "--closure-cap",
            type=int,
            default=CLOSURE_DEFAULT_CAP,
            help="largest permutation closure the group reader will compute",
        )

    p = sub.add_parser("gamma", help="embed a graph as a comma object over its presented group")
    p.add_argument("graph", help="graph JSON file")
    common(p)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("coreflect", help="best graph approximation of a comma object")
    p.add_argument("object", help="comma object JSON file")
    common(p)
    p.set_defaults(func=_cmd_coreflect)

    p = sub.add_parser("raag-reduce", help="canonical form of a word in a graph's presented group")
    common(p)
    p.add_argument("graph", help="presentation graph JSON file")
    # REMAINDER so inverse tokens like -a are not mistaken for flags; put
    # options before the graph argument.
    p.add_argument("word", nargs=argparse.REMAINDER, help='word tokens, "-" prefix for inverses')
    p.set_defaults(func=_cmd_raag_reduce)

    p = sub.add_parser("commutation-graph", help="commutation graph of a finite group")
    p.add_argument("group", help="group JSON file")
    common(p)
    p.set_defaults(func=_cmd_commutation_graph)

    p = sub.add_parser("homs", help="enumerate homs from a graph into a graph or finite group")
    p.add_argument("graph", help="domain graph JSON file")
    p.add_argument("target", help="codomain graph or group JSON file")
    common(p)
    p.set_defaults(func=_cmd_homs)

    p = sub.add_parser("check", help="run named verification suites")
    p.add_argument("suites", nargs="+", help=f"suite names: {', '.join(verify.SUITE_NAMES)}, all")
    p.add_argument("--max-vertices", type=int, default=None, help="override the vertex bound")
    p.add_argument("--max-word-len", type=int, default=None, help="override the exhaustive word length")
    p.add_argument("--seed", type=int, default=0, help="seed for pooled objects and random words")
    p.add_argument("--parallel", action="store_true", help="run suites concurrently")
    common(p)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
