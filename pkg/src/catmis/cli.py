"""Command-line interface.

Inputs are read from a file path or standard input ('-'). A file whose
first token is an integer is treated as an instance spec, anything else
as an edge list (recognition then runs automatically).

Exit codes: 0 success, 1 domain error (not a caterpillar, oracle guard,
non-tree input), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .caterpillar import (
    CaterpillarDecomposition,
    StageNames,
    StageProfile,
    gen_random,
    normalize,
    parse_spec,
    recognize,
    serialize_spec,
    to_tree,
)
from .enumeration import enumerate_mis, iter_path_indices, verify_mis
from .errors import CatmisError, ParseError
from .graph import Tree, parse_edge_list
from .level_graph import build, count_paths, export_dot
from .oracle import oracle_enumerate

__all__ = ["main"]

BENCH_PROFILES = ("two-hairs", "bare")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _is_spec_text(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        first = line.split()[0]
        try:
            int(first)
        except ValueError:
            return False
        return True
    return False


def _load_tree(path: str) -> Tree:
    text = _read_input(path)
    if _is_spec_text(text):
        return to_tree(parse_spec(text))
    return parse_edge_list(text)


def _load_decomposition(path: str) -> CaterpillarDecomposition:
    text = _read_input(path)
    if _is_spec_text(text):
        return parse_spec(text)
    return recognize(parse_edge_list(text))


def _profile_instance(profile: str, k: int) -> CaterpillarDecomposition:
    if profile == "two-hairs":
        stage = StageProfile(0, True)
    else:
        stage = StageProfile(0, False)
    profiles = (stage,) * k
    names = tuple(
        StageNames((), (f"l{i}", f"m{i}") if stage.two else None)
        for i in range(1, k + 1)
    )
    backbone = tuple(f"v{i}" for i in range(1, k + 1))
    return CaterpillarDecomposition(backbone, profiles, names)


def _cmd_recognize(args) -> int:
    d = _load_decomposition(args.input)
    codes = ",".join(str(c) for c in d.t_codes())
    print(f"k={d.k} T={codes}")
    return 0


def _cmd_normalize(args) -> int:
    d = _load_decomposition(args.input)
    norm, _ = normalize(d)
    sys.stdout.write(serialize_spec(norm))
    return 0


def _cmd_levelgraph(args) -> int:
    norm, _ = normalize(_load_decomposition(args.input))
    graph = build(norm)
    if args.dot:
        sys.stdout.write(export_dot(graph))
    else:
        for i, lvl in enumerate(graph.levels, start=1):
            print(f"level {i}: {' '.join(v.name for v in lvl)}")
    return 0


def _cmd_count(args) -> int:
    norm, _ = normalize(_load_decomposition(args.input))
    print(count_paths(build(norm)))
    return 0


def _cmd_enumerate(args) -> int:
    d = _load_decomposition(args.input)
    norm, _ = normalize(d)
    graph = build(norm)
    out = sys.stdout
    for members in enumerate_mis(graph, d, expand=args.expand, limit=args.limit):
        out.write(" ".join(sorted(members)))
        out.write("\n")
    return 0


def _cmd_verify(args) -> int:
    tree = _load_tree(args.input)
    members = frozenset(args.set.split())
    print("true" if verify_mis(tree, members) else "false")
    return 0


def _cmd_gen(args) -> int:
    d = gen_random(args.k, args.max_ones, args.p_two, args.seed)
    sys.stdout.write(serialize_spec(d))
    return 0


def _cmd_oracle(args) -> int:
    tree = _load_tree(args.input)
    out = sys.stdout
    for members in oracle_enumerate(tree):
        out.write(" ".join(sorted(members)))
        out.write("\n")
    return 0


def _cmd_bench(args) -> int:
    if args.k_min < 1 or args.k_max < args.k_min:
        raise ParseError("need 1 <= k-min <= k-max")
    print("k,mis_count,total_ns,ns_per_set")
    for k in range(args.k_min, args.k_max + 1):
        graph = build(_profile_instance(args.profile, k))
        expected = count_paths(graph)
        start = time.perf_counter_ns()
        emitted = 0
        for _ in iter_path_indices(graph):
            emitted += 1
        total_ns = time.perf_counter_ns() - start
        if emitted != expected:
            raise AssertionError(
                f"k={k}: walked {emitted} paths, counting pass says {expected}"
            )
        print(f"{k},{emitted},{total_ns},{total_ns / emitted:.2f}")
        sys.stdout.flush()
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catmis",
        description="Enumerate, count, and verify maximal independent sets "
        "of caterpillar trees with hairs of length one and two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument(
            "input", nargs="?", default="-",
            help="input file (edge list or instance spec); '-' for stdin",
        )

    sp = sub.add_parser("recognize", help="print k and the stage profile codes")
    add_input(sp)
    sp.set_defaults(func=_cmd_recognize)

    sp = sub.add_parser("normalize", help="print the normalized instance spec")
    add_input(sp)
    sp.set_defaults(func=_cmd_normalize)

    sp = sub.add_parser("levelgraph", help="print the level graph")
    add_input(sp)
    sp.add_argument("--dot", action="store_true", help="emit DOT instead of a roster")
    sp.set_defaults(func=_cmd_levelgraph)

    sp = sub.add_parser("count", help="print the number of maximal independent sets")
    add_input(sp)
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("enumerate", help="stream maximal independent sets, one per line")
    add_input(sp)
    sp.add_argument("--limit", type=int, default=None, help="stop after N sets")
    sp.add_argument(
        "--expand", action="store_true",
        help="expand stage representatives back to all original pendants",
    )
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("verify", help="check one vertex set for maximal independence")
    add_input(sp)
    sp.add_argument("--set", required=True, help="space-separated vertex labels")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("gen", help="print a random instance spec")
    sp.add_argument("--k", type=int, required=True, help="backbone length")
    sp.add_argument("--max-ones", type=int, default=0, help="max length-1 hairs per stage")
    sp.add_argument("--p-two", type=float, default=0.0, help="length-2 hair probability")
    sp.add_argument("--seed", type=int, default=0, help="random seed")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("oracle", help="brute-force enumeration for small trees")
    add_input(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("bench", help="CSV timing sweep of the enumeration engine")
    sp.add_argument("--k-min", type=int, default=10)
    sp.add_argument("--k-max", type=int, default=22)
    sp.add_argument("--profile", choices=BENCH_PROFILES, default="two-hairs")
    sp.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"catmis: error: {exc}", file=sys.stderr)
        return 2
    except CatmisError as exc:
        print(f"catmis: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"catmis: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
