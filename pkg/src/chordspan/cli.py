"""Command-line interface.

stdout carries only the payload (documents, result lines); diagnostics go to
stderr. Exit status: 0 success, 1 invalid input or failed verification, 2 bad
arguments. Configuration precedence is flags, then ``CHORDSPAN_*`` environment
variables, then defaults.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from dataclasses import dataclass
from typing import Optional

from chordspan import builders, enumeration, io_formats, spectrum
from chordspan.errors import ChordspanError, OutOfRange, SearchExhausted, VerificationFailure
from chordspan.graph_core import MopGraph, count_ears, has_diameter, layer_profile, random_mop, tcl


@dataclass
class CliConfig:
    enum_cap: int = enumeration.DEFAULT_CAP
    search_depth: Optional[int] = None
    search_frontier: int = spectrum.DEFAULT_FRONTIER
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        for name in ("enum_cap", "search_frontier"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.search_depth is not None and self.search_depth <= 0:
            raise ValueError("search_depth must be positive")
        if self.output_format not in ("json", "dot", "summary"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {name} must be an integer, got {raw!r}")


def _config(args) -> CliConfig:
    def pick(flag, env, default):
        if flag is not None:
            return flag
        value = _env_int(env)
        return default if value is None else value

    return CliConfig(
        enum_cap=pick(getattr(args, "cap", None), "CHORDSPAN_ENUM_CAP", enumeration.DEFAULT_CAP),
        search_depth=pick(getattr(args, "depth", None), "CHORDSPAN_SEARCH_DEPTH", None),
        search_frontier=pick(
            getattr(args, "frontier", None), "CHORDSPAN_SEARCH_FRONTIER", spectrum.DEFAULT_FRONTIER
        ),
        output_format=getattr(args, "format", None) or "json",
        seed=getattr(args, "seed", None) or 0,
    )


def summary_line(g: MopGraph) -> str:
    layer = max(layer_profile(g))
    layer_text = str(layer // 2) if layer % 2 == 0 else f"{layer}/2"
    return (
        f"n={g.n} tcl={tcl(g)} ears={count_ears(g)} "
        f"diameter={'true' if has_diameter(g) else 'false'} max_layer={layer_text}"
    )


def _emit(g: MopGraph, fmt: str, metadata: bool = False) -> None:
    if fmt == "json":
        print(io_formats.to_json(g, include_metadata=metadata))
    elif fmt == "dot":
        sys.stdout.write(io_formats.to_dot(g))
    else:
        print(summary_line(g))


def _read_graph(path: str) -> MopGraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return io_formats.from_json(text)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or a single integer, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


# -- commands -----------------------------------------------------------------


def cmd_build(args, parser) -> int:
    cfg = _config(args)
    if args.n < 3:
        parser.error("--n must be at least 3")
    if args.kind == "greedy":
        g = builders.build_greedy(args.n).graph
    elif args.kind == "shell":
        g = builders.build_shell(args.n)
    else:
        g = random_mop(args.n, random.Random(cfg.seed))
    _emit(g, cfg.output_format, args.metadata)
    return 0


def cmd_tcl(args, parser) -> int:
    try:
        g = _read_graph(args.input)
    except (ChordspanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(summary_line(g))
    return 0


def cmd_export(args, parser) -> int:
    try:
        g = _read_graph(args.input)
    except (ChordspanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(g, args.format or "dot", args.metadata)
    return 0


def _cap_for(args, parser, cfg: CliConfig, highest: int) -> int:
    if highest <= cfg.enum_cap:
        return cfg.enum_cap
    if args.force:
        return highest
    parser.error(f"order {highest} is above the enumeration cap {cfg.enum_cap}; pass --force or --cap")


def cmd_enumerate(args, parser) -> int:
    cfg = _config(args)
    if args.n < 3:
        parser.error("--n must be at least 3")
    cap = _cap_for(args, parser, cfg, args.n)
    stats = enumeration.enumerate_all(args.n, cap=cap, workers=args.workers)
    print(f"n={stats.n} count={stats.count} min={stats.min_seen} max={stats.max_seen}")
    for value in sorted(stats.tcl_histogram):
        print(f"tcl={value} count={stats.tcl_histogram[value]}")
    return 0


def _verify_one(theorem: str, n: int, cap: int, workers: int) -> str:
    if theorem == "min":
        rep = enumeration.verify_extremes(n, cap, workers)
        return f"n={n} min={rep.min_seen} formula={builders.min_tcl(n)} PASS"
    if theorem == "max":
        rep = enumeration.verify_extremes(n, cap, workers)
        return f"n={n} max={rep.max_seen} formula={builders.max_tcl(n)} PASS"
    if theorem == "ears":
        rep = enumeration.verify_two_ears_characterization(n, cap, workers)
        return f"n={n} maximal={rep.maximal_graphs} two_ears={rep.two_ear_graphs} PASS"
    if theorem == "spectrum":
        seen = enumeration.spectrum_by_enumeration(n, cap, workers)
        want = set(range(builders.min_tcl(n), builders.max_tcl(n) + 1))
        if seen != want:
            raise VerificationFailure(
                f"n={n}: enumerated spectrum misses {sorted(want - seen)} and adds {sorted(seen - want)}"
            )
        return f"n={n} values={builders.min_tcl(n)}..{builders.max_tcl(n)} PASS"
    k = n
    return f"theta({k})={enumeration.verify_theta(k, cap)} PASS"


def cmd_verify(args, parser) -> int:
    cfg = _config(args)
    lo, hi = args.n_range
    if args.theorem == "theta":
        if lo < 1:
            parser.error("theta takes k >= 1")
        highest = 3 * 2**hi + 1
    else:
        floor = 5 if args.theorem in ("ears",) else 3
        if lo < floor:
            parser.error(f"--n-range must start at {floor} or above for {args.theorem}")
        highest = hi
    cap = _cap_for(args, parser, cfg, highest)
    status = 0
    for n in range(lo, hi + 1):
        try:
            print(_verify_one(args.theorem, n, cap, args.workers))
        except VerificationFailure as exc:
            label = f"theta({n})" if args.theorem == "theta" else f"n={n}"
            print(f"{label} FAIL")
            print(f"error: {exc}", file=sys.stderr)
            if exc.counterexample is not None:
                print(io_formats.to_json(exc.counterexample, include_metadata=True))
            status = 1
    return status


def cmd_spectrum(args, parser) -> int:
    cfg = _config(args)
    n = args.n
    if n < 5:
        parser.error("--n must be at least 5")
    lo, hi = builders.min_tcl(n), builders.max_tcl(n)
    if args.witness is None:
        line = f"min={lo} max={hi}"
        if n <= cfg.enum_cap:
            values = sorted(enumeration.spectrum_by_enumeration(n, cfg.enum_cap))
            line += " values={" + ",".join(map(str, values)) + "}"
        print(line)
        return 0
    try:
        rep = spectrum.find_graph_with_tcl(n, args.witness, cfg.search_depth, cfg.search_frontier)
    except OutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SearchExhausted as exc:
        print(f"error: {exc} (expanded={exc.expanded}, closest gap={exc.best_gap})", file=sys.stderr)
        return 1
    print(io_formats.to_json(rep.graph, include_metadata=True))
    print(f"moves={len(rep.moves)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordspan",
        description="Total chord length of maximal outerplanar graphs. Vertices are 0-based "
        "(vertex i is v_{i+1} in 1-based notation).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct the greedy, shell or a random graph")
    p.add_argument("--kind", choices=["greedy", "shell", "random"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot", "summary"], default=None)
    p.add_argument("--metadata", action="store_true", help="add tcl and ears to JSON output")
    p.add_argument("--seed", type=int, default=None, help="seed for --kind random")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("tcl", help="measure a graph document")
    p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_tcl)

    p = sub.add_parser("export", help="convert a graph document to DOT or canonical JSON")
    p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    p.add_argument("--format", choices=["json", "dot", "summary"], default=None)
    p.add_argument("--metadata", action="store_true")
    p.set_defaults(func=cmd_export)

    def enum_flags(p):
        p.add_argument("--cap", type=int, default=None, help="enumeration cap (default 16)")
        p.add_argument("--force", action="store_true", help="raise the cap to cover the request")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("enumerate", help="TCL histogram over all triangulations")
    p.add_argument("--n", type=int, required=True)
    enum_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a theorem by exhaustive enumeration")
    p.add_argument("--theorem", choices=["min", "max", "ears", "theta", "spectrum"], required=True)
    p.add_argument("--n-range", type=_parse_range, required=True, help="A..B (k range for theta)")
    enum_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="TCL range, enumerated values, or a witness graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--witness", type=int, default=None, metavar="L")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--depth", type=int, default=None, help="max flips in the gap search")
    p.add_argument("--frontier", type=int, default=None, help="max states in the gap search")
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValueError as exc:
        if isinstance(exc, ChordspanError):
            raise
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
