"""Command-line interface.

Data (graph6 lines) goes to stdout or --out; summaries and warnings go to
stderr.  Exit codes: 0 on success, 1 on runtime errors (including streams
with malformed lines), 2 on bad flags.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import graph6
from .bounds import moore_bound, refined_lower_bound
from .covers import (
    canonical_double_cover,
    is_valid_target_by_cover,
    k13loop_assignment,
    search_k13loop_lifts,
    voltage_lift,
)
from .excision import iter_reductions, reduce_by_cycle
from .generator import generate_all, is_valid_target
from .graph import Graph, girth, odd_girth
from .groups import Group, cyclic_group, dihedral_group, load_cayley_table


@dataclass
class RunConfig:
    """Validated invocation parameters for one subcommand."""

    subcommand: str
    n: Optional[int] = None
    k: Optional[int] = None
    g: Optional[int] = None
    workers: int = 1
    dedup: bool = True
    dedup_cap: Optional[int] = None
    force_search: bool = False
    cap: Optional[int] = None
    odd_girth_target: Optional[int] = None
    groups_spec: Optional[str] = None
    group_spec: Optional[str] = None
    loops: Optional[Tuple[int, int, int]] = None
    all_choices: bool = False
    verbose: bool = False
    in_path: Optional[str] = None
    out_path: Optional[str] = None
    # reserved for randomized self-checks; no subcommand draws from it yet
    seed: Optional[int] = None


class FlagError(Exception):
    """A config problem only detectable after flag parsing (exit code 2)."""


def _info(msg: str) -> None:
    print(msg, file=sys.stderr)


def _warn(msg: str) -> None:
    print(f"cagekit: warning: {msg}", file=sys.stderr)


def _out_stream(cfg: RunConfig):
    if cfg.out_path:
        return open(cfg.out_path, "w")
    return sys.stdout


def _in_lines(cfg: RunConfig):
    if cfg.in_path:
        return open(cfg.in_path, "r")
    return sys.stdin


def _load_group_spec(spec: str) -> Group:
    """Resolve --group values: cyclic:M, dihedral:M, or a Cayley table path."""
    for prefix, builder in (("cyclic:", cyclic_group), ("dihedral:", dihedral_group)):
        if spec.startswith(prefix):
            try:
                m = int(spec[len(prefix):])
            except ValueError:
                raise FlagError(f"--group: bad order in {spec!r}")
            if m < 1:
                raise FlagError(f"--group: order must be positive, got {m}")
            return builder(m)
    path = Path(spec)
    if not path.is_file():
        raise FlagError(f"--group: no such Cayley table file: {spec}")
    try:
        return load_cayley_table(path)
    except ValueError as exc:
        raise FlagError(f"--group: {spec}: {exc}")


def _groups_source(spec: str):
    """Resolve --groups values: cyclic:MAX or a directory of .tbl files."""
    if spec.startswith("cyclic:"):
        try:
            max_m = int(spec[len("cyclic:"):])
        except ValueError:
            raise FlagError(f"--groups: bad order in {spec!r}")
        if max_m < 1:
            raise FlagError(f"--groups: order cap must be positive, got {max_m}")
        return (cyclic_group(m) for m in range(1, max_m + 1))
    path = Path(spec)
    if not path.is_dir():
        raise FlagError(f"--groups: expected cyclic:MAX or a directory, got {spec!r}")
    groups = []
    for tbl in sorted(path.glob("*.tbl")):
        try:
            groups.append(load_cayley_table(tbl))
        except ValueError as exc:
            raise FlagError(f"--groups: {tbl}: {exc}")
    if not groups:
        raise FlagError(f"--groups: no .tbl files in {spec}")
    groups.sort(key=lambda grp: grp.order)
    return groups


def cmd_generate(cfg: RunConfig) -> int:
    t0 = time.perf_counter()
    report = generate_all(
        cfg.n,
        cfg.k,
        cfg.g,
        dedup=cfg.dedup,
        workers=cfg.workers,
        trust_bounds=not cfg.force_search,
        dedup_cap=cfg.dedup_cap,
    )
    out = _out_stream(cfg)
    try:
        graph6.write_lines(report.graphs, out)
    finally:
        if out is not sys.stdout:
            out.close()
    for note in report.notes:
        _warn(note)
    _info(
        f"generate n={cfg.n} k={cfg.k} g={cfg.g}: {report.count} graphs, "
        f"{report.nodes} search nodes, {time.perf_counter() - t0:.2f}s, "
        f"backend={report.backend}"
    )
    return 0


def cmd_bounds(cfg: RunConfig) -> int:
    k, g = cfg.k, cfg.g
    if g % 2 == 0:
        mb = moore_bound(k, g)
        final = mb if (mb * k) % 2 == 0 else mb + 1
        print(f"k={k} g={g}")
        print(f"moore  {mb}")
        print(f"final  {final}")
        _info("refinements apply to odd girth only; reporting the tree-counting bound")
        return 0
    rep = refined_lower_bound(k, g)
    print(f"k={k} g={g}")
    print(f"moore  {rep.moore}")
    print(f"prop1  {rep.prop1}")
    print(f"prop2  {rep.prop2}")
    print(f"cover  {rep.cover}")
    print(f"final  {rep.final}")
    for note in rep.notes:
        _info(note)
    return 0


def cmd_lift_search(cfg: RunConfig) -> int:
    t0 = time.perf_counter()
    groups = _groups_source(cfg.groups_spec)
    found = search_k13loop_lifts(cfg.g, groups, cap=cfg.cap)
    if found is None:
        _info(
            f"lift-search g={cfg.g}: no valid lift in {cfg.groups_spec}"
            + (f" under cap {cfg.cap}" if cfg.cap is not None else "")
        )
        return 0
    order, witnesses = found
    out = _out_stream(cfg)
    try:
        for group, triples in witnesses:
            for triple in triples:
                lift = voltage_lift(k13loop_assignment(group, triple))
                out.write(graph6.encode(lift) + "\n")
                _info(f"order {order}: group {group.name}, loop voltages {triple}")
    finally:
        if out is not sys.stdout:
            out.close()
    _info(
        f"lift-search g={cfg.g}: smallest lift order {order}, "
        f"{sum(len(t) for _, t in witnesses)} witness triples, "
        f"{time.perf_counter() - t0:.2f}s"
    )
    return 0


def cmd_lift(cfg: RunConfig) -> int:
    group = _load_group_spec(cfg.group_spec)
    for v in cfg.loops:
        if not 0 <= v < group.order:
            raise FlagError(f"--loops: voltage {v} out of range for group of order {group.order}")
        if v == group.identity:
            raise FlagError("--loops: identity voltage on a loop collapses the fiber")
    lift = voltage_lift(k13loop_assignment(group, cfg.loops))
    out = _out_stream(cfg)
    try:
        out.write(graph6.encode(lift) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    _info(
        f"lift: group {group.name}, loop voltages {cfg.loops}, "
        f"{lift.order} vertices, girth {girth(lift)}"
    )
    return 0


def cmd_cover(cfg: RunConfig) -> int:
    bad = []
    lines = _in_lines(cfg)
    out = _out_stream(cfg)
    count = 0
    try:
        for graph in graph6.iter_decode(lines, on_error=lambda ln, exc: bad.append((ln, exc))):
            out.write(graph6.encode(canonical_double_cover(graph)) + "\n")
            count += 1
    finally:
        if out is not sys.stdout:
            out.close()
        if lines is not sys.stdin:
            lines.close()
    for ln, exc in bad:
        _warn(f"line {ln}: {exc}")
    _info(f"cover: {count} graphs, {len(bad)} malformed lines skipped")
    return 1 if bad else 0


def cmd_reduce(cfg: RunConfig) -> int:
    bad = []
    skipped = 0
    lines = _in_lines(cfg)
    out = _out_stream(cfg)
    produced = 0
    read = 0
    try:
        for graph in graph6.iter_decode(lines, on_error=lambda ln, exc: bad.append((ln, exc))):
            read += 1
            try:
                if cfg.all_choices:
                    for small in iter_reductions(graph):
                        out.write(graph6.encode(small) + "\n")
                        produced += 1
                else:
                    out.write(graph6.encode(reduce_by_cycle(graph)) + "\n")
                    produced += 1
            except ValueError as exc:
                _warn(f"graph {read}: {exc}")
                skipped += 1
    finally:
        if out is not sys.stdout:
            out.close()
        if lines is not sys.stdin:
            lines.close()
    for ln, exc in bad:
        _warn(f"line {ln}: {exc}")
    _info(
        f"reduce: {read} graphs in, {produced} out, {skipped} not reducible, "
        f"{len(bad)} malformed lines skipped"
    )
    return 1 if bad or skipped else 0


def _filter_reason(graph: Graph, k: int, g: int, q: Optional[int]) -> str:
    from .graph import has_cycle_of_length, is_regular

    if not is_regular(graph, k):
        return f"not {k}-regular"
    gr = girth(graph)
    if gr != g:
        return f"girth {gr} != {g}"
    if has_cycle_of_length(graph, g + 1):
        return f"has a {g + 1}-cycle"
    if q is not None:
        og = odd_girth(graph)
        if og != q:
            return f"odd girth {og} != {q}"
    return "ok"


def cmd_filter(cfg: RunConfig) -> int:
    k, g, q = cfg.k, cfg.g, cfg.odd_girth_target
    bad: List[Tuple[int, Exception]] = []
    lines = _in_lines(cfg)
    out = _out_stream(cfg)
    read = 0
    passed = 0
    t0 = time.perf_counter()
    try:
        for lineno, raw in enumerate(lines, start=1):
            stripped = raw.strip()
            if not stripped:
                continue
            try:
                graph = graph6.decode(stripped)
            except graph6.Graph6Error as exc:
                _warn(f"line {lineno}: {exc}")
                bad.append((lineno, exc))
                continue
            read += 1
            by_search = is_valid_target(graph, k, g)
            by_cover = is_valid_target_by_cover(graph, k, g)
            if by_search != by_cover:
                raise RuntimeError(
                    f"line {lineno}: verifier disagreement "
                    f"(backtracking={by_search}, double cover={by_cover})"
                )
            ok = by_search
            if ok and q is not None:
                ok = odd_girth(graph) == q
            if cfg.verbose:
                _info(f"line {lineno}: {'pass' if ok else 'drop'} ({_filter_reason(graph, k, g, q)})")
            if ok:
                out.write(stripped + "\n")
                passed += 1
    finally:
        if out is not sys.stdout:
            out.close()
        if lines is not sys.stdin:
            lines.close()
    _info(
        f"filter k={k} g={g}"
        + (f" odd-girth={q}" if q is not None else "")
        + f": {read} graphs in, {passed} passed, {len(bad)} malformed lines skipped, "
        f"{time.perf_counter() - t0:.2f}s"
    )
    return 1 if bad else 0


_DISPATCH = {
    "generate": cmd_generate,
    "bounds": cmd_bounds,
    "lift-search": cmd_lift_search,
    "lift": cmd_lift,
    "cover": cmd_cover,
    "reduce": cmd_reduce,
    "filter": cmd_filter,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cagekit",
        description="Generate and analyze small regular graphs of girth g with no (g+1)-cycle.",
    )
    parser.add_argument("--seed", type=int, default=None, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("generate", help="exhaustively generate all such graphs on n vertices")
    p.add_argument("-n", type=int, required=True, help="number of vertices")
    p.add_argument("-k", type=int, required=True, help="degree")
    p.add_argument("-g", type=int, required=True, help="girth")
    p.add_argument("--workers", type=int, default=1, help="parallel search workers")
    p.add_argument("--no-dedup", action="store_true", help="disable in-search isomorph rejection")
    p.add_argument("--dedup-cap", type=int, default=None, help="max canonical forms held in memory")
    p.add_argument("--force-search", action="store_true",
                   help="search even below the computed lower bound")
    p.add_argument("--out", default=None, help="write graph6 here instead of stdout")

    p = sub.add_parser("bounds", help="lower bounds on the number of vertices")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", type=int, required=True)

    p = sub.add_parser("lift-search", help="smallest claw-with-loops lift over a group family")
    p.add_argument("-g", type=int, required=True, help="girth of the lift")
    p.add_argument("--groups", required=True, metavar="DIR|cyclic:MAX",
                   help="cyclic:MAX scans Z1..ZMAX; a directory is read for *.tbl Cayley tables")
    p.add_argument("--cap", type=int, default=None, help="stop once lifts would exceed this order")
    p.add_argument("--out", default=None)

    p = sub.add_parser("lift", help="build one claw-with-loops lift")
    p.add_argument("--group", required=True, metavar="SPEC",
                   help="cyclic:M, dihedral:M, or a Cayley table file")
    p.add_argument("--loops", required=True, metavar="a,b,c",
                   help="voltages for the three loops")
    p.add_argument("--out", default=None)

    p = sub.add_parser("cover", help="bipartite double cover of each input graph")
    p.add_argument("--in", dest="in_path", default=None, metavar="FILE",
                   help="graph6 input (default stdin)")
    p.add_argument("--out", default=None)

    p = sub.add_parser("reduce", help="excise a shortest cycle from each input graph")
    p.add_argument("--in", dest="in_path", default=None, metavar="FILE")
    p.add_argument("--all", action="store_true", help="emit every cycle/edge/pairing choice")
    p.add_argument("--out", default=None)

    p = sub.add_parser("filter", help="keep inputs that are k-regular, girth g, no (g+1)-cycle")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("--odd-girth", type=int, default=None, dest="odd_girth",
                   help="additionally require this exact odd girth")
    p.add_argument("--in", dest="in_path", default=None, metavar="FILE")
    p.add_argument("--out", default=None)
    p.add_argument("-v", "--verbose", action="store_true", help="per-graph verdicts on stderr")
    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=args.command, seed=args.seed)

    def need(flag: str, value: int, minimum: int) -> int:
        if value < minimum:
            parser.error(f"{flag} must be at least {minimum}, got {value}")
        return value

    if args.command == "generate":
        cfg.n = need("-n", args.n, 1)
        cfg.k = need("-k", args.k, 3)
        cfg.g = need("-g", args.g, 3)
        cfg.workers = need("--workers", args.workers, 1)
        cfg.dedup = not args.no_dedup
        if args.dedup_cap is not None:
            cfg.dedup_cap = need("--dedup-cap", args.dedup_cap, 1)
        cfg.force_search = args.force_search
        cfg.out_path = args.out
    elif args.command == "bounds":
        cfg.k = need("-k", args.k, 3)
        cfg.g = need("-g", args.g, 3)
    elif args.command == "lift-search":
        cfg.g = need("-g", args.g, 3)
        cfg.groups_spec = args.groups
        if args.cap is not None:
            cfg.cap = need("--cap", args.cap, 4)
        cfg.out_path = args.out
    elif args.command == "lift":
        cfg.group_spec = args.group
        parts = args.loops.split(",")
        if len(parts) != 3:
            parser.error(f"--loops expects three comma-separated voltages, got {args.loops!r}")
        try:
            cfg.loops = tuple(int(tok) for tok in parts)
        except ValueError:
            parser.error(f"--loops expects integers, got {args.loops!r}")
        cfg.out_path = args.out
    elif args.command == "cover":
        cfg.in_path = args.in_path
        cfg.out_path = args.out
    elif args.command == "reduce":
        cfg.in_path = args.in_path
        cfg.all_choices = args.all
        cfg.out_path = args.out
    elif args.command == "filter":
        cfg.k = need("-k", args.k, 3)
        cfg.g = need("-g", args.g, 3)
        if args.odd_girth is not None:
            cfg.odd_girth_target = need("--odd-girth", args.odd_girth, 3)
            if cfg.odd_girth_target % 2 == 0:
                parser.error(f"--odd-girth must be odd, got {args.odd_girth}")
        cfg.in_path = args.in_path
        cfg.out_path = args.out
        cfg.verbose = args.verbose

    if cfg.in_path is not None and not Path(cfg.in_path).is_file():
        parser.error(f"--in: no such file: {cfg.in_path}")
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        cfg = _config_from_args(parser, args)
        return _DISPATCH[cfg.subcommand](cfg)
    except FlagError as exc:
        print(f"cagekit: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1
    except (ValueError, OSError, RuntimeError, MemoryError) as exc:
        print(f"cagekit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
