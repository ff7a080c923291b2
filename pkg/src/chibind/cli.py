"""Command-line interface.

Subcommands: ``check``, ``color``, ``verify``, ``partition``, ``extremal``,
``fuzz``, ``stats``.  Exit codes: 0 success, 1 negative check/verify or
failed campaign, 2 usage or input errors.

Graphs are read with ``--input PATH --format graph6|edges``; the edge-list
format is ``n m`` on the first line then one ``u v`` pair per line.
Coloring files (written by ``color``, read by ``verify``) start with
``colors <k>`` and then one ``v c`` line per vertex.  The environment
variable ``CHI_BIND_TIMEOUT_MS`` supplies the default exact-solver budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .engine import NotInClassError, bound, color
from .extremal import named_graph, tightness_report
from .graphs import (
    FormatError,
    Graph,
    GraphError,
    decode_graph6,
    encode_graph6,
    from_edge_list,
    to_edge_list,
)
from .oracles import ChromaticTimeout, clique_number, exact_stats
from .partition import ThreeNeighborsError, build_partition, check_properties
from .patterns import find_induced, in_class
from .sampling import FuzzReport, SamplerConfig, SamplingFailure, fuzz_bound

USAGE_ERROR = 2


def _read_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}", 0) from exc
    if fmt == "graph6":
        return decode_graph6(text)
    return from_edge_list(text)


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def coloring_to_text(colors) -> str:
    k = len(set(colors)) if colors else 0
    lines = [f"colors {k}"]
    lines.extend(f"{v} {c}" for v, c in enumerate(colors))
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str) -> tuple[int, dict[int, int]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0].split()) != 2 or lines[0].split()[0] != "colors":
        raise FormatError("coloring file must start with 'colors <k>'", 1)
    try:
        k = int(lines[0].split()[1])
    except ValueError:
        raise FormatError("bad color count header", 1) from None
    assignment: dict[int, int] = {}
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'v c', got {ln!r}", lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer line {ln!r}", lineno) from None
        if v in assignment:
            raise FormatError(f"vertex {v} colored twice", lineno)
        assignment[v] = c
    return k, assignment


def _default_timeout() -> int | None:
    raw = os.environ.get("CHI_BIND_TIMEOUT_MS")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def _parse_prob(text: str) -> float:
    return float(Fraction(text))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chibind",
        description="Structure checks and constructive coloring for "
        "(P2+P3, co-P2+P3)-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="graph file")
        p.add_argument(
            "--format",
            choices=("graph6", "edges"),
            default="graph6",
            help="input format (default graph6)",
        )

    p = sub.add_parser("check", help="class membership with witness")
    add_input(p)

    p = sub.add_parser("color", help="constructive coloring with trace")
    add_input(p)
    p.add_argument("--output", help="write the coloring file here")
    p.add_argument("--timeout-ms", type=int, default=None)

    p = sub.add_parser("verify", help="validate a coloring file")
    add_input(p)
    p.add_argument("--coloring", required=True, help="coloring file")

    p = sub.add_parser("partition", help="4-cycle partition and rule report")
    add_input(p)

    p = sub.add_parser("extremal", help="emit a named extremal graph")
    p.add_argument(
        "name",
        help="schlafli, schlafli-complement, clebsch-complement, "
        "clebsch-complement-minus-v, grotzsch, g<k>, or 'tightness'",
    )
    p.add_argument("--join-kt", type=int, default=0, metavar="T",
                   help="join the named graph with a T-clique")
    p.add_argument("--k-max", type=int, default=12,
                   help="last row of the tightness table")
    p.add_argument("--output", help="write graph6 here instead of stdout")
    p.add_argument("--timeout-ms", type=int, default=None)

    p = sub.add_parser("fuzz", help="seeded bound-checking campaign")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=_parse_prob, default=0.5,
                   help="edge probability (accepts fractions like 1/2)")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--mode", choices=("reject", "repair"), default="repair")

    p = sub.add_parser("stats", help="exact omega/alpha/chi/theta")
    add_input(p)
    p.add_argument("--timeout-ms", type=int, default=None)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return _dispatch(args)
    except (FormatError, GraphError, SamplingFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ChromaticTimeout as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def _dispatch(args) -> int:
    if args.command == "check":
        g = _read_graph(args.input, args.format)
        ok, witness = in_class(g)
        if ok:
            print(f"in-class: yes (n={g.n} m={g.m})")
            return 0
        name, emb = witness
        print(f"in-class: no; vertices {sorted(emb)} induce {name}")
        return 1

    if args.command == "color":
        g = _read_graph(args.input, args.format)
        timeout = args.timeout_ms if args.timeout_ms is not None else _default_timeout()
        try:
            derivation = color(g, timeout_ms=timeout)
        except NotInClassError as exc:
            print(f"not in class: {exc}", file=sys.stderr)
            return 1
        for line in derivation.render():
            print(line)
        w = clique_number(g) if g.n else 0
        print(
            f"colors used: {derivation.colors_used}"
            + (f" (bound {bound(w)})" if g.n else "")
        )
        _write_text(args.output, coloring_to_text(derivation.coloring))
        return 0

    if args.command == "verify":
        g = _read_graph(args.input, args.format)
        with open(args.coloring, "r", encoding="ascii") as fh:
            declared, assignment = coloring_from_text(fh.read())
        missing = [v for v in range(g.n) if v not in assignment]
        if missing:
            print(f"invalid: vertex {missing[0]} has no color")
            return 1
        for u, v in g.edges():
            if assignment[u] == assignment[v]:
                print(f"improper: edge ({u},{v}) is monochromatic")
                return 1
        used = len(set(assignment[v] for v in range(g.n)))
        if used != declared:
            print(f"invalid: header says {declared} colors, file uses {used}")
            return 1
        if g.n:
            target = bound(clique_number(g))
            if used > target:
                print(f"proper but over bound: {used} > {target}")
                return 1
            print(f"valid: proper, {used} colors <= bound {target}")
        else:
            print("valid: empty graph")
        return 0

    if args.command == "partition":
        g = _read_graph(args.input, args.format)
        emb = find_induced(g, "C4")
        if emb is None:
            print("no induced 4-cycle")
            return 1
        try:
            part = build_partition(g, emb)
        except ThreeNeighborsError as exc:
            print(f"partition failed: {exc}")
            return 1
        print(f"cycle: {list(part.cycle)}")
        for name, block in part.blocks().items():
            print(f"{name}: {sorted(block)}")
        reports = check_properties(g, part)
        for rep in reports:
            print(rep.render())
        bad = [r for r in reports if r.status == "violated"]
        return 1 if bad else 0

    if args.command == "extremal":
        timeout = args.timeout_ms if args.timeout_ms is not None else _default_timeout()
        if args.name == "tightness":
            for row in tightness_report(args.k_max, timeout_ms=timeout):
                print(
                    f"k={row.k} witness={row.witness} n={row.n} "
                    f"omega={row.omega} chi={row.chi} bound={row.bound}"
                )
            return 0
        g = named_graph(args.name)
        if args.join_kt:
            from .extremal import join_kt

            g = join_kt(g, args.join_kt)
        stats = exact_stats(g, timeout_ms=timeout)
        text = encode_graph6(g)
        _write_text(args.output, text + "\n")
        print(
            f"n={g.n} m={g.m} omega={stats.omega} alpha={stats.alpha} "
            f"chi={stats.chi} theta={stats.theta} bound={bound(stats.omega)}"
        )
        return 0

    if args.command == "fuzz":
        cfg = SamplerConfig(
            n=args.n, edge_prob=args.p, seed=args.seed, mode=args.mode
        )
        report = fuzz_bound(cfg, args.count)
        for line in report.render():
            print(line)
        return 0 if report.passed else 1

    if args.command == "stats":
        g = _read_graph(args.input, args.format)
        timeout = args.timeout_ms if args.timeout_ms is not None else _default_timeout()
        stats = exact_stats(g, timeout_ms=timeout)
        w = stats.omega
        print(
            f"n={g.n} m={g.m} omega={stats.omega} alpha={stats.alpha} "
            f"chi={stats.chi} theta={stats.theta}"
            + (f" bound={bound(w)}" if g.n else "")
        )
        return 0

    raise AssertionError(args.command)  # pragma: no cover


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
