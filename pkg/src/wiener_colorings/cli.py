"""Command-line interface: wiener, construct, enumerate, verify, render.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .coloring import Coloring, color_classes, coloring_from_json, coloring_to_json, make_coloring, type_of, wiener_coloring
from .cycles import canonical_good_set, good_partition_coloring, is_good, is_weak_max_cycle
from .errors import BudgetError, DomainError, UsageError, WienerError
from .graph import Graph, graph_from_spec, vertex_set, wiener_set
from .majorization import equitable_tuple
from .oracle import DEFAULT_BUDGET, QUOTIENTS, EnumerationScope, brute_force_classes, brute_force_set_maximizers, enumerate_colorings
from .paths import canonical_Ct_member, enumerate_Ct, is_in_Ct
from .render import FORMATS, PALETTE, render
from .suites import CLAIMS, reports_to_csv, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 already; keep the message terse
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"expected a range like 3..9, got {text!r}") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return a, b


def _graph(spec: str) -> Graph:
    """Shorthand ``path:<n>`` / ``cycle:<n>``, or a path to a graph file."""
    if spec.startswith(("path:", "cycle:")):
        return graph_from_spec(spec)
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read graph file {spec!r}: {exc.strerror}") from None
    return graph_from_spec(text)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path!r}: {exc.strerror}") from None


def _colorings_from_lines(text: str) -> list[Coloring]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        obj = json.loads(line)
        if "colors" in obj:
            out.append(coloring_from_json(line))
    return out


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")
    sys.stdout.flush()


# -- verbs -------------------------------------------------------------------


def cmd_wiener(args: argparse.Namespace) -> int:
    if args.coloring:
        f = coloring_from_json(_read_text(args.coloring))
        g = f.graph
        if args.graph and _graph(args.graph) != g:
            raise UsageError("--graph does not match the graph stored in the coloring file")
    else:
        if not args.graph:
            raise UsageError("--graph is required with --colors or --set")
        g = _graph(args.graph)
        f = make_coloring(g, _ints(args.colors)) if args.colors else None
    if f is None:
        if args.per_class:
            raise UsageError("--per-class applies to colorings, not sets")
        _emit(str(wiener_set(g, vertex_set(g, _ints(args.set)))))
        return EXIT_OK
    total = wiener_coloring(f)
    _emit(str(total))
    if args.per_class:
        per = {str(i): wiener_set(g, cls) for i, cls in enumerate(color_classes(f), start=1)}
        _emit(json.dumps({"W": total, "type": list(type_of(f)), "per_class": per}))
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("path-ct", "cycle-good-partition"):
        if not args.type:
            raise UsageError(f"{kind} needs --type")
        t = tuple(_ints(args.type))
        if args.n is not None and sum(t) != args.n:
            raise UsageError(f"type {t} does not sum to n={args.n}")
        try:
            if kind == "path-ct":
                f = canonical_Ct_member(t)
                ok = is_in_Ct(f)
            else:
                f = good_partition_coloring(sum(t), t)
                ok = is_weak_max_cycle(f)
        except DomainError as exc:
            raise UsageError(f"invalid type: {exc}") from None
        if not ok:
            raise WienerError(f"constructed coloring {f.colors} failed its membership check")
        _emit(coloring_to_json(f))
    elif kind == "good-set":
        if args.n is None or args.m is None:
            raise UsageError("good-set needs --n and --m")
        a = canonical_good_set(args.n, args.m)
        if not is_good(args.n, a):
            raise WienerError(f"constructed set {sorted(a)} is not good")
        _emit(json.dumps({"graph": f"cycle:{args.n}", "set": sorted(a)}))
    else:
        if args.n is None or args.k is None:
            raise UsageError("equitable-type needs --n and --k")
        _emit(json.dumps({"type": list(equitable_tuple(args.n, args.k))}))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    cls = args.cls
    count = 0
    if cls == "ct":
        if not args.type:
            raise UsageError("ct needs --type")
        t = tuple(_ints(args.type))
        n = args.n if args.n is not None else (_graph(args.graph).n if args.graph else sum(t))
        if sum(t) != n:
            raise UsageError(f"type {t} does not sum to n={n}")
        if args.graph and _graph(args.graph).kind != "path":
            raise UsageError("ct is defined on paths only")
        for f in enumerate_Ct(t):
            _emit(coloring_to_json(f))
            count += 1
    elif cls == "set-max":
        if args.m is None:
            raise UsageError("set-max needs --m")
        g = _graph(args.graph) if args.graph else None
        if g is None:
            raise UsageError("set-max needs --graph")
        for a in brute_force_set_maximizers(g, args.m):
            _emit(json.dumps({"graph": g.shorthand(), "set": sorted(a)}))
            count += 1
    else:
        if not args.graph:
            raise UsageError(f"{cls} needs --graph")
        if args.k is None:
            raise UsageError(f"{cls} needs --k")
        g = _graph(args.graph)
        t = tuple(_ints(args.type)) if args.type else None
        scope = EnumerationScope(g, args.k, t, args.quotient)
        if cls == "all":
            members = (f.colors for f in enumerate_colorings(scope, budget=args.budget))
        else:
            classes = brute_force_classes(scope, budget=args.budget)
            members = iter(sorted({"lwm": classes.lwm, "wm": classes.wm, "m": classes.m}[cls]))
        for colors in members:
            _emit(coloring_to_json(Coloring(g, colors, args.k)))
            count += 1
    _emit(json.dumps({"count": count}))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for name, claim in CLAIMS.items():
            _emit(f"{name}\t{claim.about}")
        return EXIT_OK
    if not args.claims:
        raise UsageError("name at least one claim, or 'all'")
    names = list(CLAIMS) if args.claims == ["all"] else args.claims
    unknown = [c for c in names if c not in CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim(s): {', '.join(unknown)}; see 'verify --list'")
    second = args.k or args.m
    if args.k and args.m:
        raise UsageError("give --k or --m, not both")
    reports = []
    for name in names:
        r = verify(name, args.n, second, workers=args.workers, budget=args.budget)
        reports.append(r)
        if args.format == "json":
            _emit(r.to_json(timing=not args.no_timing))
        if args.format == "csv" and args.notes:
            for note in r.notes:
                print(f"# {name}: {note}", file=sys.stderr)
    if args.format == "csv":
        sys.stdout.write(reports_to_csv(reports, timing=not args.no_timing))
        sys.stdout.flush()
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_render(args: argparse.Namespace) -> int:
    if args.gallery:
        fs = _colorings_from_lines(_read_text(args.gallery))
    elif args.coloring:
        fs = [coloring_from_json(_read_text(args.coloring))]
    elif args.colors and args.graph:
        fs = [make_coloring(_graph(args.graph), _ints(args.colors))]
    else:
        raise UsageError("render needs --colors with --graph, --coloring FILE or --gallery FILE")
    palette = tuple(p.strip() for p in args.palette.split(",")) if args.palette else PALETTE
    if not palette or any(not p for p in palette):
        raise UsageError("palette must be a comma-separated list of colors")
    out = render(fs, args.format, palette)
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wiener-colorings", description="Wiener index of vertex colorings on paths and cycles.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    w = sub.add_parser("wiener", help="Wiener index of a vertex set or coloring")
    w.add_argument("--graph", help="path:<n>, cycle:<n> or a graph file")
    src = w.add_mutually_exclusive_group(required=True)
    src.add_argument("--colors", help="comma list of colors 1..k, one per vertex")
    src.add_argument("--set", help="comma list of vertex ids")
    src.add_argument("--coloring", metavar="FILE", help="coloring JSON file ('-' for stdin)")
    w.add_argument("--per-class", action="store_true", help="also print W of each color class as JSON")
    w.set_defaults(func=cmd_wiener)

    c = sub.add_parser("construct", help="build a maximizer from the closed-form constructions")
    c.add_argument("kind", choices=["path-ct", "cycle-good-partition", "good-set", "equitable-type"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--type", help="comma list of class sizes")
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("enumerate", help="stream a class of colorings or sets as JSON lines")
    e.add_argument("cls", choices=["ct", "wm", "lwm", "m", "all", "set-max"])
    e.add_argument("--graph")
    e.add_argument("--n", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--type", help="restrict to one type (comma list)")
    e.add_argument("--quotient", choices=QUOTIENTS, default="none")
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max k^n raw colorings (default %(default)s)")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check named claims exhaustively against the oracle")
    v.add_argument("claims", nargs="*", help="claim ids, or 'all'")
    v.add_argument("--list", action="store_true", help="list claim ids and exit")
    v.add_argument("--n", type=_range, help="vertex range a..b")
    v.add_argument("--k", type=_range, help="color range a..b")
    v.add_argument("--m", type=_range, help="set size range a..b (set claims)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--format", choices=["csv", "json"], default="csv")
    v.add_argument("--no-timing", action="store_true", help="omit elapsed times for byte-stable output")
    v.add_argument("--notes", action="store_true", help="print claim notes to stderr in csv mode")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw colorings as ascii, dot or svg")
    r.add_argument("--graph")
    r.add_argument("--colors")
    r.add_argument("--coloring", metavar="FILE")
    r.add_argument("--gallery", metavar="FILE", help="JSON-lines file of colorings ('-' for stdin)")
    r.add_argument("--format", default="ascii", help=f"one of {', '.join(FORMATS)}")
    r.add_argument("--palette", help="comma list of fill colors, indexed by color id")
    r.add_argument("--output", "-o")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, WienerError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
