"""Command-line entry point: ``ordpoly {construct,verify,conjecture,compare,graph}``.

Exit codes: 0 success, 1 a check failed (or a comparison found differences),
2 bad usage or unreadable input.
"""

import argparse
import sys

from ordpoly import constructions as C
from ordpoly import document as D
from ordpoly import graphs as G
from ordpoly import verify as V
from ordpoly.errors import (AppendixFormatUnavailable, BadParams, ParseError,
                            PolytopeError, RankDeficient)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

APPENDIX_TOKEN = "@appendix"


class UsageError(Exception):
    pass


def int_list(text):
    """``"5"``, ``"5,7"`` or an inclusive range ``"2:6"`` (mixable: ``"2:4,7"``)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            lo, hi = part.split(":", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty list {text!r}")
    return out


def _single(values, flag):
    if values is None:
        return None
    if len(values) != 1:
        raise UsageError(f"{flag} takes a single value here")
    return values[0]


def spec_from_args(args):
    kind = args.kind
    d, k, n, m = (_single(args.d, "-d"), _single(args.k, "-k"),
                  _single(args.n, "-n"), _single(args.m, "-m"))
    if kind == "polygon":
        d = 2 if d is None else d
    if kind == "pyramid" and m is not None:
        if d is None:
            raise UsageError("pyramid needs -d")
        n = d + m
    if kind == "simplex" and n is None:
        n = d
    if d is None or n is None:
        raise UsageError(f"{kind} needs -d and -n" + (" (or -m)" if kind == "pyramid" else ""))
    return C.PolytopeSpec(kind, d, n, k)


def specs_from_args(args):
    """Every spec on the grid spanned by ``-d``, ``-k``, ``-n`` (``-m`` for pyramids)."""
    kind = args.kind
    ds = args.d or ([2] if kind == "polygon" else None)
    if ds is None:
        raise UsageError("-d is required")
    ns = args.n
    if kind == "pyramid" and args.m:
        return [C.PolytopeSpec("pyramid", d, d + m) for d in ds for m in args.m]
    if kind == "ordinary":
        ds = [d for d in ds if d >= 5 and d % 2]
    specs = V.expand_grid(kind, ds, args.k, ns)
    if not specs:
        raise UsageError("the parameter grid is empty")
    return specs


def _add_spec_args(p, grid=False):
    helptext = "value, comma list or range a:b" if grid else None
    p.add_argument("--kind", choices=C.KINDS, default="multiplex")
    kw = {"type": int_list, "help": helptext}
    p.add_argument("-d", **kw)
    p.add_argument("-k", **kw)
    p.add_argument("-n", **kw)
    p.add_argument("-m", type=int_list, help="pyramid base parameter (an (m+3)-gon)")


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_document(source):
    if source == APPENDIX_TOKEN:
        return D.parse_appendix(D.appendix_text())
    try:
        with open(source) as fh:
            return D.load_document(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


# --------------------------------------------------------------------------
# commands

def cmd_construct(args):
    spec = spec_from_args(args)
    L = C.construct(spec)
    doc = D.document_from_lattice(spec, L, with_flag=not args.no_flag,
                                  with_toric=not args.no_flag)
    if args.format == "appendix":
        text = D.to_appendix(doc)
    else:
        text = doc.to_json(indent=None if args.compact else 1)
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args):
    specs = specs_from_args(args)
    try:
        checks = V.parse_checks(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = V.verify(specs, checks, budget=args.budget, jobs=args.jobs)
    if args.json:
        _write(report.to_json(), args.out)
    else:
        lines = report.lines()
        if not args.verbose:
            lines = [ln for ln in lines[:-1] if not ln.startswith("PASS")] + lines[-1:]
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_conjecture(args):
    status = EXIT_OK
    out = []
    for d in args.d:
        try:
            report = V.conjecture_report(d)
        except RankDeficient as exc:
            out.append(f"FAIL rank d={d}: rank {exc.rank} < {exc.expected}")
            status = EXIT_FAIL
            continue
        out.extend(report.lines())
        if not report.ok:
            status = EXIT_FAIL
    _write("\n".join(out) + "\n", args.out)
    return status


def cmd_compare(args):
    a = _read_document(args.a)
    b = _read_document(args.b)
    diff = D.compare(a, b)
    lines = diff.lines() or ["identical"]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if diff.empty else EXIT_FAIL


def cmd_graph(args):
    spec = spec_from_args(args)
    if spec.kind == "multiplex":
        graph = G.multiplex_edges(spec.d, spec.n)
    elif spec.kind == "ordinary":
        graph = G.ordinary_edges(spec.k, spec.n)
    else:
        graph = G.graph_of(C.construct(spec))
    name = "".join(ch if ch.isalnum() else "_" for ch in str(spec)).strip("_")
    _write(G.to_dot(graph, name or "G"), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="ordpoly", description="Face lattices of multiplexes and ordinary polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a face lattice and write it out")
    _add_spec_args(p)
    p.add_argument("--format", choices=("json", "appendix"), default="json")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--no-flag", action="store_true", help="omit flag vector and toric h")
    p.add_argument("--compact", action="store_true", help="single-line JSON")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check enumerated lattices against closed forms")
    _add_spec_args(p, grid=True)
    p.add_argument("--checks", default="all", help="comma list of checks or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None,
                   help=f"max faces per lattice (default ${V.BUDGET_ENV} or {V.DEFAULT_BUDGET})")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing results too")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="rank of the spanning family's f-vectors")
    p.add_argument("-d", type=int_list, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("compare", help="diff two lattice documents")
    p.add_argument("a", help=f"JSON or listing file, or {APPENDIX_TOKEN}")
    p.add_argument("b")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("graph", help="DOT export of the polytope graph")
    _add_spec_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BadParams, ParseError, AppendixFormatUnavailable) as exc:
        print(f"ordpoly {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolytopeError as exc:
        print(f"ordpoly {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
