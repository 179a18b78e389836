"""Command line: ``outerturan {construct,check,ex,verify,probe}``.

Exit codes: 0 success, 1 usage or input error, 2 a computed value
contradicts a closed form, 3 a size cap refused the request.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import constructions as C
from .doublestar import DoubleStarSpec, is_double_star_free
from .extremal import (DEFAULT_CAP, ResourceGuardError, ResultCache, compare, ex_value,
                       probe_conjecture, rows_as_dicts, verify_theorems, VerifyRow, ProbeRow)
from .graph import Graph, Graph6Error, GraphError, graph6_encode, is_connected, read_graph6_lines
from .planarity import is_outerplanar
from .report import render

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_REFUSED = 0, 1, 2, 3

FAMILY_SPEC = {"Mk": (2, 2), "Gn": (2, 2), "2M5": (2, 2), "Tn": (3, 3), "On": (2, 4),
               "H": (2, 3), "Hprime": (2, 3)}

EX_COLUMNS = ("n", "p", "q", "mode", "value", "predicted", "kind", "status", "hypothesis",
              "mop_count", "witness")


class UsageError(Exception):
    pass


def _spec(p: Optional[int], q: Optional[int], default=(2, 2)) -> DoubleStarSpec:
    p = default[0] if p is None else p
    q = default[1] if q is None else q
    try:
        return DoubleStarSpec(p, q)
    except GraphError as exc:
        raise UsageError(str(exc))


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"family {args.family} needs --{name}")
    return value


def build_family(args) -> Graph:
    fam = args.family
    try:
        if fam == "Mk":
            return C.fan_mop(_need(args, "k"))
        if fam == "Gn":
            return C.construct_Gn(_need(args, "n"))
        if fam == "2M5":
            return C.construct_two_M5()
        if fam == "Tn":
            return C.construct_Tn(_need(args, "n"))
        if fam == "On":
            return C.construct_On(_need(args, "n"))
        if fam == "H":
            return C.construct_H()
        if fam == "Hprime":
            return C.construct_Hprime(_need(args, "t"), _need(args, "i"))
    except GraphError as exc:
        raise UsageError(str(exc))
    raise UsageError(f"unknown family {fam!r}; choose from {', '.join(C.FAMILIES)}")


def summarize(g: Graph, spec: DoubleStarSpec) -> Dict:
    return {"n": g.n, "edges": g.num_edges, "max_degree": g.max_degree(),
            "connected": is_connected(g), "outerplanar": is_outerplanar(g),
            "spec": f"{spec.p},{spec.q}", "free": is_double_star_free(g, spec)}


def _fmt(v) -> str:
    return str(v).lower() if isinstance(v, bool) else str(v)


def _kv(d: Dict) -> str:
    return " ".join(f"{k}={_fmt(v)}" for k, v in d.items())


def cmd_construct(args, out) -> int:
    g = build_family(args)
    spec = _spec(args.p, args.q, FAMILY_SPEC[args.family])
    summary = summarize(g, spec)
    if args.format == "json":
        print(json.dumps({"family": args.family, "graph6": graph6_encode(g), **summary}), file=out)
    else:
        print(graph6_encode(g), file=out)
        print(_kv(summary), file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    spec = _spec(args.p, args.q)
    stream = sys.stdin if args.input in (None, "-") else open(args.input)
    status = EXIT_OK
    with stream:
        for lineno, item in read_graph6_lines(stream):
            if isinstance(item, Graph6Error):
                print(f"line={lineno} error={str(item)!r} offset={item.offset}", file=out)
                status = EXIT_USAGE
                continue
            s = summarize(item, spec)
            print(f"line={lineno} n={s['n']} outerplanar={_fmt(s['outerplanar'])} "
                  f"connected={_fmt(s['connected'])} free={_fmt(s['free'])} "
                  f"edges={s['edges']}", file=out)
    return status


def ex_row(res) -> Dict:
    status, known = compare(res.value, res.n, DoubleStarSpec(res.p, res.q), res.mode)
    return {"n": res.n, "p": res.p, "q": res.q, "mode": res.mode, "value": res.value,
            "predicted": known.value, "kind": known.kind, "status": status,
            "hypothesis": known.hypothesis, "mop_count": res.mop_count,
            "witness": res.witnesses[0]}


def _cache(args) -> ResultCache:
    return ResultCache(args.cache) if args.cache else ResultCache()


def cmd_ex(args, out) -> int:
    spec = _spec(args.p, args.q)
    modes = ("connected", "general") if args.mode == "both" else (args.mode,)
    cache = _cache(args)
    rows = [ex_row(ex_value(args.n, spec, m, workers=args.workers, cache=cache,
                            cap=args.cap, allow_over_cap=args.allow_over_cap)) for m in modes]
    print(render(rows, args.format, "ex", EX_COLUMNS), file=out)
    return EXIT_MISMATCH if any(r["status"] == "MISMATCH" for r in rows) else EXIT_OK


def _parse_specs(items: Optional[Sequence[str]]) -> Optional[List[Tuple[int, int]]]:
    if not items:
        return None
    specs = []
    for item in items:
        try:
            p, q = (int(x) for x in item.split(","))
        except ValueError:
            raise UsageError(f"bad --spec {item!r}; expected P,Q")
        _spec(p, q)
        specs.append((p, q))
    return specs


def cmd_verify(args, out) -> int:
    kwargs = {}
    specs = _parse_specs(args.spec)
    if specs:
        kwargs["specs"] = specs
    rows = verify_theorems(args.n_max, n_min=args.n_min, workers=args.workers,
                           cache=_cache(args), cap=args.cap,
                           allow_over_cap=args.allow_over_cap, **kwargs)
    print(render(rows_as_dicts(rows), args.format, "verify", VerifyRow.FIELDS), file=out)
    return EXIT_MISMATCH if any(r.status == "MISMATCH" for r in rows) else EXIT_OK


def cmd_probe(args, out) -> int:
    rows = probe_conjecture(args.n_from, args.n_to, workers=args.workers, cache=_cache(args),
                            cap=args.cap, allow_over_cap=args.allow_over_cap)
    print(render(rows_as_dicts(rows), args.format, "probe", ProbeRow.FIELDS), file=out)
    return EXIT_MISMATCH if any(r.meets_lower_bound is False for r in rows) else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="outerturan", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def search_opts(sp, cap):
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--cap", type=int, default=cap)
        sp.add_argument("--allow-over-cap", action="store_true",
                        help="run above the size cap (may be slow)")
        sp.add_argument("--format", choices=("table", "csv", "json", "graph6"), default="table")
        sp.add_argument("--cache", default=None,
                        help="results cache file (default: $OUTERTURAN_CACHE, else none)")

    sp = sub.add_parser("construct", help="print a family member as graph6 plus a summary")
    sp.add_argument("family", help=", ".join(C.FAMILIES))
    for name in ("n", "k", "t", "i", "p", "q"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--format", choices=("graph6", "json"), default="graph6")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("check", help="classify graph6 lines")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("ex", help="exact extremal number by search")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--mode", choices=("connected", "general", "both"), default="general")
    search_opts(sp, DEFAULT_CAP)
    sp.set_defaults(func=cmd_ex)

    sp = sub.add_parser("verify", help="compare searches with the closed forms")
    sp.add_argument("--n-max", type=int, default=9)
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--spec", action="append", help="P,Q (repeatable)")
    search_opts(sp, 11)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("probe", help="exact S_{2,3} values, connected vs general")
    sp.add_argument("--from", dest="n_from", type=int, default=7)
    sp.add_argument("--to", dest="n_to", type=int, default=10)
    search_opts(sp, DEFAULT_CAP)
    sp.set_defaults(func=cmd_probe)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = make_parser().parse_args(argv)
        if hasattr(args, "cache") and args.cache is None:
            args.cache = os.environ.get("OUTERTURAN_CACHE") or None
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be positive")
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"refused: {exc}. Raise --cap or pass --allow-over-cap.", file=sys.stderr)
        return EXIT_REFUSED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
