"""Command-line front end.

Exit status: 0 on success, 1 on parse or usage errors, 2 when a check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import nakayama as nk
from .bridge import dyck_to_kupisch, kupisch_to_dyck
from .census import CHECKS, run_census
from .dyck import DyckPath, parse_path
from .errors import IdentityNotCovered, NakayamaError, ParseError
from .perm import (
    Permutation,
    bjs,
    bjs_inverse,
    connectivity_formula,
    fixed_points,
    fixed_points_formula,
    parse_permutation,
    support_size,
)
from .render import render_ascii, render_svg

KINDS = ("kupisch", "dyck", "perm")

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2


@dataclass(frozen=True)
class ObjectSpec:
    kind: str
    payload: str


@dataclass(frozen=True)
class Triple:
    path: DyckPath
    perm: Permutation
    kupisch: nk.KupischSeries

    def text(self, kind: str) -> str:
        if kind == "dyck":
            return str(self.path)
        if kind == "perm":
            return str(self.perm)
        return str(self.kupisch)


def load(spec: ObjectSpec) -> Triple:
    if spec.kind == "dyck":
        path = parse_path(spec.payload)
    elif spec.kind == "perm":
        path = bjs_inverse(parse_permutation(spec.payload))
    elif spec.kind == "kupisch":
        path = kupisch_to_dyck(nk.parse_kupisch(spec.payload))
    else:
        raise ParseError(f"unknown kind {spec.kind!r}")
    return Triple(path, bjs(path), dyck_to_kupisch(path))


def cmd_convert(spec: ObjectSpec, target: str) -> str:
    return load(spec).text(target)


def cmd_stats(spec: ObjectSpec) -> dict:
    obj = load(spec)
    report = {
        "kupisch": list(obj.kupisch.c),
        "dyck": str(obj.path),
        "permutation": list(obj.perm.images),
    }
    report.update(nk.algebra_stats(obj.kupisch))
    report["fixed_points"] = fixed_points(obj.perm)
    report["support_size"] = support_size(obj.perm)
    try:
        theorem_pp = connectivity_formula(obj.perm)
    except IdentityNotCovered:
        theorem_pp = None
    report["formulas"] = {
        "P": nk.formula_P(obj.path),
        "PP": nk.formula_PP(obj.path),
        "corollaryP": nk.formula_corollaryP(obj.perm),
        "corollaryPP": nk.formula_corollaryPP(obj.perm),
        "theoremP": fixed_points_formula(obj.perm),
        "theoremPP": theorem_pp,
    }
    report["path_data"] = obj.path.to_json()
    report["permutation_data"] = obj.perm.to_json()
    return report


def stats_consistent(report: dict) -> bool:
    return (
        report["dim_ext1_JJ"] == report["support_size"]
        and report["proj_id1"] == report["fixed_points"]
    )


def cmd_resolve(spec: ObjectSpec, module: str, direction: str) -> dict:
    c = load(spec).kupisch
    m = nk.check_module(c, nk.parse_module(module))
    if direction == "injective":
        terms = nk.injective_coresolution(c, m)
        chain = " -> ".join(["0", str(m)] + [str(t) for t in terms] + ["0"])
        label = "id"
    else:
        terms = nk.projective_resolution(c, m)
        chain = " -> ".join(["0"] + [str(t) for t in reversed(terms)] + [str(m), "0"])
        label = "pd"
    return {
        "module": str(m),
        "direction": direction,
        "terms": [str(t) for t in terms],
        "chain": chain,
        label: max(len(terms) - 1, 0),
    }


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_object_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--kupisch", help='Kupisch series, e.g. "4,6,5,4,4,3,2,2,1"')
    g.add_argument("--dyck", help='step word, e.g. "UUDD"')
    g.add_argument("--perm", help='one-line permutation, e.g. "4 1 2 7 3 5 8 6"')


def _object_from(args) -> ObjectSpec:
    for kind in KINDS:
        value = getattr(args, kind)
        if value is not None:
            return ObjectSpec(kind, value)
    raise ParseError("no object given")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nakayama321", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="convert between Kupisch series, Dyck paths and permutations")
    p.add_argument("--from", dest="source", choices=KINDS, required=True)
    p.add_argument("--to", dest="target", choices=KINDS, required=True)
    p.add_argument("payload")

    p = sub.add_parser("stats", help="all statistics of one object as JSON")
    _add_object_args(p)

    p = sub.add_parser("resolve", help="minimal (co)resolution of a uniserial module")
    _add_object_args(p)
    p.add_argument("--module", required=True, help='"M(i,k)" or "0"')
    p.add_argument("--direction", choices=("projective", "injective"), default="projective")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("census", help="verify all checks on every object of semilength n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", default="all", help="comma-separated names or 'all'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.add_argument("--report", help="with --format csv, also write the JSON report here")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("render", help="draw the Dyck path with level annotations")
    _add_object_args(p)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--homology", action="store_true")
    p.add_argument("--output")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except NakayamaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "convert":
        print(cmd_convert(ObjectSpec(args.source, args.payload), args.target))
        return EXIT_OK

    if args.command == "stats":
        report = cmd_stats(_object_from(args))
        print(json.dumps(report, indent=2))
        if not stats_consistent(report):
            print("error: statistics violate the main theorems", file=sys.stderr)
            return EXIT_CHECK
        return EXIT_OK

    if args.command == "resolve":
        res = cmd_resolve(_object_from(args), args.module, args.direction)
        if args.json:
            print(json.dumps(res, indent=2))
        else:
            label = "id" if args.direction == "injective" else "pd"
            print(res["chain"])
            print(f"{label}={res[label]}")
        return EXIT_OK

    if args.command == "census":
        if args.n < 0:
            raise ParseError("--n must be non-negative")
        names = CHECKS if args.checks == "all" else tuple(
            s.strip() for s in args.checks.split(",") if s.strip()
        )
        unknown = set(names) - set(CHECKS)
        if unknown:
            raise ParseError(f"unknown checks: {', '.join(sorted(unknown))}")
        report = run_census(args.n, names, workers=args.workers, keep_rows=args.format == "csv")
        if args.format == "csv":
            _emit(report.to_csv(), args.output)
            if args.report:
                _emit(json.dumps(report.to_json(), indent=2) + "\n", args.report)
        else:
            _emit(json.dumps(report.to_json(), indent=2) + "\n", args.output)
        if not report.passed:
            print(f"error: failed checks: {', '.join(report.failed_checks())}", file=sys.stderr)
            return EXIT_CHECK
        return EXIT_OK

    if args.command == "render":
        path = load(_object_from(args)).path
        render = render_svg if args.format == "svg" else render_ascii
        _emit(render(path, homology=args.homology), args.output)
        return EXIT_OK

    raise ParseError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
