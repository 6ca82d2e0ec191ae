"""Command-line workbench: validate, classify, census, quotient, and friends.

Exit codes: 0 success, 1 mathematical failure (invalid datum, limit
exceeded), 2 usage or parse error.  With ``--format json`` every command
emits a single schema-versioned JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (
    census,
    census_classes,
    predict_possible_projections,
    write_classes_jsonl,
)
from .classify import ClassifyError, classify_projection
from .datum import (
    DatumError,
    DatumSyntaxError,
    format_datum,
    parse_datum,
    validate,
    vertex_fixing_automorphisms,
)
from .present import LimitExceeded, named_family, quotient_report, simple_index

REPORT_SCHEMA = 1

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


def _read_datum(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_datum(fh.read())


def _emit(args, payload: dict, human: str) -> None:
    if args.format == "json":
        payload = {"schema": REPORT_SCHEMA, **payload}
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        print(human)


def cmd_validate(args) -> int:
    report = validate(_read_datum(args.file))
    lines = [f"datum ({report.d1},{report.d2}) tau=({report.tau1},{report.tau2})"
             f" quads={report.quad_count} squares={report.square_count}"]
    for issue in report.issues:
        lines.append(f"  problem: {issue.message}")
    lines.append("valid" if report.valid else "INVALID")
    _emit(args, {"command": "validate", **report.as_dict()}, "\n".join(lines))
    return EXIT_OK if report.valid else EXIT_MATH


def cmd_classify(args) -> int:
    datum = _read_datum(args.file)
    sides = (1, 2) if args.side == 0 else (args.side,)
    reports = [classify_projection(datum, s, k_max=args.k_max) for s in sides]
    lines = []
    for rep in reports:
        lines.append(f"side {rep.side} (degree {rep.degree}): {rep.descriptor}")
        for key, val in rep.as_dict()["evidence"].items():
            lines.append(f"    {key}: {val}")
    _emit(args, {"command": "classify",
                 "sides": [rep.as_dict() for rep in reports]},
          "\n".join(lines))
    return EXIT_OK


def cmd_census(args) -> int:
    taus = None
    if (args.tau1 is None) != (args.tau2 is None):
        raise DatumError("--tau1 and --tau2 must be given together")
    if args.tau1 is not None:
        taus = (args.tau1, args.tau2)
    if args.classes:
        classes = census_classes(
            args.d1, args.d2, torsion_free=args.torsion_free, taus=taus,
            threads=args.threads)
        n = 0

        def counted():
            nonlocal n
            for item in classes:
                n += 1
                yield item

        with open(args.classes, "w", encoding="utf-8") as fh:
            write_classes_jsonl(counted(), fh)
        _emit(args, {"command": "census", "classes_written": n,
                     "path": args.classes},
              f"wrote {n} classes to {args.classes}")
        return EXIT_OK
    row = census(args.d1, args.d2, torsion_free=args.torsion_free,
                            taus=taus, threads=args.threads)
    human = ["d1,d2,constraint,total,reducible,irreducible,undetermined",
             ",".join(str(v) for v in row.as_csv_row())]
    _emit(args, {"command": "census",
                 "row": dict(zip(("d1", "d2", "constraint", "total",
                                  "reducible", "irreducible", "undetermined"),
                                 row.as_csv_row()))},
          "\n".join(human))
    return EXIT_OK


def cmd_quotient(args) -> int:
    datum = (_read_datum(args.file) if args.file
             else named_family(args.family, args.index))
    if args.simple_index:
        idx = simple_index(datum, args.relator, max_cosets=args.max_cosets)
        _emit(args, {"command": "quotient", "simple_index": idx,
                     "witnesses": list(args.relator)},
              f"finite-residual index: {idx}")
        return EXIT_OK
    rep = quotient_report(datum, args.relator, max_cosets=args.max_cosets)
    _emit(args, {"command": "quotient", "order": rep.order,
                 "abelian_invariants": rep.abelian_invariants,
                 "exponent": rep.exponent,
                 "relators": list(args.relator)},
          rep.structure_hint())
    return EXIT_OK


def cmd_autcount(args) -> int:
    rep = vertex_fixing_automorphisms(_read_datum(args.file))
    _emit(args, {"command": "autcount", "count": rep.count,
                 "group": rep.group_name},
          f"{rep.count} vertex-fixing automorphism(s); full group {rep.group_name}")
    return EXIT_OK


def cmd_family(args) -> int:
    datum = named_family(args.name, args.index)
    text = format_datum(datum)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(args, {"command": "family", "path": args.output},
              f"wrote {args.name} to {args.output}")
    else:
        _emit(args, {"command": "family", "datum": text}, text.rstrip("\n"))
    return EXIT_OK


def cmd_predict(args) -> int:
    names = sorted(predict_possible_projections(
        args.d1, args.d2, torsion_free=args.torsion_free, side=args.side,
        k_max=args.k_max))
    _emit(args, {"command": "predict", "descriptors": names},
          "\n".join(names) if names else "(no candidates)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="treeworks",
        description="Workbench for groups acting on products of two trees.")
    top.add_argument("--format", choices=("text", "json"), default="text")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a datum file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="classify projection closures")
    p.add_argument("file")
    p.add_argument("--side", type=int, choices=(0, 1, 2), default=0,
                   help="0 = both sides")
    p.add_argument("--k-max", type=int, default=None)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("census", help="enumerate classes up to equivalence")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--torsion-free", action="store_true")
    p.add_argument("--tau1", type=int, default=None)
    p.add_argument("--tau2", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--classes", metavar="PATH",
                   help="write one JSON line per class instead of count rows")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("quotient", help="order of a quotient by extra relators")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--family")
    p.add_argument("--index", type=int, default=None,
                   help="parameter for --family")
    p.add_argument("--relator", action="append", default=[], required=True)
    p.add_argument("--max-cosets", type=int, default=10 ** 6)
    p.add_argument("--simple-index", action="store_true",
                   help="treat relators as finite-residual witnesses and "
                        "report max quotient order")
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("autcount",
                       help="count the vertex-fixing complex automorphisms")
    p.add_argument("file")
    p.set_defaults(fn=cmd_autcount)

    p = sub.add_parser("family", help="materialize a named example datum")
    p.add_argument("name")
    p.add_argument("--index", type=int, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("predict",
                       help="candidate projection closures for a shape")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--torsion-free", action="store_true")
    p.add_argument("--side", type=int, choices=(1, 2), default=2)
    p.add_argument("--k-max", type=int, default=None)
    p.set_defaults(fn=cmd_predict)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except DatumSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DatumError, ClassifyError, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
