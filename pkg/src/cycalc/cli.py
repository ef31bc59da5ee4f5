"""Command-line interface.

Subcommands: catalog | case | sweep | verify | hodge | hh.

Exit codes: 0 success, 1 usage error, 2 domain or validation error,
3 internal consistency failure (word-algebra vs closed-form mismatch).

The environment variable CYCALC_CATALOG may name a JSON catalog file whose
concrete bases are merged after the builtins; an id colliding with a builtin
family is an error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import records
from .catalog import (
    FAMILIES,
    LefschetzBase,
    builtin,
    load_catalog_file,
    merge_user_catalog,
)
from .constructions import ALL_KINDS, ConstructionKind
from .engine import (
    SweepBounds,
    analyze,
    iter_cases,
    negative_dimension_cases,
    sweep,
    verify_cross_check,
)
from .errors import CycalcError, UnknownBase
from .hodge import diamond_for_case, hh_pipeline

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_cy_dim(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise CycalcError(f"cannot parse Calabi-Yau dimension {text!r}; use an integer or p/q")


def _parse_kinds(text: str) -> tuple[ConstructionKind, ...]:
    kinds = []
    for name in text.split(","):
        name = name.strip()
        if not name:
            continue
        try:
            kinds.append(ConstructionKind.from_name(name))
        except ValueError as exc:
            raise CycalcError(str(exc))
    if not kinds:
        raise CycalcError("at least one construction kind is required")
    return tuple(kinds)


def _user_bases() -> tuple[LefschetzBase, ...]:
    path = os.environ.get("CYCALC_CATALOG")
    if not path:
        return ()
    return tuple(merge_user_catalog(load_catalog_file(path)))


def _collect_params(args: argparse.Namespace) -> dict[str, int]:
    params: dict[str, int] = {}
    if args.n is not None:
        params["n"] = args.n
    if args.k is not None:
        params["k"] = args.k
    if args.s is not None:
        params["s"] = args.s
    if args.weights is not None:
        try:
            weights = [int(w) for w in args.weights.split(",") if w.strip()]
        except ValueError:
            raise CycalcError(f"cannot parse weights {args.weights!r}")
        params.update({f"w{i}": w for i, w in enumerate(weights)})
    return params


def _resolve_base(args: argparse.Namespace) -> LefschetzBase:
    params = _collect_params(args)
    if args.base in FAMILIES:
        return builtin(args.base, params)
    for base in _user_bases():
        if base.id == args.base:
            if params:
                raise CycalcError(f"user base {args.base!r} takes no family parameters")
            return base
    raise UnknownBase(f"unknown base id {args.base!r}")


def _construction(args: argparse.Namespace) -> ConstructionKind:
    if args.cover_degree != 2:
        return ConstructionKind.cyclic_cover(args.cover_degree)
    try:
        return ConstructionKind.from_name(args.construction)
    except ValueError as exc:
        raise CycalcError(str(exc))


def _bounds(args: argparse.Namespace, default_kinds: tuple[ConstructionKind, ...]) -> SweepBounds:
    kinds = default_kinds
    if getattr(args, "kinds", None):
        kinds = _parse_kinds(args.kinds)
    families = None
    if getattr(args, "families", None):
        families = tuple(name.strip() for name in args.families.split(",") if name.strip())
    return SweepBounds(
        max_n=args.max_n,
        max_s=args.max_s,
        max_weight_sum=args.max_weight_sum,
        include_weighted=args.include_weighted,
        kinds=kinds,
        families=families,
        extra_bases=_user_bases(),
    )


def _emit(rows: list[dict], fmt: str, table_columns=None) -> None:
    if fmt == "json":
        sys.stdout.write(records.to_json(rows))
    elif fmt == "csv":
        sys.stdout.write(records.to_csv(rows))
    else:
        sys.stdout.write(records.to_table(rows, table_columns))


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "json", "csv"), default="table", help="output format"
    )


def _add_base_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--base", required=True, help="base id (builtin family or user catalog)")
    parser.add_argument("--n", type=int, default=None, help="family parameter n")
    parser.add_argument("--k", type=int, default=None, help="family parameter k")
    parser.add_argument("--s", type=int, default=None, help="family parameter s")
    parser.add_argument("--weights", default=None, help="comma-separated weights for wpn")
    parser.add_argument(
        "--construction",
        choices=("divisor", "cover", "root"),
        required=True,
        help="spherical construction",
    )
    parser.add_argument("--degree", type=int, required=True, help="construction degree d")
    parser.add_argument(
        "--cover-degree",
        type=int,
        default=2,
        help="cyclic cover degree (only 2 is spherical)",
    )


def _add_bounds_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-n", type=int, default=30, help="ceiling for n-type parameters")
    parser.add_argument("--max-s", type=int, default=5, help="ceiling for the quadric parameter")
    parser.add_argument(
        "--max-weight-sum", type=int, default=30, help="weight-sum ceiling for weighted sweeps"
    )
    parser.add_argument(
        "--include-weighted",
        action="store_true",
        help="enumerate weighted projective bases (off by default)",
    )
    parser.add_argument(
        "--kinds",
        default=None,
        help="comma-separated constructions to sweep (divisor,cover,root)",
    )
    parser.add_argument(
        "--families", default=None, help="restrict the sweep to these base ids"
    )


def _cmd_catalog(args: argparse.Namespace) -> int:
    rows = []
    for family in FAMILIES.values():
        rows.append(
            {
                "schema_version": records.SCHEMA_VERSION,
                "id": family.id,
                "display_name": family.display_name,
                "parameters": ",".join(family.param_names),
                "dim_m": family.dim_formula,
                "length_m": family.length_formula,
                "rank_b": family.rank_formula,
                "line_bundle": family.line_bundle_note,
                "omega_is_l_minus_m": True,
            }
        )
    for base in _user_bases():
        rows.append(
            {
                "schema_version": records.SCHEMA_VERSION,
                "id": base.id,
                "display_name": base.display_name,
                "parameters": ",".join(f"{k}={v}" for k, v in sorted(base.parameters.items())),
                "dim_m": str(base.dim_m),
                "length_m": str(base.length_m),
                "rank_b": str(base.rank_b),
                "line_bundle": base.line_bundle_note,
                "omega_is_l_minus_m": base.omega_is_l_minus_m,
            }
        )
    _emit(rows, args.format)
    return EXIT_OK


def _cmd_case(args: argparse.Namespace) -> int:
    base = _resolve_base(args)
    kind = _construction(args)
    case = analyze(base, kind, args.degree)
    _emit([records.case_record(case)], args.format, records.CASE_TABLE_COLUMNS)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    bounds = _bounds(args, default_kinds=SweepBounds().kinds)
    cy_dim = _parse_cy_dim(args.cy_dim) if args.cy_dim is not None else None
    results = sweep(bounds, cy_dim=cy_dim, integer_only=args.integer)
    _emit([records.case_record(c) for c in results], args.format, records.CASE_TABLE_COLUMNS)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    bounds = _bounds(args, default_kinds=ALL_KINDS)
    report = verify_cross_check(bounds)
    print(f"{len(report.mismatches)} mismatches / {report.cases} cases")
    for base_id, params, kind, d in report.mismatches:
        print(f"  MISMATCH {base_id} {params} {kind} d={d}")
    negatives = negative_dimension_cases(iter_cases(bounds))
    hyperplane_only = all(
        case.kind is ConstructionKind.DIVISOR and case.d == 1 for case in negatives
    )
    print(
        f"nonnegativity: {len(negatives)} integer cases with negative dimension, "
        f"all hyperplane-type (divisor, d=1): {'yes' if hyperplane_only else 'NO'}"
    )
    return EXIT_OK if report.ok else EXIT_INTERNAL


def _cmd_hodge(args: argparse.Namespace) -> int:
    base = _resolve_base(args)
    kind = _construction(args)
    case = analyze(base, kind, args.degree)
    diamond = diamond_for_case(case)
    if args.format == "table":
        print(f"{base.display_name}, {kind.value} of degree {args.degree}: dim X = {diamond.dim_x}")
        for q in range(diamond.dim_x + 1):
            row = " ".join(str(diamond.h(p, q)) for p in range(diamond.dim_x + 1))
            print(row)
        return EXIT_OK
    row = {
        "schema_version": records.SCHEMA_VERSION,
        "base_id": base.id,
        "base": base.display_name,
        "params": dict(base.parameters),
        "construction": kind.value,
        "degree": args.degree,
        "dim_x": diamond.dim_x,
        "hodge": [list(r) for r in diamond.hodge],
        "middle_row": list(diamond.middle_row()),
    }
    _emit([row], args.format)
    return EXIT_OK


def _cmd_hh(args: argparse.Namespace) -> int:
    base = _resolve_base(args)
    kind = _construction(args)
    case = analyze(base, kind, args.degree)
    pipeline = hh_pipeline(case)
    if args.format == "table":
        print(f"{base.display_name}, {kind.value} of degree {args.degree}")
        print(f"dim X = {pipeline.diamond.dim_x}")
        print("middle row:", " ".join(str(v) for v in pipeline.diamond.middle_row()))
        print(f"HH(D(X)):   {pipeline.hh_total}")
        print(f"HH(comp.):  {pipeline.hh_component}")
        check = pipeline.check
        if check is None:
            print("homology check: skipped (component is not an integer Calabi-Yau case)")
        else:
            status = "PASS" if check.passed else "FAIL"
            print(
                f"homology check: HH_{-check.n_cy}(component) = {check.value} "
                f"(nonzero required) -> {status}"
            )
            if check.expect_one:
                print(f"one-dimensionality (projective-space hypersurface): value == 1 -> "
                      f"{'PASS' if check.is_one else 'FAIL'}")
        return EXIT_OK
    _emit([records.hh_record(case, pipeline)], args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cycalc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_catalog = sub.add_parser("catalog", help="list builtin bases")
    _add_format(p_catalog)
    p_catalog.set_defaults(func=_cmd_catalog)

    p_case = sub.add_parser("case", help="analyze one (base, construction, degree) case")
    _add_base_args(p_case)
    _add_format(p_case)
    p_case.set_defaults(func=_cmd_case)

    p_sweep = sub.add_parser("sweep", help="enumerate cases over the catalog")
    _add_bounds_args(p_sweep)
    p_sweep.add_argument("--cy-dim", default=None, help="filter: integer or p/q dimension")
    p_sweep.add_argument(
        "--integer", action="store_true", help="filter: integer Calabi-Yau cases only"
    )
    _add_format(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_verify = sub.add_parser(
        "verify", help="cross-check word algebra against closed forms over the catalog"
    )
    _add_bounds_args(p_verify)
    _add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_hodge = sub.add_parser("hodge", help="Hodge diamond of the total space of a case")
    _add_base_args(p_hodge)
    _add_format(p_hodge)
    p_hodge.set_defaults(func=_cmd_hodge)

    p_hh = sub.add_parser("hh", help="Hochschild homology pipeline for a case")
    _add_base_args(p_hh)
    _add_format(p_hh)
    p_hh.set_defaults(func=_cmd_hh)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CycalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
