"""Command-line surface with stable, machine-readable output.

Every verb reads a seed from --seed (a file path, "-" for stdin, inline
JSON, or a catalog spec like "Star:5"), works over the ring named by
--ring, and prints either canonical JSON (sorted keys) or plain text.
Exit codes: 0 success, 1 domain error (a structured {code, message,
detail} object is printed), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from clusterclass import catalog as catalog_mod
from clusterclass.classgroup import (
    is_factorial,
    rank_by_formula,
    rank_by_snf,
    source_freezing_reduction,
)
from clusterclass.errors import ClusterError
from clusterclass.factors import (
    column_gcd,
    exchange_polynomial,
    k_factors,
    z_factors,
)
from clusterclass.partners import partner_partition, prime_ledger
from clusterclass.rings import BaseRing
from clusterclass.seeds import (
    SeedMatrix,
    build_quiver,
    canonical_form,
    is_acyclic,
    mutate,
    mutation_class,
    seed_from_dict,
    validate,
)


class UsageError(Exception):
    pass


def _parse_catalog_spec(text: str) -> SeedMatrix:
    name, _, tail = text.partition(":")
    aliases = {fam.lower(): fam for fam in catalog_mod.FAMILIES}
    family = aliases.get(name.strip().lower())
    if family is None:
        raise UsageError(f"unknown catalog family {name!r}")
    try:
        params = [int(x) for x in tail.split(",") if x.strip()] if tail else []
    except ValueError:
        raise UsageError(f"bad catalog parameters in {text!r}") from None
    return catalog_mod.build(family, *params)


def _load_seed(source: str) -> SeedMatrix:
    if source == "-":
        raw = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        raw = source
    elif os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            raw = fh.read()
    else:
        return _parse_catalog_spec(source)
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"seed source is not valid JSON: {exc}") from None
    return seed_from_dict(obj)


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print("\n".join(_text_lines(obj)))


def _scalar(value) -> str:
    return json.dumps(value)


def _text_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, dict) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, indent + 1))
            elif isinstance(value, list) and any(
                isinstance(item, (dict, list)) for item in value
            ):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict) or (
                isinstance(item, list)
                and any(isinstance(x, (dict, list)) for x in item)
            ):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines


def _seed_dict_with_symmetrizer(s: SeedMatrix) -> dict:
    out = s.to_dict()
    out["symmetrizer"] = list(s.symmetrizer)
    return out


def _cmd_validate(args) -> dict:
    s = _load_seed(args.seed)
    return _seed_dict_with_symmetrizer(s)


def _cmd_mutate(args) -> dict:
    s = _load_seed(args.seed)
    for i in args.at:
        s = mutate(s, i)
    return s.to_dict()


def _cmd_quiver(args) -> dict:
    q = build_quiver(_load_seed(args.seed))
    return {
        "n": q.n,
        "m": q.m,
        "arcs": [
            {"from": src, "to": dst, "mult": w} for src, dst, w in q.arcs
        ],
    }


def _cmd_acyclic(args) -> dict:
    return {"acyclic": is_acyclic(_load_seed(args.seed))}


def _cmd_class(args) -> dict:
    result = mutation_class(_load_seed(args.seed), cap=args.cap)
    return {
        "count": len(result.seeds),
        "complete": result.complete,
        "seeds": [c.to_dict() for c in result.sorted_seeds()],
    }


def _cmd_partners(args) -> dict:
    s = _load_seed(args.seed)
    ring = BaseRing.parse(args.ring)
    return partner_partition(s, ring).to_dict()


def _cmd_factors(args) -> dict:
    s = _load_seed(args.seed)
    ring = BaseRing.parse(args.ring)
    columns = []
    for i in range(1, s.n + 1):
        poly = exchange_polynomial(s, i, ring)
        columns.append(
            {
                "column": i,
                "gcd": column_gcd(s, i),
                "z_factors": [label.to_dict() for label in z_factors(poly)],
                "k_factors": [factor.to_dict() for factor in k_factors(poly, ring)],
            }
        )
    return {"n": s.n, "columns": columns}


def _cmd_ledger(args) -> dict:
    s = _load_seed(args.seed)
    ring = BaseRing.parse(args.ring)
    return prime_ledger(s, ring).to_dict()


def _cmd_rank(args) -> dict:
    s = _load_seed(args.seed)
    ring = BaseRing.parse(args.ring)
    snf_report = rank_by_snf(s, ring)
    formula_report = rank_by_formula(s, ring)
    # Two independent routes; disagreement would be an implementation bug.
    assert snf_report.rank == formula_report.rank
    assert snf_report.per_block == formula_report.per_block
    out = snf_report.to_dict()
    out["factorial"] = is_factorial(s, ring).factorial
    return out


def _cmd_factorial(args) -> dict:
    s = _load_seed(args.seed)
    ring = BaseRing.parse(args.ring)
    return is_factorial(s, ring).to_dict()


def _cmd_freeze_report(args) -> dict:
    s = _load_seed(args.seed)
    ring = BaseRing.parse(args.ring)
    try:
        indices = [int(x) for x in args.noninv.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad index list {args.noninv!r}") from None
    return source_freezing_reduction(s, indices, ring).to_dict()


def _cmd_catalog(args) -> dict:
    if args.catalog_action == "build":
        spec = args.family + (":" + ",".join(args.params) if args.params else "")
        return _parse_catalog_spec(spec).to_dict()
    return _verify_dict(args)


def _verify_dict(args) -> dict:
    ring = BaseRing.parse(args.ring)
    report = catalog_mod.verify_tables(ring, args.max, which=args.which)
    return report.to_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterclass",
        description="Exact class groups and factoriality for acyclic cluster algebra seeds.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    seed_opt = argparse.ArgumentParser(add_help=False)
    seed_opt.add_argument(
        "--seed",
        required=True,
        help="seed source: file path, - for stdin, inline JSON, or catalog spec like Star:5",
    )
    ring_opt = argparse.ArgumentParser(add_help=False)
    ring_opt.add_argument(
        "--ring",
        default="Z",
        help="base ring: Z | Q | algclosed | custom:<orders> (default Z)",
    )
    fmt_opt = argparse.ArgumentParser(add_help=False)
    fmt_opt.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )

    sub.add_parser("validate", parents=[seed_opt, fmt_opt]).set_defaults(
        func=_cmd_validate
    )
    p_mutate = sub.add_parser("mutate", parents=[seed_opt, fmt_opt])
    p_mutate.add_argument(
        "--at",
        action="append",
        type=int,
        required=True,
        help="exchangeable index to mutate at (repeatable, applied in order)",
    )
    p_mutate.set_defaults(func=_cmd_mutate)
    sub.add_parser("quiver", parents=[seed_opt, fmt_opt]).set_defaults(func=_cmd_quiver)
    sub.add_parser("acyclic", parents=[seed_opt, fmt_opt]).set_defaults(
        func=_cmd_acyclic
    )
    p_class = sub.add_parser("class", parents=[seed_opt, fmt_opt])
    p_class.add_argument("--cap", type=int, default=1000)
    p_class.set_defaults(func=_cmd_class)
    sub.add_parser("partners", parents=[seed_opt, ring_opt, fmt_opt]).set_defaults(
        func=_cmd_partners
    )
    sub.add_parser("factors", parents=[seed_opt, ring_opt, fmt_opt]).set_defaults(
        func=_cmd_factors
    )
    sub.add_parser("ledger", parents=[seed_opt, ring_opt, fmt_opt]).set_defaults(
        func=_cmd_ledger
    )
    sub.add_parser("rank", parents=[seed_opt, ring_opt, fmt_opt]).set_defaults(
        func=_cmd_rank
    )
    sub.add_parser("factorial", parents=[seed_opt, ring_opt, fmt_opt]).set_defaults(
        func=_cmd_factorial
    )
    p_freeze = sub.add_parser("freeze-report", parents=[seed_opt, ring_opt, fmt_opt])
    p_freeze.add_argument(
        "--noninv",
        required=True,
        help="comma-separated non-invertible frozen indices (may be empty)",
    )
    p_freeze.set_defaults(func=_cmd_freeze_report)

    p_catalog = sub.add_parser("catalog", parents=[fmt_opt])
    catalog_sub = p_catalog.add_subparsers(dest="catalog_action", required=True)
    p_build = catalog_sub.add_parser("build", parents=[fmt_opt])
    p_build.add_argument("family")
    p_build.add_argument("params", nargs="*")
    p_build.set_defaults(func=_cmd_catalog, catalog_action="build")
    p_cverify = catalog_sub.add_parser("verify", parents=[ring_opt, fmt_opt])
    p_cverify.add_argument("--max", type=int, default=8)
    p_cverify.add_argument(
        "--which", choices=("all", "dynkin", "extended"), default="all"
    )
    p_cverify.set_defaults(func=_cmd_catalog, catalog_action="verify")

    p_verify = sub.add_parser("verify", parents=[ring_opt, fmt_opt])
    p_verify.add_argument("--max", type=int, default=8)
    p_verify.add_argument(
        "--which", choices=("all", "dynkin", "extended"), default="all"
    )
    p_verify.set_defaults(func=_verify_dict)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    fmt = getattr(args, "format", "json")
    try:
        _emit(args.func(args), fmt)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except ClusterError as exc:
        if fmt == "json":
            print(json.dumps({"error": exc.as_dict()}, sort_keys=True, indent=2))
        else:
            print(f"error {exc.code}: {exc.message}")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
