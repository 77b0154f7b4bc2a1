"""Command-line interface and stable serialization formats.

Every subcommand prints one JSON document (or CSV where selected) to stdout
and is byte-deterministic for fixed inputs.  Integers that can outgrow the
53-bit mantissa of downstream JSON consumers (values, indices, bases, tower
entries) are emitted as decimal strings; structurally small fields (a, b,
m, n, invariants, lengths) stay plain JSON numbers.

Digits are passed on the command line as class values (the decimal shadows
like 2,5,8,11), while bases are passed as the index k of the base element;
the help text of each flag repeats this asymmetry.

Exit status: 0 on success, 1 on domain errors (the error name and message go
to stderr as a JSON object), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from itertools import islice
from typing import Mapping, Sequence, TextIO

from .congruence import arity_shape_table, make_class, minimal_arity_shape
from .errors import CatalogTooLarge, PolyarithError
from .mixed_base import (
    MixedBaseScheme,
    PolyadicMixedScheme,
    decode_binary_mixed,
    eval_binary_mixed,
    eval_polyadic_mixed,
)
from .numeral import (
    DEFAULT_CATALOG_CAP,
    CatalogEntry,
    best_integer_base,
    catalog_size,
    decode,
    efficiency,
    evaluate,
    iter_catalog,
    length_plan,
    numeral_from_values,
)
from .ring import PolyadicRing, minimal_ring, ring_with_arities, verify_ring_laws

CATALOG_FIELDS = ("digits", "value", "k", "base", "a", "b", "m", "n", "lnu", "lmu")
TABLE_FIELDS = ("a", "b", "m", "n", "I", "J")
CAP_ENV_VAR = "POLYARITH_CATALOG_CAP"


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj, sink: TextIO | None = None) -> None:
    print(json.dumps(obj), file=sink or sys.stdout)


def export_catalog(
    records: Sequence[Mapping],
    fmt: str,
    sink: TextIO,
    fields: Sequence[str] = CATALOG_FIELDS,
) -> None:
    """Write records as a JSON array or as CSV with a fixed column order.

    Both forms are byte-deterministic; CSV cells are always quoted so the
    digit strings survive their embedded commas and the big integers stay
    text.
    """
    if fmt == "json":
        sink.write(json.dumps([{f: r.get(f) for f in fields} for r in records]))
        sink.write("\n")
    elif fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n", quoting=csv.QUOTE_ALL)
        writer.writerow(fields)
        for r in records:
            writer.writerow(["" if r.get(f) is None else str(r.get(f)) for f in fields])
    else:
        raise ValueError(f"unknown format {fmt!r}")


def catalog_record(entry: CatalogEntry) -> dict:
    numeral, element = entry.numeral, entry.element
    ring = numeral.ring
    return {
        "digits": ",".join(str(v) for v in numeral.digit_values),
        "value": str(element.value),
        "k": str(element.k),
        "base": str(numeral.base.value),
        "a": ring.congruence.residue,
        "b": ring.congruence.modulus,
        "m": ring.add_arity,
        "n": ring.mul_arity,
        "lnu": numeral.add_count,
        "lmu": numeral.mul_count,
    }


# -- mixed-base scheme files -------------------------------------------------


def binary_scheme_to_obj(scheme: MixedBaseScheme) -> dict:
    return {"bases": [str(p) for p in scheme.bases]}


def binary_scheme_from_obj(obj: Mapping) -> MixedBaseScheme:
    return MixedBaseScheme(tuple(int(p) for p in obj["bases"]))


def polyadic_scheme_to_obj(scheme: PolyadicMixedScheme) -> dict:
    ring = scheme.ring
    return {
        "ring": {
            "a": ring.congruence.residue,
            "b": ring.congruence.modulus,
            "m": ring.add_arity,
            "n": ring.mul_arity,
        },
        "towers": [[str(p.value) for p in tower] for tower in scheme.towers],
    }


def polyadic_scheme_from_obj(obj: Mapping) -> PolyadicMixedScheme:
    spec = obj["ring"]
    ring = ring_with_arities(
        make_class(int(spec["a"]), int(spec["b"])), int(spec["m"]), int(spec["n"])
    )
    towers = tuple(
        tuple(ring.element_from_value(int(p)) for p in tower)
        for tower in obj["towers"]
    )
    return PolyadicMixedScheme(ring, towers)


# -- subcommand handlers -----------------------------------------------------


def _ring(args) -> PolyadicRing:
    return minimal_ring(make_class(args.a, args.b))


def _cmd_shape(args) -> int:
    congruence = make_class(args.a, args.b)
    try:
        shape = minimal_arity_shape(congruence)
    except PolyarithError:
        _emit({"a": args.a, "b": args.b, "solution": None})
        return 0
    _emit(
        {
            "a": args.a,
            "b": args.b,
            "m": shape.add_arity,
            "n": shape.mul_arity,
            "I": shape.add_invariant,
            "J": shape.mul_invariant,
        }
    )
    return 0


def _cmd_table(args) -> int:
    rows = []
    for row in arity_shape_table(args.b_max):
        record = {"a": row.congruence.residue, "b": row.congruence.modulus}
        if row.shape is None:
            record["solution"] = None
        else:
            record.update(
                m=row.shape.add_arity,
                n=row.shape.mul_arity,
                I=row.shape.add_invariant,
                J=row.shape.mul_invariant,
            )
        rows.append(record)
    if args.format == "json":
        _emit(rows)
    else:
        export_catalog(rows, "csv", sys.stdout, TABLE_FIELDS)
    return 0


def _element_result(ring: PolyadicRing, element) -> dict:
    return {
        "a": ring.congruence.residue,
        "b": ring.congruence.modulus,
        "m": ring.add_arity,
        "n": ring.mul_arity,
        "value": str(element.value),
        "k": str(element.k),
    }


def _cmd_add(args) -> int:
    ring = _ring(args)
    elements = [ring.element_from_value(v) for v in args.values]
    _emit(_element_result(ring, ring.add(elements)))
    return 0


def _cmd_mul(args) -> int:
    ring = _ring(args)
    elements = [ring.element_from_value(v) for v in args.values]
    _emit(_element_result(ring, ring.mul(elements)))
    return 0


def _cmd_power(args) -> int:
    ring = _ring(args)
    x = ring.element_from_value(args.value)
    _emit(_element_result(ring, ring.power(x, args.l)))
    return 0


def _cmd_quer(args) -> int:
    ring = _ring(args)
    x = ring.element_from_value(args.value)
    _emit(_element_result(ring, ring.querelement(x)))
    return 0


def _cmd_laws(args) -> int:
    ring = _ring(args)
    report = verify_ring_laws(ring, args.samples, args.k_range, args.seed)
    _emit(
        {
            "a": ring.congruence.residue,
            "b": ring.congruence.modulus,
            "m": ring.add_arity,
            "n": ring.mul_arity,
            "seed": report.seed,
            "samples": report.sample_count,
            "k_range": report.k_range,
            "all_passed": report.all_passed,
            "checks": [
                {
                    "name": c.name,
                    "samples": c.samples,
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                }
                for c in report.checks
            ],
        }
    )
    return 0


def _cmd_eval(args) -> int:
    ring = _ring(args)
    numeral = numeral_from_values(ring, args.base_k, args.digits)
    _emit(catalog_record(CatalogEntry(numeral, evaluate(numeral))))
    return 0


def _cmd_decode(args) -> int:
    ring = _ring(args)
    base = ring.element(args.base_k)
    value = ring.element_from_value(args.value)
    numeral = decode(ring, base, value)
    _emit(catalog_record(CatalogEntry(numeral, evaluate(numeral))))
    return 0


def _cmd_enumerate(args) -> int:
    ring = _ring(args)
    base = ring.element(args.base_k)
    cap = int(os.environ.get(CAP_ENV_VAR, DEFAULT_CATALOG_CAP))
    total = catalog_size(base, length_plan(ring.shape, args.lnu))
    wanted = total if args.limit is None else min(total, args.limit)
    if wanted > cap:
        raise CatalogTooLarge(
            f"catalog would emit {wanted} records, above the cap of {cap} "
            f"(override with {CAP_ENV_VAR})"
        )
    records = [
        catalog_record(e)
        for e in islice(iter_catalog(ring, base, args.lnu), wanted)
    ]
    export_catalog(records, args.format, sys.stdout, CATALOG_FIELDS)
    return 0


def _cmd_clock(args) -> int:
    scheme = MixedBaseScheme(tuple(args.bases))
    bases_text = ",".join(str(p) for p in scheme.bases)
    if args.decode is not None:
        digits = decode_binary_mixed(args.decode, scheme)
        _emit(
            {
                "bases": bases_text,
                "value": str(args.decode),
                "digits": ",".join(str(d) for d in digits),
            }
        )
    else:
        value = eval_binary_mixed(args.digits, scheme)
        _emit(
            {
                "bases": bases_text,
                "digits": ",".join(str(d) for d in args.digits),
                "value": str(value),
            }
        )
    return 0


def _cmd_pmix(args) -> int:
    with open(args.scheme, encoding="utf-8") as fh:
        scheme = polyadic_scheme_from_obj(json.load(fh))
    ring = scheme.ring
    digits = [ring.element_from_value(v) for v in args.digits]
    element = eval_polyadic_mixed(digits, scheme, args.lnu)
    _emit(
        {
            "a": ring.congruence.residue,
            "b": ring.congruence.modulus,
            "m": ring.add_arity,
            "n": ring.mul_arity,
            "lnu": args.lnu,
            "lmu": len(digits),
            "digits": ",".join(str(d.value) for d in digits),
            "value": str(element.value),
            "k": str(element.k),
        }
    )
    return 0


def _cmd_efficiency(args) -> int:
    if args.p is not None:
        _emit(
            {
                "symbols": args.symbols,
                "p": args.p,
                "efficiency": efficiency(args.symbols, args.p),
            }
        )
    else:
        _emit({"symbols": args.symbols, "best_p": best_integer_base(args.symbols)})
    return 0


# -- parser -------------------------------------------------------------------


def _add_class_flags(sub) -> None:
    sub.add_argument("--a", type=int, required=True, help="class residue")
    sub.add_argument("--b", type=int, required=True, help="class modulus")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyarith",
        description="Exact arithmetic over polyadic rings of congruence-class "
        "integers and the numeral systems built on them.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("shape", help="minimal arity pair and invariants of a class")
    _add_class_flags(p)
    p.set_defaults(handler=_cmd_shape)

    p = subs.add_parser("table", help="arity shapes for all classes up to a modulus")
    p.add_argument("--b-max", type=int, required=True, help="largest modulus")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_table)

    p = subs.add_parser("add", help="m-ary addition of class values")
    _add_class_flags(p)
    p.add_argument("--values", type=_int_list, required=True,
                   help="comma-separated class values (exactly m of them)")
    p.set_defaults(handler=_cmd_add)

    p = subs.add_parser("mul", help="n-ary multiplication of class values")
    _add_class_flags(p)
    p.add_argument("--values", type=_int_list, required=True,
                   help="comma-separated class values (exactly n of them)")
    p.set_defaults(handler=_cmd_mul)

    p = subs.add_parser("power", help="polyadic power of a class value")
    _add_class_flags(p)
    p.add_argument("--value", type=int, required=True, help="class value")
    p.add_argument("--l", type=int, required=True, help="number of composed multiplications")
    p.set_defaults(handler=_cmd_power)

    p = subs.add_parser("quer", help="additive querelement of a class value")
    _add_class_flags(p)
    p.add_argument("--value", type=int, required=True, help="class value")
    p.set_defaults(handler=_cmd_quer)

    p = subs.add_parser("laws", help="randomized ring-law verification report")
    _add_class_flags(p)
    p.add_argument("--samples", type=int, required=True, help="samples per law")
    p.add_argument("--seed", type=int, required=True, help="PRNG seed")
    p.add_argument("--k-range", type=int, default=1000,
                   help="indices are drawn from [-k-range, k-range]")
    p.set_defaults(handler=_cmd_laws)

    p = subs.add_parser("eval", help="evaluate a digit string over a base")
    _add_class_flags(p)
    p.add_argument("--base-k", type=int, required=True,
                   help="index k of the base element (value a + b*k)")
    p.add_argument("--digits", type=_int_list, required=True,
                   help="digit class values, most significant first")
    p.set_defaults(handler=_cmd_eval)

    p = subs.add_parser("decode", help="shortest digit string for a value")
    _add_class_flags(p)
    p.add_argument("--base-k", type=int, required=True,
                   help="index k of the base element (value a + b*k)")
    p.add_argument("--value", type=int, required=True, help="class value to decode")
    p.set_defaults(handler=_cmd_decode)

    p = subs.add_parser("enumerate", help="full numeral catalog for a base")
    _add_class_flags(p)
    p.add_argument("--base-k", type=int, required=True,
                   help="index k of the base element (value a + b*k)")
    p.add_argument("--lnu", type=int, required=True, help="number of composed additions")
    p.add_argument("--limit", type=int, default=None, help="emit at most this many records")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_enumerate)

    p = subs.add_parser("clock", help="mixed-base (clock-style) evaluation/decoding")
    p.add_argument("--bases", type=_int_list, required=True,
                   help="bases, least significant first (e.g. 60,60,24)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--digits", type=_int_list, default=None,
                       help="digits, most significant first")
    group.add_argument("--decode", type=int, default=None,
                       help="value to split into digits")
    p.set_defaults(handler=_cmd_clock)

    p = subs.add_parser("pmix", help="polyadic mixed-base evaluation from a scheme file")
    p.add_argument("--scheme", required=True, help="JSON scheme file")
    p.add_argument("--digits", type=_int_list, required=True,
                   help="digit class values, most significant first")
    p.add_argument("--lnu", type=int, required=True, help="number of composed additions")
    p.set_defaults(handler=_cmd_pmix)

    p = subs.add_parser("efficiency", help="numeral-system efficiency function")
    p.add_argument("--symbols", type=int, required=True, help="total symbol budget")
    p.add_argument("--p", type=int, default=None, help="evaluate one base instead of optimizing")
    p.set_defaults(handler=_cmd_efficiency)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PolyarithError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, sink=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"polyarith: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
