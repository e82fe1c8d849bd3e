"""Command-line interface.

Subcommands: series (coefficients of a threefold's generating function),
cobordism (decomposition over the three generators), discrepancy
(per-size degrees), verify (self-check suites).  Data goes to stdout,
diagnostics and the version banner to stderr.  Exit codes: 0 success,
1 property failure, 2 usage or schema error, 3 domain error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .chern import BUILTIN_THREEFOLDS, ChernNumbers, ThreefoldSpec, twist_exponent
from .cobordism import decompose, verify_exponent_identity
from .dt import DEFAULT_ORDER, NonIntegralSpecError, discrepancy_degrees, dt_series
from .verify import run_suite

__all__ = ["main", "parse_spec_document", "SpecDocumentError"]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class SpecDocumentError(ValueError):
    """A threefold spec document does not validate against the schema."""


# ---------------------------------------------------------------------------
# spec document parsing
# ---------------------------------------------------------------------------


def _expect_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecDocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_factor(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise SpecDocumentError(f"{where}: expected an integer or 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SpecDocumentError(f"{where}: cannot parse rational {value!r}") from None
    raise SpecDocumentError(f"{where}: expected an integer or 'p/q' string, got {value!r}")


def parse_spec_document(doc, where: str = "spec") -> ThreefoldSpec:
    """Validate a JSON spec document and build the ThreefoldSpec it denotes."""
    if not isinstance(doc, dict):
        raise SpecDocumentError(f"{where}: expected an object, got {type(doc).__name__}")
    if len(doc) != 1:
        keys = ", ".join(sorted(doc)) or "nothing"
        raise SpecDocumentError(f"{where}: expected exactly one of the spec keys, got {keys}")
    (key, value), = doc.items()
    if key == "builtin":
        if value not in BUILTIN_THREEFOLDS:
            known = ", ".join(sorted(BUILTIN_THREEFOLDS))
            raise SpecDocumentError(f"{where}.builtin: unknown name {value!r}; known names: {known}")
        return ThreefoldSpec.builtin(value)
    if key == "chern":
        if not isinstance(value, dict) or set(value) != {"c111", "c12", "c3"}:
            raise SpecDocumentError(f"{where}.chern: expected the keys c111, c12, c3")
        triple = ChernNumbers(*(_expect_int(value[k], f"{where}.chern.{k}") for k in ("c111", "c12", "c3")))
        return ThreefoldSpec.explicit(triple)
    if key == "hypersurface":
        if not isinstance(value, dict) or set(value) != {"degree"}:
            raise SpecDocumentError(f"{where}.hypersurface: expected the key degree")
        degree = _expect_int(value["degree"], f"{where}.hypersurface.degree")
        if degree < 1:
            raise SpecDocumentError(f"{where}.hypersurface.degree: must be positive, got {degree}")
        return ThreefoldSpec.hypersurface(degree)
    if key == "product":
        if not isinstance(value, list) or not value:
            raise SpecDocumentError(f"{where}.product: expected a non-empty list of dimensions")
        dims = [_expect_int(v, f"{where}.product[{i}]") for i, v in enumerate(value)]
        if any(d < 1 for d in dims) or sum(dims) != 3:
            raise SpecDocumentError(f"{where}.product: dimensions must be positive and sum to 3, got {dims}")
        return ThreefoldSpec.product(dims)
    if key == "disjoint_union":
        if not isinstance(value, list):
            raise SpecDocumentError(f"{where}.disjoint_union: expected a list of specs")
        parts = [parse_spec_document(part, f"{where}.disjoint_union[{i}]") for i, part in enumerate(value)]
        return ThreefoldSpec.disjoint_union(parts)
    if key == "scaled":
        if not isinstance(value, dict) or set(value) != {"factor", "of"}:
            raise SpecDocumentError(f"{where}.scaled: expected the keys factor and of")
        factor = _parse_factor(value["factor"], f"{where}.scaled.factor")
        base = parse_spec_document(value["of"], f"{where}.scaled.of")
        return ThreefoldSpec.scaled(factor, base)
    raise SpecDocumentError(
        f"{where}: unknown spec key {key!r}; "
        "expected builtin, chern, hypersurface, product, disjoint_union or scaled"
    )


def _json_number(value):
    """Exact rationals for JSON: plain ints stay ints, fractions become 'p/q'."""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return value


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _add_spec_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--builtin", choices=sorted(BUILTIN_THREEFOLDS), help="named catalog threefold")
    parser.add_argument("--c111", type=int, help="c1^3 of an explicit Chern triple")
    parser.add_argument("--c12", type=int, help="c1c2 of an explicit Chern triple")
    parser.add_argument("--c3", type=int, help="c3 of an explicit Chern triple")
    parser.add_argument("--hypersurface-degree", type=int, help="degree of a hypersurface in P4")
    parser.add_argument("--spec-file", help="path to a JSON spec document")


def _spec_from_args(args, parser: argparse.ArgumentParser) -> ThreefoldSpec:
    chern_flags = [v is not None for v in (args.c111, args.c12, args.c3)]
    if any(chern_flags) and not all(chern_flags):
        parser.error("give all three of --c111 --c12 --c3")
    sources = sum([args.builtin is not None, all(chern_flags),
                   args.hypersurface_degree is not None, args.spec_file is not None])
    if sources != 1:
        parser.error("give exactly one spec source: --builtin, --c111/--c12/--c3, "
                     "--hypersurface-degree or --spec-file")
    if args.builtin is not None:
        return ThreefoldSpec.builtin(args.builtin)
    if all(chern_flags):
        return ThreefoldSpec.explicit(ChernNumbers(args.c111, args.c12, args.c3))
    if args.hypersurface_degree is not None:
        if args.hypersurface_degree < 1:
            parser.error("--hypersurface-degree must be positive")
        return ThreefoldSpec.hypersurface(args.hypersurface_degree)
    with open(args.spec_file, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SpecDocumentError(f"spec: invalid JSON: {exc}") from None
    return parse_spec_document(doc)


def _warn_chern(c: ChernNumbers) -> None:
    for note in c.validation_warnings():
        print(f"warning: {note}", file=sys.stderr)


def _decomposition_document(dec) -> dict:
    m1, m2, m3 = dec.integer_multiples()
    return {
        "r1": _json_number(Fraction(dec.r1)),
        "r2": _json_number(Fraction(dec.r2)),
        "r3": _json_number(Fraction(dec.r3)),
        "m": dec.m,
        "m1": m1,
        "m2": m2,
        "m3": m3,
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_series(args, parser) -> int:
    if args.order < 0:
        parser.error("--order must be non-negative")
    spec = _spec_from_args(args, parser)
    chern = spec.resolve()
    _warn_chern(chern)
    if not chern.is_integral():
        print(f"error: {spec.label()} resolves to rational Chern numbers; "
              "the series needs an honest threefold", file=sys.stderr)
        return EXIT_DOMAIN
    result = dt_series(spec, args.order)
    dec = decompose(chern)
    if args.format == "json":
        doc = {
            "spec": spec.to_document(),
            "order": args.order,
            "exponent": result.exponent,
            "cobordism": _decomposition_document(dec),
            "coefficients": list(result.coefficients()),
        }
        print(json.dumps(doc))
    else:
        print(f"# exponent\t{result.exponent}")
        print(f"# cobordism\tr1={dec.r1}\tr2={dec.r2}\tr3={dec.r3}\tm={dec.m}")
        for k, value in enumerate(result.coefficients()):
            print(f"{k}\t{value}")
    return EXIT_OK


def _cmd_cobordism(args, parser) -> int:
    spec = _spec_from_args(args, parser)
    chern = spec.resolve()
    _warn_chern(chern)
    if not chern.is_integral():
        print(f"error: {spec.label()} resolves to rational Chern numbers; "
              "decompose an honest threefold", file=sys.stderr)
        return EXIT_DOMAIN
    report = verify_exponent_identity(chern)
    if args.format == "json":
        doc = {
            "spec": spec.to_document(),
            "decomposition": _decomposition_document(report.decomposition),
            "exponent_identity": {
                "lhs": _json_number(report.lhs),
                "rhs": _json_number(report.rhs),
                "ok": report.ok,
            },
        }
        print(json.dumps(doc))
    else:
        dec = report.decomposition
        print(f"r1\t{dec.r1}")
        print(f"r2\t{dec.r2}")
        print(f"r3\t{dec.r3}")
        print(f"m\t{dec.m}")
        print(f"identity\t{'OK' if report.ok else 'FAIL'}\t{report.lhs}\t{report.rhs}")
    return EXIT_OK


def _cmd_discrepancy(args, parser) -> int:
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    spec = _spec_from_args(args, parser)
    chern = spec.resolve()
    _warn_chern(chern)
    if not chern.is_integral():
        print(f"error: {spec.label()} resolves to rational Chern numbers; "
              "degrees need an honest threefold", file=sys.stderr)
        return EXIT_DOMAIN
    degrees = discrepancy_degrees(spec, args.max_n)
    if args.format == "json":
        doc = {
            "spec": spec.to_document(),
            "exponent": twist_exponent(chern),
            "t": {str(k): v for k, v in degrees.items()},
        }
        print(json.dumps(doc))
    else:
        for k in sorted(degrees):
            print(f"{k}\t{degrees[k]}")
    return EXIT_OK


def _cmd_verify(args, parser) -> int:
    checks = run_suite(args.suite, args.max_n)
    failed = False
    for check in checks:
        if check.ok:
            print(f"PASS\t{check.name}")
        else:
            failed = True
            detail = f": {check.detail}" if check.detail else ""
            print(f"FAIL\t{check.name}{detail}")
    return EXIT_FAILURE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtzero",
        description="Exact engine for dimension-zero Donaldson-Thomas series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser("series", help="print exponent, cobordism data and series coefficients")
    _add_spec_arguments(p_series)
    p_series.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order (default 20)")
    p_series.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p_cob = sub.add_parser("cobordism", help="decompose over the three generators")
    _add_spec_arguments(p_cob)
    p_cob.add_argument("--format", choices=("tsv", "json"), default="json")

    p_disc = sub.add_parser("discrepancy", help="per-size degrees extracted from the series")
    _add_spec_arguments(p_disc)
    p_disc.add_argument("--max-n", type=int, default=7, help="largest block size (default 7)")
    p_disc.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p_verify = sub.add_parser("verify", help="run a self-check suite")
    p_verify.add_argument("--suite", required=True,
                          choices=("macmahon", "lattice", "cobordism", "universality", "all"))
    p_verify.add_argument("--max-n", type=int, default=None,
                          help="size knob for the suite (per-suite default)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    print(f"dtzero {__version__}", file=sys.stderr)
    handlers = {
        "series": _cmd_series,
        "cobordism": _cmd_cobordism,
        "discrepancy": _cmd_discrepancy,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, parser)
    except SpecDocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonIntegralSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
