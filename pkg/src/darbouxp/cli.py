"""Command line front end.

Input is one JSON document, from ``--input PATH`` or standard input::

    {"p": 2, "vars": ["x", "y"], "field": ["y^3", "x"]}

Commands acting on a family take ``"fields": [[...], [...]]`` instead; when
only ``"field"`` is given they use its canonical family X, X^p, ...

Exit codes: 0 success, 1 bad input, 2 capacity or budget exceeded,
3 internal invariant violated.
"""
from __future__ import annotations

import argparse
import json
import sys

from .derivation import (
    DEFAULT_DEGREE_CAP,
    VectorField,
    canonical_family,
    dependency_locus,
    divergence,
    lie_bracket,
    pth_power,
)
from .errors import AlgebraError, BudgetExceeded, CapacityExceeded, TheoremViolation
from .invariants import (
    Outcome,
    analyze,
    first_integral_2d,
    fundamental_identity_check,
    involutivity,
    is_invariant,
)
from .oracle import SearchBound, enumerate_invariant_hypersurfaces, first_integral_kernel
from .poly import RingContext, squarefree_part
from .survey import records_to_csv, row_dict, rows_to_csv, run_survey

VERDICT_TEXT = {
    Outcome.FIRST_INTEGRAL: "first integral exists",
    Outcome.INVARIANT_HYPERSURFACE: "invariant hypersurface",
    Outcome.PROVABLY_NONE: "no invariant hypersurface",
    Outcome.CAPACITY_EXCEEDED: "capacity exceeded",
}


class InputError(Exception):
    pass


def load_document(path: str | None) -> dict:
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    if not isinstance(doc, dict) or "p" not in doc or "vars" not in doc:
        raise InputError('input must be a JSON object with "p" and "vars"')
    return doc


def _context(doc: dict) -> RingContext:
    try:
        return RingContext.create(int(doc["p"]), list(doc["vars"]))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _field(ctx: RingContext, comps) -> VectorField:
    if not isinstance(comps, list):
        raise InputError("a vector field is a list of component expressions")
    return VectorField(ctx, [str(c) for c in comps])


def single_field(doc: dict):
    ctx = _context(doc)
    if "field" not in doc:
        raise InputError('this command needs "field"')
    return ctx, _field(ctx, doc["field"])


def family(doc: dict, cap: int):
    ctx = _context(doc)
    if "fields" in doc:
        return ctx, [_field(ctx, f) for f in doc["fields"]]
    if "field" in doc:
        return ctx, canonical_family(_field(ctx, doc["field"]), cap=cap)
    raise InputError('input needs "field" or "fields"')


def emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands -----------------------------------------------------------------


def cmd_analyze(args, doc):
    _, X = single_field(doc)
    report = analyze(X, cap=args.cap)
    payload = report.to_dict()
    lines = [f"verdict: {VERDICT_TEXT[report.outcome]}"]
    for key in ("dep", "dep_squarefree", "divergence", "equation", "cofactor", "candidates_checked"):
        if payload[key] is not None:
            lines.append(f"{key}: {payload[key]}")
    if report.outcome is Outcome.FIRST_INTEGRAL:
        lines.append("note: a first integral outside k[x_1^p, ..., x_n^p] exists")
    emit(args, payload, "\n".join(lines))


def cmd_dep(args, doc):
    _, fams = family(doc, args.cap)
    dep = dependency_locus(fams)
    emit(args, {"dep": str(dep), "dep_squarefree": None if dep.is_zero() else str(squarefree_part(dep))}, str(dep))


def cmd_power(args, doc):
    _, X = single_field(doc)
    Y = X
    for _ in range(args.k):
        Y = pth_power(Y, cap=args.cap)
    comps = [str(c) for c in Y.components]
    emit(args, {"k": args.k, "components": comps}, "\n".join(comps))


def cmd_bracket(args, doc):
    _, fams = family(doc, args.cap)
    if len(fams) < 2:
        raise InputError("bracket needs two fields")
    B = lie_bracket(fams[0], fams[1])
    comps = [str(c) for c in B.components]
    emit(args, {"components": comps}, "\n".join(comps))


def cmd_divergence(args, doc):
    _, X = single_field(doc)
    d = divergence(X)
    emit(args, {"divergence": str(d)}, str(d))


def cmd_check_invariant(args, doc):
    ctx, X = single_field(doc)
    F = ctx.parse(args.polynomial)
    F0 = squarefree_part(F)
    verdict = is_invariant(X, F0)
    payload = {
        "equation": str(F0),
        "invariant": verdict.invariant,
        "cofactor": None if verdict.cofactor is None else str(verdict.cofactor),
    }
    text = f"{F0}: " + (f"invariant, cofactor {verdict.cofactor}" if verdict.invariant else "not invariant")
    emit(args, payload, text)


def cmd_first_integral(args, doc):
    ctx, X = single_field(doc)
    if ctx.nvars == 2 and divergence(X).is_zero() and X.degree() < ctx.p - 1:
        method, result = "potential", [first_integral_2d(X)]
    else:
        method, result = "kernel", first_integral_kernel(X, SearchBound(args.max_degree))
    payload = {"method": method, "max_degree": args.max_degree, "first_integrals": [str(f) for f in result]}
    text = "\n".join(str(f) for f in result) if result else f"none up to degree {args.max_degree}"
    emit(args, payload, text)


def cmd_involutive(args, doc):
    _, fams = family(doc, args.cap)
    rep = involutivity(fams)
    entries = [
        {
            "i": e.i + 1, "j": e.j + 1, "k": e.k + 1,
            "numerator": str(e.numerator), "divisible": e.divisible,
            "coefficient": None if e.coefficient is None else str(e.coefficient),
        }
        for e in rep.entries
    ]
    lines = [f"dep: {rep.dep}", f"polynomially involutive: {'yes' if rep.overall else 'no'}"]
    for e in entries:
        coef = e["coefficient"] if e["divisible"] else f"({e['numerator']}) / ({rep.dep})"
        lines.append(f"[X{e['i']}, X{e['j']}] coefficient of X{e['k']}: {coef}")
    emit(args, {"dep": str(rep.dep), "overall": rep.overall, "entries": entries}, "\n".join(lines))


def cmd_fundamental_check(args, doc):
    _, fams = family(doc, args.cap)
    ks = [args.k - 1] if args.k else range(len(fams))
    results = {k + 1: fundamental_identity_check(fams, k) for k in ks}
    text = "\n".join(f"k={k}: {'holds' if ok else 'FAILS'}" for k, ok in results.items())
    emit(args, {"results": {str(k): v for k, v in results.items()}, "all": all(results.values())}, text)
    if not all(results.values()):
        raise TheoremViolation("fundamental identity failed")


def cmd_oracle_search(args, doc):
    _, X = single_field(doc)
    found = enumerate_invariant_hypersurfaces(X, SearchBound(args.max_degree))
    text = "\n".join(str(f) for f in found) if found else f"none up to degree {args.max_degree}"
    emit(args, {"max_degree": args.max_degree, "invariant": [str(f) for f in found]}, text)


def cmd_survey(args, doc=None):
    rows, records = run_survey(
        args.p, n=args.n, degree=args.degree, samples=args.samples,
        seed=args.seed, exact_degree=args.exact_degree, cap=args.cap,
    )
    if args.per_sample:
        with open(args.per_sample, "w", newline="") as fh:
            fh.write(records_to_csv(records))
    if args.json:
        print(json.dumps([row_dict(r) for r in rows], sort_keys=True))
    else:
        sys.stdout.write(rows_to_csv(rows))


COMMANDS = {
    "analyze": cmd_analyze,
    "dep": cmd_dep,
    "power": cmd_power,
    "bracket": cmd_bracket,
    "divergence": cmd_divergence,
    "check-invariant": cmd_check_invariant,
    "first-integral": cmd_first_integral,
    "involutive": cmd_involutive,
    "fundamental-check": cmd_fundamental_check,
    "oracle-search": cmd_oracle_search,
    "survey": cmd_survey,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="JSON input document, '-' for stdin")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP, help="degree cap for intermediates")

    parser = argparse.ArgumentParser(
        prog="darbouxp",
        description="Invariant hypersurfaces and first integrals of polynomial vector fields over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="full verdict for one field")
    sub.add_parser("dep", parents=[common], help="dependency locus of a family")
    sp = sub.add_parser("power", parents=[common], help="X^(p^k)")
    sp.add_argument("--k", type=int, default=1)
    sub.add_parser("bracket", parents=[common], help="Lie bracket of the first two fields")
    sub.add_parser("divergence", parents=[common])
    sp = sub.add_parser("check-invariant", parents=[common], help="test a hypersurface F = 0")
    sp.add_argument("polynomial")
    sp = sub.add_parser("first-integral", parents=[common])
    sp.add_argument("--max-degree", type=int, default=4)
    sub.add_parser("involutive", parents=[common])
    sp = sub.add_parser("fundamental-check", parents=[common])
    sp.add_argument("--k", type=int, default=None, help="1-based field index (default: all)")
    sp = sub.add_parser("oracle-search", parents=[common], help="exhaustive invariant-hypersurface search")
    sp.add_argument("--max-degree", type=int, default=2)
    sp = sub.add_parser("survey", parents=[common], help="classify random fields")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--exact-degree", action="store_true")
    sp.add_argument("--per-sample", metavar="CSV", default=None, help="also write one row per sample")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command]
    try:
        if args.command == "survey":
            handler(args)
        else:
            handler(args, load_document(args.input))
    except (CapacityExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (InputError, AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
