"""Random sampling of vector fields and verdict statistics."""
from __future__ import annotations

import csv
import io
import random
from dataclasses import astuple, dataclass, fields

from .derivation import DEFAULT_DEGREE_CAP, VectorField
from .errors import CapacityExceeded
from .invariants import Outcome, analyze
from .oracle import monomials_up_to
from .poly import Polynomial, RingContext

DEFAULT_VARS = ("x", "y", "z", "u", "v", "w")

CSV_HEADER = ["seed", "p", "n", "degree", "samples", "dep_zero", "invariant_found", "provably_none", "div_nonzero"]
SAMPLE_HEADER = ["sample", "verdict", "div_nonzero", "dep", "equation", "field"]


@dataclass
class SurveyRow:
    seed: int
    p: int
    n: int
    degree: int
    samples: int
    dep_zero: int = 0
    invariant_found: int = 0
    provably_none: int = 0
    div_nonzero: int = 0


def random_polynomial(ctx: RingContext, degree: int, rng: random.Random, exact_degree: bool = False) -> Polynomial:
    monos = monomials_up_to(ctx.nvars, degree)
    terms = {m: rng.randrange(ctx.p) for m in monos}
    if exact_degree and degree > 0:
        top = [m for m in monos if sum(m) == degree]
        m = top[rng.randrange(len(top))]
        terms[m] = rng.randrange(1, ctx.p)
    return Polynomial(ctx, terms)


def random_vector_field(ctx: RingContext, degree: int, rng: random.Random, exact_degree: bool = False) -> VectorField:
    """Independent uniform coefficients on every monomial of degree <= ``degree``.

    With ``exact_degree`` one top-degree coefficient of the first component
    is forced nonzero.
    """
    comps = [random_polynomial(ctx, degree, rng) for _ in range(ctx.nvars)]
    if exact_degree and degree > 0:
        comps[0] = random_polynomial(ctx, degree, rng, exact_degree=True)
    return VectorField(ctx, comps)


def run_survey(
    p: int,
    n: int = 2,
    degree: int = 2,
    samples: int = 100,
    seed: int = 0,
    exact_degree: bool = False,
    cap: int = DEFAULT_DEGREE_CAP,
):
    """Classify ``samples`` random fields; returns (rows, per-sample records).

    A sample whose canonical family exceeds ``cap`` is recorded with verdict
    ``capacity_exceeded`` and counted in no summary column.
    """
    if samples == 0:
        return [], []
    ctx = RingContext.create(p, DEFAULT_VARS[:n])
    rng = random.Random(seed)
    row = SurveyRow(seed, p, n, degree, samples)
    records = []
    for k in range(samples):
        X = random_vector_field(ctx, degree, rng, exact_degree)
        try:
            report = analyze(X, cap=cap)
        except CapacityExceeded:
            records.append([k, Outcome.CAPACITY_EXCEEDED.value, "", "", "", str(X)])
            continue
        div_nonzero = not report.div.is_zero()
        row.div_nonzero += div_nonzero
        if report.outcome is Outcome.FIRST_INTEGRAL:
            row.dep_zero += 1
        elif report.outcome is Outcome.INVARIANT_HYPERSURFACE:
            row.invariant_found += 1
        else:
            row.provably_none += 1
        records.append([
            k, report.outcome.value, int(div_nonzero), str(report.dep),
            "" if report.equation is None else str(report.equation), str(X),
        ])
    return [row], records


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(astuple(r))
    return buf.getvalue()


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SAMPLE_HEADER)
    w.writerows(records)
    return buf.getvalue()


def row_dict(row: SurveyRow) -> dict:
    return {f.name: getattr(row, f.name) for f in fields(row)}
