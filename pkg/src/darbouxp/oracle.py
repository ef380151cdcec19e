"""Brute-force verifiers, independent of the Dep/gcd pipeline.

``enumerate_invariant_hypersurfaces`` lists every monic squarefree F of
bounded degree with F | X(F). The default ``"linear"`` method uses that the
cofactor X(F)/F has degree below deg X: for each candidate cofactor c the
solutions of X(F) = c F form a linear space, computed by elimination and
then enumerated point by point. ``"naive"`` tries every monic polynomial.
Budgets count cofactors times matrix columns plus kernel points visited.

``first_integral_kernel`` is the null space of F -> X(F) on polynomials of
bounded degree, taken modulo the trivial constants k[x_1^p, ..., x_n^p]
(every such monomial is killed by any derivation, so dropping those columns
is exactly the quotient).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .derivation import VectorField, apply
from .errors import BudgetExceeded
from .linalg import nullspace_mod_p
from .poly import Polynomial, RingContext, divide_exact, is_squarefree, order_key

DEFAULT_BUDGET = 2**24


@dataclass(frozen=True)
class SearchBound:
    max_degree: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")


def monomials_up_to(n: int, D: int) -> list:
    """All exponent vectors of total degree <= D, ascending in term order."""
    out = [m for m in itertools.product(range(D + 1), repeat=n) if sum(m) <= D]
    out.sort(key=order_key)
    return out


def _linear_map_rows(ctx: RingContext, images: list) -> list:
    """Matrix (rows = output monomials) whose columns are the given images."""
    row_index: dict = {}
    for img in images:
        for m in img.terms:
            row_index.setdefault(m, len(row_index))
    rows = [[0] * len(images) for _ in row_index]
    for j, img in enumerate(images):
        for m, c in img.terms.items():
            rows[row_index[m]][j] = c
    return rows


def _combine(ctx: RingContext, monos: list, vec) -> Polynomial:
    return Polynomial._raw(ctx, {m: c for m, c in zip(monos, vec) if c})


def _check_budget(count: int, bound: SearchBound, what: str):
    if count > bound.budget:
        raise BudgetExceeded(f"{what}: {count} candidates exceed budget {bound.budget}")


def enumerate_invariant_hypersurfaces(
    X: VectorField, bound: SearchBound, method: str = "linear"
) -> list:
    ctx = X.ctx
    if method == "naive":
        found = _enumerate_naive(X, bound)
    elif method == "linear":
        found = _enumerate_linear(X, bound)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(found, key=lambda f: (f.total_degree(), [(order_key(m), c) for m, c in f.sorted_terms()]))


def _enumerate_naive(X: VectorField, bound: SearchBound) -> set:
    ctx = X.ctx
    p = ctx.p
    monos = monomials_up_to(ctx.nvars, bound.max_degree)
    total = sum(p**i for i in range(1, len(monos)))
    _check_budget(total, bound, "naive enumeration")
    found = set()
    for lead in range(1, len(monos)):
        for lower in itertools.product(range(p), repeat=lead):
            F = _combine(ctx, monos[: lead + 1], lower + (1,))
            if divide_exact(apply(X, F), F) is None:
                continue
            if is_squarefree(F):
                found.add(F)
    return found


def _enumerate_linear(X: VectorField, bound: SearchBound) -> set:
    ctx = X.ctx
    p = ctx.p
    n = ctx.nvars
    monos = monomials_up_to(n, bound.max_degree)
    basis_polys = [ctx.monomial(m) for m in monos]
    x_images = [apply(X, f) for f in basis_polys]
    dx = X.degree()
    cof_monos = monomials_up_to(n, dx - 1) if dx >= 1 else []
    n_cofactors = p ** len(cof_monos)
    # one elimination over len(monos) columns per cofactor
    spent = n_cofactors * len(monos)
    _check_budget(spent, bound, "cofactor enumeration")
    found = set()
    for cvec in itertools.product(range(p), repeat=len(cof_monos)):
        c = _combine(ctx, cof_monos, cvec)
        images = [xi - c * f for xi, f in zip(x_images, basis_polys)] if cvec and any(cvec) else x_images
        rows = _linear_map_rows(ctx, images)
        kernel = nullspace_mod_p(rows, len(monos), p) if rows else [
            [int(i == j) for i in range(len(monos))] for j in range(len(monos))
        ]
        if not kernel:
            continue
        spent += p ** len(kernel)
        _check_budget(spent, bound, "kernel enumeration")
        for coeffs in itertools.product(range(p), repeat=len(kernel)):
            vec = [0] * len(monos)
            for t, b in zip(coeffs, kernel):
                if t:
                    for i, v in enumerate(b):
                        if v:
                            vec[i] = (vec[i] + t * v) % p
            F = _combine(ctx, monos, vec)
            if F.is_constant() or F.leading_coefficient() != 1:
                continue
            if is_squarefree(F):
                found.add(F)
    return found


def is_trivial_constant(m, p: int) -> bool:
    return all(e % p == 0 for e in m)


def first_integral_kernel(X: VectorField, bound: SearchBound) -> list:
    """Basis (monic, ascending by leading term) of the non-trivial first
    integrals of degree <= max_degree, modulo k[x_1^p, ..., x_n^p]."""
    ctx = X.ctx
    p = ctx.p
    monos = [m for m in monomials_up_to(ctx.nvars, bound.max_degree) if not is_trivial_constant(m, p)]
    _check_budget(len(monos) ** 2, bound, "kernel matrix")
    images = [apply(X, ctx.monomial(m)) for m in monos]
    rows = _linear_map_rows(ctx, images)
    if rows:
        kernel = nullspace_mod_p(rows, len(monos), p)
    else:
        kernel = [[int(i == j) for i in range(len(monos))] for j in range(len(monos))]
    return [_combine(ctx, monos, v).monic() for v in kernel]
