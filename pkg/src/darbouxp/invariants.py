"""Invariant hypersurfaces, first integrals and involutivity.

Rational functions never appear: every claim "N / Dep is a polynomial" is
decided by exact division, and the invariant factors of a polynomial are
isolated with one gcd instead of a factorization. For a squarefree F the
irreducible factor F_i divides X(F) exactly when it divides X(F_i), so
``gcd(F, X(F))`` is the product of the invariant factors of F.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .derivation import (
    DEFAULT_DEGREE_CAP,
    VectorField,
    apply,
    canonical_family,
    dependency_locus,
    divergence,
    lie_bracket,
)
from .errors import (
    ConstantInput,
    DependentFamily,
    NonIntegrableExponent,
    PreconditionViolated,
    TheoremViolation,
    ZeroInput,
)
from .poly import Polynomial, divide_exact, gcd, integrate_term, squarefree_part


@dataclass(frozen=True)
class InvarianceVerdict:
    invariant: bool
    cofactor: Optional[Polynomial] = None

    def __bool__(self):
        return self.invariant


def is_invariant(X: VectorField, F: Polynomial) -> InvarianceVerdict:
    """Decide whether F divides X(F); the cofactor is X(F)/F.

    F is used as given. Pass ``squarefree_part(F)`` for the hypersurface
    notion, which is defined on reduced equations.
    """
    if F.is_constant():
        raise ConstantInput("invariance of a constant is meaningless")
    XF = apply(X, F)
    if XF.is_zero():
        return InvarianceVerdict(True, F.ctx.zero())
    q = divide_exact(XF, F)
    if q is None:
        return InvarianceVerdict(False)
    return InvarianceVerdict(True, q)


def invariant_part(X: VectorField, F: Polynomial) -> Polynomial:
    """Product of the irreducible factors of F that are X-invariant (monic)."""
    if F.is_zero():
        raise ZeroInput("invariant part of 0")
    F0 = squarefree_part(F)
    if F0.is_constant():
        return F0
    return gcd(F0, apply(X, F0))


class Outcome(str, enum.Enum):
    FIRST_INTEGRAL = "first_integral_exists"
    INVARIANT_HYPERSURFACE = "invariant_hypersurface"
    PROVABLY_NONE = "provably_none"
    CAPACITY_EXCEEDED = "capacity_exceeded"


@dataclass
class AnalysisReport:
    outcome: Outcome
    dep: Optional[Polynomial] = None
    dep_squarefree: Optional[Polynomial] = None
    div: Optional[Polynomial] = None
    equation: Optional[Polynomial] = None
    cofactor: Optional[Polynomial] = None
    candidates_checked: Optional[Polynomial] = None
    family: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        def text(f):
            return None if f is None else str(f)

        return {
            "verdict": self.outcome.value,
            "dep": text(self.dep),
            "dep_squarefree": text(self.dep_squarefree),
            "divergence": text(self.div),
            "equation": text(self.equation),
            "cofactor": text(self.cofactor),
            "candidates_checked": text(self.candidates_checked),
        }


def analyze(X: VectorField, cap: int = DEFAULT_DEGREE_CAP) -> AnalysisReport:
    """Decide whether X has a first integral or an invariant hypersurface.

    Raises CapacityExceeded when the canonical family outgrows ``cap``.
    """
    family = canonical_family(X, cap=cap)
    dep = dependency_locus(family)
    div = divergence(X)
    ctx = X.ctx
    if dep.is_zero():
        return AnalysisReport(Outcome.FIRST_INTEGRAL, dep=dep, div=div, family=family)
    # the family commutes, so X(dep) = div(X) * dep
    if apply(X, dep) != div * dep:
        raise TheoremViolation(f"X(Dep) != div(X)*Dep for Dep = {dep}")
    dep_sf = squarefree_part(dep)
    if dep.is_constant():
        return AnalysisReport(
            Outcome.PROVABLY_NONE, dep=dep, dep_squarefree=dep_sf, div=div,
            candidates_checked=ctx.one(), family=family,
        )
    G = invariant_part(X, dep)
    if not G.is_constant():
        verdict = is_invariant(X, G)
        if not verdict.invariant:
            raise TheoremViolation(f"gcd-extracted factor {G} is not invariant")
        return AnalysisReport(
            Outcome.INVARIANT_HYPERSURFACE, dep=dep, dep_squarefree=dep_sf, div=div,
            equation=G, cofactor=verdict.cofactor, family=family,
        )
    if not div.is_zero():
        raise TheoremViolation(f"div(X) = {div} is nonzero but Dep = {dep} has no invariant factor")
    return AnalysisReport(
        Outcome.PROVABLY_NONE, dep=dep, dep_squarefree=dep_sf, div=div,
        candidates_checked=dep_sf, family=family,
    )


def first_integral_2d(X: VectorField) -> Polynomial:
    """Potential f of the closed form i_X(dx ^ dy) for a divergence-free planar X.

    Requires deg X < p - 1 so that every antiderivative exists. The result
    has zero constant term and satisfies X(f) = 0.
    """
    ctx = X.ctx
    p = ctx.p
    if ctx.nvars != 2:
        raise PreconditionViolated("first_integral_2d needs exactly two variables")
    if not divergence(X).is_zero():
        raise PreconditionViolated("vector field has nonzero divergence")
    if X.degree() >= p - 1:
        raise PreconditionViolated(f"degree {X.degree()} is not below p - 1 = {p - 1}")
    P, Q = X.components
    # df/dy = P, df/dx = -Q
    try:
        f = integrate_term(P, 1)
        rest = -Q - f.diff(0)
        if rest.degree_in(1) > 0:
            raise TheoremViolation("i_X(dx ^ dy) is not closed")
        f = f + integrate_term(rest, 0)
    except NonIntegrableExponent as exc:
        raise TheoremViolation(f"integration failed below the degree bound: {exc}") from exc
    f = f - f.constant_value()
    if f.is_zero() or not apply(X, f).is_zero():
        raise TheoremViolation(f"computed potential {f} is not a first integral")
    return f


# ---------------------------------------------------------------------------
# involutivity


@dataclass(frozen=True)
class BracketCoefficient:
    i: int
    j: int
    k: int
    numerator: Polynomial
    coefficient: Optional[Polynomial]

    @property
    def divisible(self) -> bool:
        return self.coefficient is not None


@dataclass
class InvolutivityReport:
    dep: Polynomial
    entries: list

    @property
    def overall(self) -> bool:
        return all(e.divisible for e in self.entries)

    def entry(self, i: int, j: int, k: int) -> BracketCoefficient:
        for e in self.entries:
            if (e.i, e.j, e.k) == (i, j, k):
                return e
        raise KeyError((i, j, k))


def cramer_numerator(fields: Sequence[VectorField], bracket: VectorField, k: int) -> Polynomial:
    """Dep with row k replaced by ``bracket``: the numerator of the X_k-coefficient."""
    rows = list(fields)
    rows[k] = bracket
    return dependency_locus(rows)


def involutivity(fields: Sequence[VectorField]) -> InvolutivityReport:
    """Write every [X_i, X_j] (i < j) in the basis X_1..X_n over the fraction
    field and record which coefficients are polynomials."""
    fields = list(fields)
    dep = dependency_locus(fields)
    if dep.is_zero():
        raise DependentFamily("dependency locus vanishes identically")
    entries = []
    n = len(fields)
    for i in range(n):
        for j in range(i + 1, n):
            br = lie_bracket(fields[i], fields[j])
            for k in range(n):
                N = cramer_numerator(fields, br, k)
                entries.append(BracketCoefficient(i, j, k, N, divide_exact(N, dep)))
    return InvolutivityReport(dep, entries)


def fundamental_identity_check(fields: Sequence[VectorField], k: int) -> bool:
    """Check X_k(Dep) == div(X_k) Dep + sum_{j != k} N(k, j, j) exactly,
    where N(k, j, j) is the Cramer numerator of the X_j-coefficient of [X_k, X_j]."""
    fields = list(fields)
    dep = dependency_locus(fields)
    if dep.is_zero():
        raise DependentFamily("dependency locus vanishes identically")
    Xk = fields[k]
    rhs = divergence(Xk) * dep
    for j in range(len(fields)):
        if j == k:
            continue
        rhs = rhs + cramer_numerator(fields, lie_bracket(Xk, fields[j]), j)
    return apply(Xk, dep) == rhs
