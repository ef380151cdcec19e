"""Polynomial vector fields viewed as derivations of F_p[x_1, ..., x_n].

The dependency locus of n fields is the determinant of the matrix whose
row i holds the components of the i-th field. This matches iterated
contraction of the volume form with the first field contracted first
(see :func:`darbouxp.forms.iterated_contraction`).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import CapacityExceeded, ContextMismatch, WrongArity
from .poly import Polynomial, RingContext

DEFAULT_DEGREE_CAP = 512


class VectorField:
    """Derivation sum_i X(x_i) d/dx_i, stored as its n component polynomials."""

    __slots__ = ("ctx", "components")

    def __init__(self, ctx: RingContext, components: Sequence):
        comps = []
        for c in components:
            if isinstance(c, Polynomial):
                if c.ctx != ctx:
                    raise ContextMismatch(f"{c.ctx} vs {ctx}")
            elif isinstance(c, str):
                c = ctx.parse(c)
            else:
                c = ctx.const(int(c))
            comps.append(c)
        if len(comps) != ctx.nvars:
            raise WrongArity(f"expected {ctx.nvars} components, got {len(comps)}")
        self.ctx = ctx
        self.components = tuple(comps)

    @classmethod
    def zero(cls, ctx: RingContext) -> VectorField:
        return cls(ctx, [ctx.zero()] * ctx.nvars)

    @classmethod
    def coordinate(cls, ctx: RingContext, i: int) -> VectorField:
        """The field d/dx_i."""
        return cls(ctx, [ctx.one() if j == i else ctx.zero() for j in range(ctx.nvars)])

    def degree(self) -> int:
        return max(c.total_degree() for c in self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply(self, f)

    def __add__(self, other: VectorField) -> VectorField:
        _same(self, other)
        return VectorField(self.ctx, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: VectorField) -> VectorField:
        _same(self, other)
        return VectorField(self.ctx, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> VectorField:
        return VectorField(self.ctx, [-a for a in self.components])

    def scale(self, f) -> VectorField:
        """Multiply every component by a polynomial or scalar."""
        return VectorField(self.ctx, [f * a for a in self.components])

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.ctx == other.ctx and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.components) + "]"

    def __repr__(self):
        return f"VectorField({self} over {self.ctx})"


def _same(X: VectorField, Y: VectorField):
    if X.ctx != Y.ctx:
        raise ContextMismatch(f"{X.ctx} vs {Y.ctx}")


def apply(X: VectorField, f: Polynomial) -> Polynomial:
    if f.ctx != X.ctx:
        raise ContextMismatch(f"{f.ctx} vs {X.ctx}")
    out = X.ctx.zero()
    for i, comp in enumerate(X.components):
        if comp.is_zero():
            continue
        d = f.diff(i)
        if not d.is_zero():
            out = out + comp * d
    return out


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """[X, Y] = X o Y - Y o X."""
    _same(X, Y)
    return VectorField(
        X.ctx,
        [apply(X, b) - apply(Y, a) for a, b in zip(X.components, Y.components)],
    )


def divergence(X: VectorField) -> Polynomial:
    out = X.ctx.zero()
    for i, comp in enumerate(X.components):
        out = out + comp.diff(i)
    return out


def _check_cap(f: Polynomial, cap: int):
    if f.total_degree() > cap:
        raise CapacityExceeded(f"intermediate degree {f.total_degree()} exceeds cap {cap}")


def pth_power(X: VectorField, cap: int = DEFAULT_DEGREE_CAP) -> VectorField:
    """The derivation X^p, whose i-th component is X applied p times to x_i."""
    p = X.ctx.p
    d = X.degree()
    if d >= 1 and p * (d - 1) + 1 > cap:
        raise CapacityExceeded(f"X^{p} may reach degree {p * (d - 1) + 1} > cap {cap}")
    comps = []
    for i in range(X.ctx.nvars):
        f = X.components[i]  # X(x_i)
        for _ in range(p - 1):
            f = apply(X, f)
            _check_cap(f, cap)
            if f.is_zero():
                break
        comps.append(f)
    return VectorField(X.ctx, comps)


def canonical_family(X: VectorField, cap: int = DEFAULT_DEGREE_CAP) -> list:
    """[X, X^p, X^(p^2), ..., X^(p^(n-1))]."""
    family = [X]
    for _ in range(X.ctx.nvars - 1):
        family.append(pth_power(family[-1], cap=cap))
    return family


def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along rows, memoized on the set of remaining columns."""
    n = len(rows)
    if n == 0:
        raise WrongArity("empty matrix")
    ctx = rows[0][0].ctx

    @lru_cache(maxsize=None)
    def minor(r: int, cols: tuple) -> Polynomial:
        if r == n:
            return ctx.one()
        total = ctx.zero()
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1 :])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        return total

    return minor(0, tuple(range(n)))


def dependency_locus(fields: Sequence[VectorField]) -> Polynomial:
    fields = list(fields)
    if not fields:
        raise WrongArity("empty family")
    ctx = fields[0].ctx
    if len(fields) != ctx.nvars:
        raise WrongArity(f"expected {ctx.nvars} fields, got {len(fields)}")
    for F in fields:
        if F.ctx != ctx:
            raise ContextMismatch(f"{F.ctx} vs {ctx}")
    return determinant([F.components for F in fields])
