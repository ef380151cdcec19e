"""Alternating differential forms with polynomial coefficients.

A q-form is stored as a dict from strictly increasing index tuples of
length q to nonzero polynomials. Contraction inserts the vector field in
the first slot, and iterated contraction of the volume form contracts the
first field of a family first; with that convention the result equals
:func:`darbouxp.derivation.dependency_locus`.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .derivation import VectorField, apply
from .errors import ContextMismatch, DegreeZero
from .poly import Polynomial, RingContext


def _sort_sign(idx: Sequence[int]):
    """Sorted tuple and permutation sign, or (None, 0) on a repeated index."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return tuple(idx), sign


class DiffForm:
    __slots__ = ("ctx", "degree", "coeffs")

    def __init__(self, ctx: RingContext, degree: int, coeffs: Mapping | None = None):
        if not 0 <= degree <= ctx.nvars:
            raise ValueError(f"form degree {degree} outside 0..{ctx.nvars}")
        clean: dict = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or any(not 0 <= i < ctx.nvars for i in idx):
                raise ValueError(f"bad index tuple {idx} for a {degree}-form")
            key, sign = _sort_sign(idx)
            if key is None:
                continue
            if not isinstance(c, Polynomial):
                c = ctx.const(int(c))
            elif c.ctx != ctx:
                raise ContextMismatch(f"{c.ctx} vs {ctx}")
            total = clean.get(key, ctx.zero()) + (c if sign > 0 else -c)
            if total.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = total
        self.ctx = ctx
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def function(cls, f: Polynomial) -> DiffForm:
        return cls(f.ctx, 0, {(): f})

    @classmethod
    def dx(cls, ctx: RingContext, i: int) -> DiffForm:
        return cls(ctx, 1, {(i,): ctx.one()})

    @classmethod
    def volume(cls, ctx: RingContext) -> DiffForm:
        return cls(ctx, ctx.nvars, {tuple(range(ctx.nvars)): ctx.one()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, idx: Sequence[int]) -> Polynomial:
        key, sign = _sort_sign(idx)
        if key is None:
            return self.ctx.zero()
        c = self.coeffs.get(key, self.ctx.zero())
        return c if sign > 0 else -c

    def _check(self, other: DiffForm):
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"cannot add a {self.degree}-form and a {other.degree}-form")

    def __add__(self, other: DiffForm) -> DiffForm:
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        merged = dict(self.coeffs)
        for k, c in other.coeffs.items():
            merged[k] = merged[k] + c if k in merged else c
        return DiffForm(self.ctx, self.degree, merged)

    def __neg__(self) -> DiffForm:
        return DiffForm(self.ctx, self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: DiffForm) -> DiffForm:
        return self + (-other)

    def scale(self, f) -> DiffForm:
        return DiffForm(self.ctx, self.degree, {k: f * c for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __xor__(self, other: DiffForm) -> DiffForm:
        return wedge(self, other)

    def __str__(self):
        if not self.coeffs:
            return "0"
        names = self.ctx.var_names
        parts = []
        for idx in sorted(self.coeffs):
            basis = "^".join(f"d{names[i]}" for i in idx)
            c = str(self.coeffs[idx])
            parts.append(f"({c})" + (f" {basis}" if basis else ""))
        return " + ".join(parts)

    __repr__ = __str__


def wedge(omega: DiffForm, eta: DiffForm) -> DiffForm:
    if omega.ctx != eta.ctx:
        raise ContextMismatch(f"{omega.ctx} vs {eta.ctx}")
    ctx = omega.ctx
    q = omega.degree + eta.degree
    if q > ctx.nvars:
        return DiffForm(ctx, 0)
    out: dict = {}
    for a, fa in omega.coeffs.items():
        for b, fb in eta.coeffs.items():
            key, sign = _sort_sign(a + b)
            if key is None:
                continue
            term = fa * fb
            if sign < 0:
                term = -term
            out[key] = out[key] + term if key in out else term
    return DiffForm(ctx, q, out)


def exterior_d(omega: DiffForm) -> DiffForm:
    ctx = omega.ctx
    if omega.degree == ctx.nvars:
        return DiffForm(ctx, 0)
    out: dict = {}
    for idx, f in omega.coeffs.items():
        for i in range(ctx.nvars):
            if i in idx:
                continue
            df = f.diff(i)
            if df.is_zero():
                continue
            key, sign = _sort_sign((i,) + idx)
            term = df if sign > 0 else -df
            out[key] = out[key] + term if key in out else term
    return DiffForm(ctx, omega.degree + 1, out)


def contract(X: VectorField, omega: DiffForm) -> DiffForm:
    """Interior product i_X omega (X in the first slot)."""
    if X.ctx != omega.ctx:
        raise ContextMismatch(f"{X.ctx} vs {omega.ctx}")
    if omega.degree == 0:
        raise DegreeZero("cannot contract a 0-form")
    out: dict = {}
    for idx, f in omega.coeffs.items():
        for pos, i in enumerate(idx):
            comp = X.components[i]
            if comp.is_zero():
                continue
            key = idx[:pos] + idx[pos + 1 :]
            term = comp * f
            if pos % 2:
                term = -term
            out[key] = out[key] + term if key in out else term
    return DiffForm(X.ctx, omega.degree - 1, out)


def lie_derivative(X: VectorField, omega: DiffForm) -> DiffForm:
    """L_X = i_X d + d i_X."""
    if X.ctx != omega.ctx:
        raise ContextMismatch(f"{X.ctx} vs {omega.ctx}")
    if omega.degree == 0:
        f = omega.coeffs.get((), X.ctx.zero())
        return DiffForm.function(apply(X, f))
    first = contract(X, exterior_d(omega)) if omega.degree < X.ctx.nvars else DiffForm(X.ctx, omega.degree)
    return first + exterior_d(contract(X, omega))


def iterated_contraction(fields: Sequence[VectorField]) -> Polynomial:
    """i_{X_1} ... i_{X_n} of the volume form, contracting X_1 first."""
    fields = list(fields)
    ctx = fields[0].ctx
    omega = DiffForm.volume(ctx)
    for X in fields:
        omega = contract(X, omega)
    return omega.coeffs.get((), ctx.zero())
