"""Sparse multivariate polynomials over F_p.

A polynomial is a dict mapping exponent tuples to nonzero coefficients in
``range(p)``. Terms are ordered graded-lexicographically: first by total
degree, then lexicographically with the *last* declared variable most
significant, so ``(y^3 + x*y)^2`` prints as ``y^6 + x^2*y^2``. Inside a
monomial variables appear in declaration order.

The gcd is the classical recursive one, run on a dense recursive copy of
the inputs (see ``_dense``): view both as univariate in their highest-index
variable, split off contents recursively and run a primitive
pseudo-remainder sequence. Plain Euclid is used once a single variable
remains.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import _dense
from .errors import (
    ContextMismatch,
    DivisionByZero,
    IndexOutOfRange,
    NonIntegrableExponent,
    ZeroInput,
)
from .scalar import FieldElement, PrimeModulus, make_modulus

MAX_VARS = 6

Monomial = tuple  # tuple[int, ...] of length nvars


def order_key(m: Monomial):
    return (sum(m), m[::-1])


@dataclass(frozen=True)
class RingContext:
    modulus: PrimeModulus
    var_names: tuple

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not 1 <= len(names) <= MAX_VARS:
            raise ValueError(f"number of variables must be in 1..{MAX_VARS}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not (isinstance(name, str) and name.isidentifier()):
                raise ValueError(f"bad variable name {name!r}")

    @classmethod
    def create(cls, p: int, var_names: Sequence[str] | str) -> RingContext:
        if isinstance(var_names, str):
            var_names = var_names.replace(",", " ").split()
        return cls(make_modulus(p), tuple(var_names))

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: int(c)})

    def var(self, which) -> Polynomial:
        i = self.var_names.index(which) if isinstance(which, str) else which
        if not 0 <= i < self.nvars:
            raise IndexOutOfRange(f"variable index {i} out of range")
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial._raw(self, {tuple(e): 1})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> Polynomial:
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return f"F_{self.p}[{', '.join(self.var_names)}]"


class Polynomial:
    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Mapping[Monomial, int] | None = None):
        p = ctx.p
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ctx.nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {ctx}")
            c = int(c) % p
            if c:
                clean[m] = (clean.get(m, 0) + c) % p
                if not clean[m]:
                    del clean[m]
        self.ctx = ctx
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx: RingContext, terms: dict) -> Polynomial:
        # terms must already be reduced with no zero coefficients
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        obj._hash = None
        return obj

    # -- coercion -----------------------------------------------------

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, FieldElement):
            if other.modulus.p != self.ctx.p:
                raise ContextMismatch(f"F_{other.modulus.p} scalar in {self.ctx}")
            return self.ctx.const(other.value)
        if isinstance(other, int):
            return self.ctx.const(other)
        return NotImplemented

    # -- basic queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> int:
        return self.terms.get((0,) * self.ctx.nvars, 0)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def variables(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        return max(self.terms, key=order_key)

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()] if self.terms else 0

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scalar_mul(self.ctx.modulus.inv(lc))

    def coeff(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ctx.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return Polynomial._raw(self.ctx, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scalar_mul(self, c) -> Polynomial:
        p = self.ctx.p
        c = int(c) % p
        if c == 0:
            return self.ctx.zero()
        if c == 1:
            return self
        return Polynomial._raw(self.ctx, {m: (v * c) % p for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            if isinstance(other, FieldElement) and other.modulus.p != self.ctx.p:
                raise ContextMismatch(f"F_{other.modulus.p} scalar in {self.ctx}")
            return self.scalar_mul(int(other))
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ctx.zero()
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        get = acc.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                acc[m] = get(m, 0) + ca * cb
        p = self.ctx.p
        out = {}
        for m, c in acc.items():
            c %= p
            if c:
                out[m] = c
        return Polynomial._raw(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, FieldElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- calculus ---------------------------------------------------------

    def diff(self, i: int) -> Polynomial:
        if not 0 <= i < self.ctx.nvars:
            raise IndexOutOfRange(f"variable index {i} out of range")
        p = self.ctx.p
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e % p == 0:
                continue
            nm = m[:i] + (e - 1,) + m[i + 1 :]
            out[nm] = (c * e) % p
        return Polynomial._raw(self.ctx, out)

    def evaluate(self, point: Sequence) -> FieldElement:
        if len(point) != self.ctx.nvars:
            raise ContextMismatch(f"expected {self.ctx.nvars} coordinates, got {len(point)}")
        p = self.ctx.p
        vals = []
        for v in point:
            if isinstance(v, FieldElement) and v.modulus.p != p:
                raise ContextMismatch(f"F_{v.modulus.p} point in {self.ctx}")
            vals.append(int(v) % p)
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = t * pow(v, e, p) % p
            total += t
        return self.ctx.modulus(total)

    # -- printing -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ctx.var_names
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r} over {self.ctx})"


# ---------------------------------------------------------------------------
# free-function surface


def _check_same(f: Polynomial, g: Polynomial):
    if f.ctx != g.ctx:
        raise ContextMismatch(f"{f.ctx} vs {g.ctx}")


def poly_arith(f: Polynomial, g, op: str) -> Polynomial:
    if op == "scalar_mul":
        return f.scalar_mul(int(g))
    _check_same(f, g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    return f.diff(i)


def evaluate(f: Polynomial, point: Sequence) -> FieldElement:
    return f.evaluate(point)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Return ``q`` with ``f == q*g``, or None when ``g`` does not divide ``f``.

    Division by a single polynomial: when ``g | f`` every intermediate
    remainder is still a multiple of ``g``, so its leading term must be
    divisible by ``lt(g)``; the first failure proves non-divisibility.
    """
    _check_same(f, g)
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if f.is_zero():
        return f.ctx.zero()
    ctx = f.ctx
    p = ctx.p
    lm_g = g.leading_monomial()
    inv_lc = ctx.modulus.inv(g.terms[lm_g])
    if len(g.terms) == 1:
        out = {}
        for m, c in f.terms.items():
            q = tuple(a - b for a, b in zip(m, lm_g))
            if min(q) < 0:
                return None
            out[q] = c * inv_lc % p
        return Polynomial._raw(ctx, out)
    if f.total_degree() < g.total_degree():
        return None
    rem = dict(f.terms)
    heap = [(_neg_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot = {}
    g_rest = [(m, c) for m, c in g.terms.items() if m != lm_g]
    while rem:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        q = tuple(a - b for a, b in zip(m, lm_g))
        if min(q) < 0:
            return None
        qc = c * inv_lc % p
        quot[q] = qc
        del rem[m]
        for gm, gc in g_rest:
            t = tuple(a + b for a, b in zip(q, gm))
            old = rem.get(t)
            if old is None:
                rem[t] = (-qc * gc) % p
                heapq.heappush(heap, (_neg_key(t), t))
            else:
                v = (old - qc * gc) % p
                if v:
                    rem[t] = v
                else:
                    del rem[t]
    return Polynomial._raw(ctx, quot)


def _neg_key(m):
    return (-sum(m), tuple(-e for e in reversed(m)))


def divides(g: Polynomial, f: Polynomial) -> bool:
    return divide_exact(f, g) is not None


# ---------------------------------------------------------------------------
# gcd


def _gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    ctx = f.ctx
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return ctx.one()
    order = sorted(f.variables() | g.variables())
    p = ctx.p
    a = _dense.from_sparse(f.terms, order, p)
    b = _dense.from_sparse(g.terms, order, p)
    r = _dense.gcd(a, b, len(order), p)
    return Polynomial._raw(ctx, _dense.to_sparse(r, order, ctx.nvars)).monic()


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor, normalized to leading coefficient 1.

    ``gcd(f, 0)`` is the normalization of ``f``; ``gcd(0, 0)`` is 0.
    """
    _check_same(f, g)
    return _gcd(f, g)


def gcd_many(polys: Iterable[Polynomial]) -> Polynomial:
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty family")
    g = polys[0].ctx.zero()
    for f in polys:
        g = gcd(g, f)
        if g.is_constant() and not g.is_zero():
            break
    return g


# ---------------------------------------------------------------------------
# characteristic-p structure


def pth_root(f: Polynomial) -> Polynomial | None:
    """The polynomial g with g^p == f, or None if f is not a p-th power.

    Frobenius fixes F_p, so only exponents change.
    """
    p = f.ctx.p
    out = {}
    for m, c in f.terms.items():
        if any(e % p for e in m):
            return None
        out[tuple(e // p for e in m)] = c
    return Polynomial._raw(f.ctx, out)


def is_squarefree(f: Polynomial) -> bool:
    if f.is_zero():
        return False
    if f.is_constant():
        return True
    g = gcd_many([f] + [f.diff(i) for i in range(f.ctx.nvars)])
    return g.is_constant()


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of f, made monic.

    ``h = f / gcd(f, df)`` collects exactly the factors whose multiplicity is
    prime to p; the others survive in the gcd, handled recursively (a
    polynomial with vanishing differential is a p-th power).
    """
    if f.is_zero():
        raise ZeroInput("squarefree part of 0")
    ctx = f.ctx
    if f.is_constant():
        return ctx.one()
    partials = [f.diff(i) for i in range(ctx.nvars)]
    if all(d.is_zero() for d in partials):
        return squarefree_part(pth_root(f))
    g = gcd_many([f] + partials)
    if g.is_constant():
        return f.monic()
    h = divide_exact(f, g)
    r = squarefree_part(g)
    return (h * divide_exact(r, gcd(h, r))).monic()


def integrate_term(f: Polynomial, i: int) -> Polynomial:
    """Antiderivative in variable i (no integration constant)."""
    ctx = f.ctx
    if not 0 <= i < ctx.nvars:
        raise IndexOutOfRange(f"variable index {i} out of range")
    p = ctx.p
    out = {}
    for m, c in f.terms.items():
        e = m[i] + 1
        if e % p == 0:
            raise NonIntegrableExponent(m, i)
        out[m[:i] + (e,) + m[i + 1 :]] = c * pow(e, -1, p) % p
    return Polynomial._raw(ctx, out)
