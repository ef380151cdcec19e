import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from darbouxp.errors import (
    ContextMismatch,
    DivisionByZero,
    IndexOutOfRange,
    NonIntegrableExponent,
    ZeroInput,
)
from darbouxp.poly import (
    Polynomial,
    RingContext,
    divide_exact,
    evaluate,
    gcd,
    integrate_term,
    is_squarefree,
    partial_derivative,
    poly_arith,
    pth_root,
    squarefree_part,
)

from conftest import random_poly

CONTEXTS = {(p, n): RingContext.create(p, list("xyz"[:n])) for p in (2, 3, 5) for n in (1, 2, 3)}


@st.composite
def polys(draw, ctx, max_deg=4, max_terms=6):
    n = ctx.nvars
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_deg)] * n).filter(lambda m: sum(m) <= max_deg),
            st.integers(0, ctx.p - 1),
            max_size=max_terms,
        )
    )
    return Polynomial(ctx, terms)


@st.composite
def ring_triples(draw):
    ctx = CONTEXTS[(draw(st.sampled_from([2, 3, 5])), draw(st.integers(1, 3)))]
    return ctx, draw(polys(ctx)), draw(polys(ctx)), draw(polys(ctx))


def P(ctx, text):
    return ctx.parse(text)


# -- examples ------------------------------------------------------------------


def test_arith_examples(R2):
    f = P(R2, "y^3 + x*y")
    assert str(poly_arith(f, f, "mul")) == "y^6 + x^2*y^2"
    assert poly_arith(f, R2.zero(), "add") == f
    R3 = RingContext.create(3, "x")
    assert P(R3, "x + 1") ** 3 == P(R3, "x^3 + 1")
    g = P(R3, "x+1")
    assert g * g * g == P(R3, "x^3 + 1")
    assert poly_arith(g, 2, "scalar_mul") == P(R3, "2*x + 2")
    assert poly_arith(g, g, "sub").is_zero()


def test_context_mismatch(R2):
    other = RingContext.create(3, "x y")
    with pytest.raises(ContextMismatch):
        R2.var(0) + other.var(0)
    with pytest.raises(ContextMismatch):
        poly_arith(R2.var(0), other.var(0), "mul")


def test_partial_derivative_examples(R2):
    assert partial_derivative(P(R2, "y^3 + x*y"), 1) == P(R2, "y^2 + x")
    R7 = RingContext.create(7, "x")
    assert partial_derivative(P(R7, "x^7"), 0).is_zero()
    assert partial_derivative(R7.const(3), 0).is_zero()
    with pytest.raises(IndexOutOfRange):
        partial_derivative(R7.var(0), 1)


def test_evaluate_examples():
    R7 = RingContext.create(7, "x y")
    assert evaluate(P(R7, "x^2 + y"), [2, 3]).value == 0
    assert evaluate(R7.zero(), [4, 5]).value == 0
    R71 = RingContext.create(7, "x")
    assert evaluate(R71.var(0), [5]).value == 5
    with pytest.raises(ContextMismatch):
        evaluate(R71.var(0), [1, 2])


def test_divide_exact_examples(R2):
    q = divide_exact(P(R2, "y^6 + x^2*y^2"), P(R2, "y^3 + x*y"))
    assert q == P(R2, "y^3 + x*y")
    f = P(R2, "x^3*y + y + 1")
    assert divide_exact(f, f) == R2.one()
    assert divide_exact(R2.var(0), R2.var(1)) is None
    with pytest.raises(DivisionByZero):
        divide_exact(f, R2.zero())


def _vanishes_on_substitution(g, var, replacement):
    """Oracle: g vanishes after substituting ``var -> replacement`` (sympy, mod p)."""
    x, y = sympy.symbols("x y")
    expr = sympy.sympify(str(g).replace("^", "**"))
    sub = sympy.Poly(expr.subs(var, replacement), x, y, modulus=g.ctx.p)
    return sub.is_zero


def test_gcd_examples(R2):
    f = P(R2, "y^3 + x*y")
    g = P(R2, "y^4 + x*y^2 + x^2")
    x, y = sympy.symbols("x y")
    # f = y * (y^2 + x): neither factor divides g
    assert not _vanishes_on_substitution(g, y, 0)
    assert not _vanishes_on_substitution(g, x, y**2)
    assert gcd(f, g) == R2.one()
    assert gcd(f, f) == f.monic()
    a = P(R2, "(x^3+1)*(y^3+1)")
    assert gcd(a, P(R2, "x^3+1")) == P(R2, "x^3+1")
    assert gcd(f, R2.zero()) == f
    assert gcd(R2.zero(), R2.zero()).is_zero()


def test_gcd_normalization():
    R5 = RingContext.create(5, "x y")
    g = gcd(P(R5, "3*x*y + 2"), P(R5, "(3*x*y + 2)*(x + y)"))
    assert g.leading_coefficient() == 1
    assert g == P(R5, "x*y + 4")


def test_pth_root_examples(R2):
    assert pth_root(P(R2, "y^6 + x^2*y^2")) == P(R2, "y^3 + x*y")
    R3 = RingContext.create(3, "x")
    assert pth_root(P(R3, "x^3")) == R3.var(0)
    assert pth_root(P(R2, "x + y")) is None


def test_squarefree_examples(R2):
    assert squarefree_part(P(R2, "y^6 + x^2*y^2")) == P(R2, "y^3 + x*y")
    f = P(R2, "x^2*y + y + 1")
    assert squarefree_part(f) == f
    with pytest.raises(ZeroInput):
        squarefree_part(R2.zero())
    assert squarefree_part(R2.const(1)) == R2.one()


def _irreducibles_upto(ctx, D):
    """Oracle: all monic irreducible polynomials of degree <= D, by sieving."""
    monos = sorted(
        (m for m in itertools.product(range(D + 1), repeat=ctx.nvars) if 0 < sum(m) <= D),
        key=lambda m: (sum(m), m[::-1]),
    )
    monos = [(0,) * ctx.nvars] + monos
    cands = []
    for lead in range(1, len(monos)):
        for lower in itertools.product(range(ctx.p), repeat=lead):
            cands.append(Polynomial(ctx, dict(zip(monos[: lead + 1], lower + (1,)))))
    cands.sort(key=lambda f: f.total_degree())
    irreducible = []
    for f in cands:
        if all(g.total_degree() >= f.total_degree() or divide_exact(f, g) is None for g in irreducible):
            irreducible.append(f)
    return irreducible


def test_squarefree_against_factor_enumeration(R2):
    irr = _irreducibles_upto(R2, 3)
    f = P(R2, "(x^3+1)*(y^3+1)*(x^3+y^3)")
    rad = R2.one()
    for g in irr:
        if divide_exact(f, g) is not None:
            rad = rad * g
    assert squarefree_part(f) == rad.monic()
    # a non-squarefree variant, including a square-multiplicity factor in char 2
    h = P(R2, "(x+1)^2*(y^2+x*y+1)*(x+y)^3")
    rad = R2.one()
    for g in irr:
        if divide_exact(h, g) is not None:
            rad = rad * g
    assert squarefree_part(h) == rad.monic()


def test_integrate_examples():
    R7 = RingContext.create(7, "x")
    assert integrate_term(R7.var(0), 0) == P(R7, "4*x^2")
    assert integrate_term(R7.zero(), 0).is_zero()
    R2x = RingContext.create(2, "x")
    with pytest.raises(NonIntegrableExponent):
        integrate_term(R2x.var(0), 0)


def test_canonical_text(R2):
    assert str(R2.zero()) == "0"
    assert str(R2.const(1)) == "1"
    R5 = RingContext.create(5, "x y")
    assert str(P(R5, "3*x^2*y + 4 + y")) == "3*x^2*y + y + 4"
    assert str(P(R2, "y*x^3 + x^3 + y")) == "x^3*y + x^3 + y"


# -- properties ----------------------------------------------------------------


@settings(max_examples=500, deadline=None)
@given(ring_triples())
def test_ring_axioms(t):
    ctx, f, g, h = t
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f - f == ctx.zero()
    assert f * ctx.one() == f


@settings(max_examples=200, deadline=None)
@given(ring_triples())
def test_divide_exact_recovers_factor(t):
    ctx, f, g, _ = t
    if g.is_zero():
        return
    assert divide_exact(f * g, g) == f


def test_gcd_of_products(rng):
    for _ in range(120):
        ctx = CONTEXTS[(rng.choice([2, 3, 5]), rng.choice([2, 3]))]
        h = random_poly(ctx, 2, rng)
        f = random_poly(ctx, 2, rng)
        g = random_poly(ctx, 2, rng)
        if h.is_zero() or (f.is_zero() and g.is_zero()):
            continue
        assert gcd(f * h, g * h) == (h * gcd(f, g)).monic()


def test_gcd_matches_sympy(rng):
    x, y, z = sympy.symbols("x y z")
    for _ in range(80):
        p = rng.choice([2, 3, 5, 7])
        ctx = RingContext.create(p, "x y z")
        common = random_poly(ctx, 2, rng, 0.4)
        f = random_poly(ctx, 3, rng, 0.3) * common
        g = random_poly(ctx, 3, rng, 0.3) * common
        if f.is_zero() or g.is_zero():
            continue
        ours = gcd(f, g)
        theirs = sympy.gcd(
            sympy.Poly(sympy.sympify(str(f).replace("^", "**")), x, y, z, modulus=p),
            sympy.Poly(sympy.sympify(str(g).replace("^", "**")), x, y, z, modulus=p),
        )
        back = ctx.parse(str(theirs.as_expr()).replace("**", "^"))
        assert ours == back.monic()


def test_pth_root_and_squarefree_powers(rng):
    for _ in range(150):
        p = rng.choice([2, 3, 5])
        ctx = CONTEXTS[(p, rng.choice([1, 2, 3]))]
        f = random_poly(ctx, 3, rng)
        if f.is_zero():
            continue
        assert pth_root(f**p) == f
        base = squarefree_part(f)
        assert is_squarefree(base)
        assert divide_exact(f, base) is not None or f.is_constant()
        for k in (1, 2, p):
            assert squarefree_part(f**k) == base


def test_integrate_then_differentiate(rng):
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        ctx = CONTEXTS.get((p, 2)) or RingContext.create(p, "x y")
        f = random_poly(ctx, 4, rng)
        i = rng.randrange(2)
        try:
            F = integrate_term(f, i)
        except NonIntegrableExponent as exc:
            assert (exc.monomial[i] + 1) % p == 0
            continue
        assert partial_derivative(F, i) == f
