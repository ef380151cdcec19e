import random

import pytest

from darbouxp.derivation import VectorField, dependency_locus, divergence, lie_bracket
from darbouxp.errors import DegreeZero
from darbouxp.forms import DiffForm, contract, exterior_d, iterated_contraction, lie_derivative, wedge
from darbouxp.poly import RingContext

from conftest import random_field, random_poly


def random_form(ctx, q, rng, max_deg=2):
    import itertools

    coeffs = {idx: random_poly(ctx, max_deg, rng, 0.5) for idx in itertools.combinations(range(ctx.nvars), q)}
    return DiffForm(ctx, q, coeffs)


def cases(rng, count):
    for _ in range(count):
        p = rng.choice([2, 3, 5])
        n = rng.choice([2, 3])
        ctx = RingContext.create(p, ["x", "y", "z"][:n])
        yield ctx, rng.randrange(n + 1)


def test_wedge_examples(R2):
    dx, dy = DiffForm.dx(R2, 0), DiffForm.dx(R2, 1)
    omega = DiffForm.volume(R2)
    assert wedge(dx, dy) == omega
    assert wedge(dx, dx).is_zero()
    x, y = R2.gens()
    assert wedge(dy.scale(x), dx.scale(y)) == omega.scale(x * y)
    R5 = RingContext.create(5, "x y")
    assert wedge(DiffForm.dx(R5, 1), DiffForm.dx(R5, 0)) == -DiffForm.volume(R5)


def test_exterior_d_examples(R2):
    R = RingContext.create(5, "x y")
    x, y = R.gens()
    assert exterior_d(DiffForm.function(x * y)) == DiffForm(R, 1, {(0,): y, (1,): x})
    assert exterior_d(DiffForm.dx(R, 0)).is_zero()
    X = VectorField(R2, ["y^3", "x"])
    assert divergence(X).is_zero()
    assert exterior_d(contract(X, DiffForm.volume(R2))).is_zero()


def test_contract_examples():
    R = RingContext.create(7, "x y")
    omega = DiffForm.volume(R)
    assert contract(VectorField.coordinate(R, 0), omega) == DiffForm.dx(R, 1)
    P, Q = R.parse("x^2 + y"), R.parse("3*x*y")
    assert contract(VectorField(R, [P, Q]), omega) == DiffForm(R, 1, {(1,): P, (0,): -Q})
    X, Y = VectorField(R, ["1", "0"]), VectorField(R, ["-y", "x"])
    assert contract(Y, contract(X, omega)).coefficient(()) == R.var(0)
    with pytest.raises(DegreeZero):
        contract(X, DiffForm.function(R.one()))


def test_lie_derivative_examples(rng):
    R = RingContext.create(3, "x y")
    X = VectorField(R, ["x*y", "y^2 + 1"])
    f = R.parse("x^2*y + y")
    assert lie_derivative(X, DiffForm.function(f)) == DiffForm.function(X(f))
    assert lie_derivative(VectorField.coordinate(R, 0), DiffForm.dx(R, 0)).is_zero()
    for ctx, _ in cases(rng, 60):
        X = random_field(ctx, 3, rng)
        omega = DiffForm.volume(ctx)
        assert lie_derivative(X, omega) == omega.scale(divergence(X))


def test_d_squared_zero(rng):
    for ctx, q in cases(rng, 200):
        omega = random_form(ctx, q, rng, 3)
        assert exterior_d(exterior_d(omega)).is_zero()


def test_contraction_is_antiderivation(rng):
    for ctx, q in cases(rng, 150):
        X = random_field(ctx, 2, rng)
        omega = random_form(ctx, q, rng)
        r = rng.randrange(ctx.nvars - q + 1)
        eta = random_form(ctx, r, rng)
        if q >= 1:
            assert contract(X, contract(X, omega)).is_zero() if q >= 2 else True
        if q + r >= 1:
            lhs = contract(X, wedge(omega, eta))
            first = wedge(contract(X, omega), eta) if q >= 1 else DiffForm(ctx, 0)
            second = wedge(omega, contract(X, eta)) if r >= 1 else DiffForm(ctx, 0)
            rhs = first + (second if q % 2 == 0 else -second)
            assert lhs == rhs


def test_cartan_commutators(rng):
    for ctx, q in cases(rng, 120):
        X, Y = random_field(ctx, 2, rng), random_field(ctx, 2, rng)
        omega = random_form(ctx, q, rng)
        B = lie_bracket(X, Y)
        if q >= 1:
            lhs = lie_derivative(X, contract(Y, omega)) - contract(Y, lie_derivative(X, omega))
            assert lhs == contract(B, omega)
        lhs = lie_derivative(X, lie_derivative(Y, omega)) - lie_derivative(Y, lie_derivative(X, omega))
        assert lhs == lie_derivative(B, omega)


def test_iterated_contraction_is_dep(rng):
    for _ in range(100):
        p = rng.choice([2, 3, 5, 7])
        n = rng.choice([1, 2, 3])
        ctx = RingContext.create(p, ["x", "y", "z"][:n])
        fields = [random_field(ctx, 2, rng) for _ in range(n)]
        assert iterated_contraction(fields) == dependency_locus(fields)
