import random

import pytest

from darbouxp import Polynomial, RingContext, VectorField

ACCEPTANCE_LINES = []


def random_poly(ctx, max_deg, rng, density=0.6):
    """Random polynomial; each monomial of degree <= max_deg kept with the given probability."""
    terms = {}
    n = ctx.nvars

    def walk(prefix, left):
        if len(prefix) == n:
            if rng.random() < density:
                terms[tuple(prefix)] = rng.randrange(ctx.p)
            return
        for e in range(left + 1):
            walk(prefix + [e], left - e)

    walk([], max_deg)
    return Polynomial(ctx, terms)


def random_field(ctx, max_deg, rng, density=0.6):
    return VectorField(ctx, [random_poly(ctx, max_deg, rng, density) for _ in range(ctx.nvars)])


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def R2():
    return RingContext.create(2, "x y")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
