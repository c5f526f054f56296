"""
Gemeinsame Fixtures: Ausdrucks-Helfer, Beispielterme und seeded Zufallsgeneratoren
"""

import logging
import random

import pytest
from click.testing import CliRunner

from telescopia.core.polynomial import MultiPoly
from telescopia.core.rational_function import RationalFunction
from telescopia.summation.hyperterm import GammaFactor, ProperTermExpr, compile_proper_term

SEED = 20241017


def make_rat(text, variables=("x", "y")):
    return RationalFunction.from_expr(text, variables)


def make_poly(text, variables=("x", "y")):
    return MultiPoly.from_expr(text, variables)


def random_poly_in(rng, x, y, deg_y, deg_x=1, monic=False, bound=3):
    """Zufallspolynom mit deg_y = deg_y (falls monic) und kleinen ganzen Koeffizienten."""
    terms = {}
    for j in range(deg_y + 1):
        for i in range(deg_x + 1):
            terms[(i, j)] = rng.randint(-bound, bound)
    if monic:
        for i in range(deg_x + 1):
            terms[(i, deg_y)] = 0
        terms[(0, deg_y)] = 1
    return MultiPoly.from_terms(terms, (x, y))


def random_rational(rng, max_num_deg=2, max_den_deg=3, max_deg_x=1, x="x", y="y"):
    """f = p/q mit deg_y q in [1, max_den_deg], deg_x <= max_deg_x und p ≠ 0."""
    while True:
        q = random_poly_in(rng, x, y, rng.randint(1, max_den_deg), deg_x=rng.randint(0, max_deg_x), monic=True)
        p = random_poly_in(rng, x, y, rng.randint(0, max_num_deg), deg_x=rng.randint(0, max_deg_x))
        if not p.is_zero:
            return RationalFunction(p, q)


@pytest.fixture
def rat():
    return make_rat


@pytest.fixture
def poly():
    return make_poly


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def binomial_term():
    """binomial(n, k) = Γ(n+1)/(Γ(k+1)·Γ(n−k+1))."""
    return ProperTermExpr(
        MultiPoly.one(("n", "k")),
        gamma_factors=(GammaFactor(1, 0, 1, 1), GammaFactor(0, 1, 1, -1), GammaFactor(1, -1, 1, -1)),
    )


@pytest.fixture
def binomial_squared_term():
    return ProperTermExpr(
        MultiPoly.one(("n", "k")),
        gamma_factors=(GammaFactor(1, 0, 1, 2), GammaFactor(0, 1, 1, -2), GammaFactor(1, -1, 1, -2)),
    )


@pytest.fixture
def binomial(binomial_term):
    return compile_proper_term(binomial_term)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def reset_root_logging():
    """Die CLI konfiguriert den Root-Logger neu; danach wieder aufräumen."""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(logging.WARNING)


@pytest.fixture
def random_f(rng):
    """Erzeugt reproduzierbare Zufallsfunktionen p/q in x, y."""
    return lambda **kwargs: random_rational(rng, **kwargs)


@pytest.fixture
def random_poly(rng):
    return lambda deg_y, **kwargs: random_poly_in(rng, "x", "y", deg_y, **kwargs)
