import random
from fractions import Fraction

import pytest

from raagcolor.freegroup import FreeWord, ProductElement, ProductShape

from oracles import fraction_rank

ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name, ok, detail in ACCEPTANCE:
            terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}  {detail}")


def random_word(rng, rank, max_syllables=6, max_exp=3):
    syl = []
    for _ in range(rng.randrange(max_syllables + 1)):
        e = rng.randint(1, max_exp) * rng.choice((1, -1))
        syl.append((rng.randrange(rank), e))
    return FreeWord(rank, tuple(syl))


def random_element(rng, shape, **kw):
    return ProductElement(shape, tuple(random_word(rng, m, **kw) for m in shape.ranks))


def random_shape(rng, n):
    """Random composition of n into positive parts."""
    cuts = sorted(rng.sample(range(1, n), rng.randrange(n))) if n > 1 else []
    bounds = [0] + cuts + [n]
    return ProductShape(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def random_invertible(rng, n, lo=-5, hi=5):
    while True:
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        if fraction_rank(rows) == n:
            return rows


@pytest.fixture
def rng():
    return random.Random(12345)


def frac_rows(rows):
    return [[Fraction(x) for x in r] for r in rows]
