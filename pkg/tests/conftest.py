import random

import pytest

from semimod.fields import QQ, PrimeField
from semimod.groebner import SubmodulePresentation
from semimod.poly import Polynomial, PolyRing, VectorPoly


@pytest.fixture
def ring_qxy():
    return PolyRing(QQ, ("x", "y"))


@pytest.fixture
def twisted_pair(ring_qxy):
    """The classic weakly-semiprime-but-not-semiprime submodule of Q[x,y]^2:
    all multiples t*(x, y) with t in the ideal (x, y)."""
    x, y = ring_qxy.variables()
    g1 = VectorPoly(ring_qxy, [x * x, x * y])
    g2 = VectorPoly(ring_qxy, [x * y, y * y])
    return SubmodulePresentation(ring_qxy, 2, [g1, g2])


@pytest.fixture
def ring_f3xy():
    return PolyRing(PrimeField(3), ("x", "y"))


@pytest.fixture
def twisted_pair_f3(ring_f3xy):
    x, y = ring_f3xy.variables()
    g1 = VectorPoly(ring_f3xy, [x * x, x * y])
    g2 = VectorPoly(ring_f3xy, [x * y, y * y])
    return SubmodulePresentation(ring_f3xy, 2, [g1, g2])


def random_polynomial(rng: random.Random, ring, max_degree=2, max_terms=3,
                      coeffs=(-2, -1, 1, 2)):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.num_vars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(ring.nx)] += 1
        terms[tuple(exps)] = ring.field.coerce(rng.choice(coeffs))
    return Polynomial(ring, terms)


def random_vector(rng: random.Random, ring, rank, max_degree=2,
                  allow_zero_entries=True, coeffs=(-2, -1, 1, 2)):
    while True:
        entries = []
        for _ in range(rank):
            if allow_zero_entries and rng.random() < 0.25:
                entries.append(ring.zero())
            else:
                entries.append(
                    random_polynomial(rng, ring, max_degree, coeffs=coeffs)
                )
        vec = VectorPoly(ring, entries)
        if not vec.is_zero():
            return vec


def random_generators(rng: random.Random, ring, rank, count=None, max_degree=2,
                      coeffs=(-2, -1, 1, 2)):
    count = count or rng.randint(1, 3)
    return [
        random_vector(rng, ring, rank, max_degree, coeffs=coeffs)
        for _ in range(count)
    ]
