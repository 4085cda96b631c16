import random
from fractions import Fraction

import pytest

from affine_orbits import AffineWitness, SymBasis, SymPoint


def random_witness(rng: random.Random, n: int, steps: int = 8, shift: int = 3) -> AffineWitness:
    """Product of random elementary matrices and sign flips, plus a random translation."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n > 1 and rng.random() < 0.75:
            i, j = rng.sample(range(n), 2)
            k = rng.choice([-2, -1, 1, 2])
            u[i] = [a + k * b for a, b in zip(u[i], u[j])]
        elif n > 1 and rng.random() < 0.5:
            i, j = rng.sample(range(n), 2)
            u[i], u[j] = u[j], u[i]
        else:
            i = rng.randrange(n)
            u[i] = [-a for a in u[i]]
    return AffineWitness(tuple(map(tuple, u)), tuple(rng.randint(-shift, shift) for _ in range(n)))


def random_rational_point(rng: random.Random, n: int, max_den: int = 12, max_num: int = 12):
    return tuple(Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)) for _ in range(n))


def random_sym_point(rng: random.Random, n: int, basis: SymBasis, density: float = 0.5) -> SymPoint:
    coords = []
    for _ in range(n):
        coords.append(tuple(
            Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3, 4, 5, 6])) if rng.random() < density else Fraction(0)
            for _ in range(basis.k + 1)
        ))
    return SymPoint(basis, tuple(coords))


@pytest.fixture
def rng():
    return random.Random(20261017)
