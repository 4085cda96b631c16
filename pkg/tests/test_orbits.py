import warnings
from fractions import Fraction as F
from math import gcd

import pytest

from affine_orbits import AffineWitness, SymBasis, SymPoint
from affine_orbits.farey import apply, den
from affine_orbits.lattice import lattice_canon
from affine_orbits.orbits import (
    BasisMismatch,
    GroupInvariant,
    RankTooLarge,
    admissible_c,
    count_orbits,
    euler_phi,
    group_of,
    invariant_of,
    minimal_space,
    orbit_equiv,
    rank_of,
    rational_denominator,
    witness,
)
from affine_orbits.spaces import space_from_equations, space_from_points

from conftest import random_rational_point, random_sym_point, random_witness

R2 = SymBasis(("r2",))
R2R3 = SymBasis(("r2", "r3"))


def sym(basis, *coords):
    return SymPoint(basis, tuple(tuple(F(c) for c in row) for row in coords))


def group(basis, d, rank):
    m = basis.k + 1
    gens = [[F(int(j == 0), d) for j in range(m)]]
    gens += [[F(int(j == i)) for j in range(m)] for i in range(1, rank)]
    return GroupInvariant(basis, lattice_canon(gens, m))


class TestGroup:
    def test_rational(self):
        g = group_of((F(1, 6), F(1, 4)))
        assert rank_of(g) == 1 and rational_denominator(g) == 12

    def test_integer_point(self):
        g = group_of((3, -7, 0))
        assert g.rank == 1 and g.d == 1

    def test_symbolic(self):
        g = group_of(sym(R2, (0, 1), (1, 1)))
        assert g.rank == 2 and g.d == 1
        g = group_of(sym(R2R3, (F(1, 3), 1, 0), (0, 0, F(1, 2))))
        assert g.rank == 3 and g.d == 1
        assert g == group_of(sym(R2R3, (F(2, 3), -1, 0), (F(1, 3), 1, F(1, 2))))
        g = group_of(sym(R2, (F(1, 3), 0), (0, 1)))
        assert g.rank == 2 and g.d == 3

    def test_invariant_under_group(self, rng):
        for _ in range(50):
            n = rng.randint(1, 4)
            x = random_sym_point(rng, n, R2R3)
            assert group_of(apply(random_witness(rng, n), x)) == group_of(x)


class TestMinimalSpace:
    def test_examples(self):
        assert minimal_space((F(1, 5), F(2, 5))) == space_from_points([(F(1, 5), F(2, 5))])
        f = minimal_space(sym(R2, (0, 1), (1, 1)))
        assert f == space_from_equations([((-1, 1), 1)])
        assert minimal_space(sym(R2R3, (0, 1, 0), (0, 0, 1))).dim == 2

    def test_contains_and_rank(self, rng):
        for _ in range(100):
            n = rng.randint(1, 4)
            x = random_sym_point(rng, n, R2R3, rng.random())
            f = minimal_space(x)
            assert group_of(x).rank == f.dim + 1
            if x.is_rational:
                assert f.dim == 0 and f.contains(x.as_rational())


class TestInvariant:
    def test_examples(self):
        inv = invariant_of((F(2, 5),))
        assert (inv.rank, inv.d, inv.c) == (1, 5, 2)
        inv = invariant_of((F(1, 5), 0))
        assert (inv.rank, inv.d, inv.c) == (1, 5, 1)
        inv = invariant_of(sym(R2, (0, 1), (1, 1)))
        assert (inv.rank, inv.e, inv.d, inv.c) == (2, 1, 1, 1)

    def test_c_only_matters_in_codimension_one(self, rng):
        for _ in range(100):
            n = rng.randint(1, 4)
            inv = invariant_of(random_sym_point(rng, n, R2R3, rng.random()))
            if inv.e != n - 1:
                assert inv.c == 1
            assert inv.c in admissible_c(inv.d)


class TestEquivalence:
    def test_examples(self):
        assert orbit_equiv((F(1, 5),), (F(4, 5),))
        assert not orbit_equiv((F(1, 5),), (F(2, 5),))
        assert orbit_equiv((F(1, 5), 0), (F(2, 5), 0))
        assert orbit_equiv(sym(R2, (0, 1), (1, 1)), sym(R2, (0, 1), (0, 0)))
        assert not orbit_equiv(sym(R2, (0, 1), (0, 0)), sym(R2, (0, 2), (0, 0)))

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatch):
            orbit_equiv(sym(R2, (0, 1)), sym(SymBasis(("pi",)), (0, 1)))
        with pytest.raises(ValueError):
            witness((1,), (1, 2))

    @pytest.mark.parametrize(
        "x, y",
        [
            ((F(1, 5),), (F(4, 5),)),
            ((F(1, 5), 0), (F(2, 5), 0)),
            ((F(1, 5), 0), (F(3, 5), F(7, 5))),
            ((F(2, 7), F(3, 7), F(1, 7)), (F(1, 7), 0, 0)),
            ((0, 0), (5, -3)),
        ],
    )
    def test_witness_examples(self, x, y):
        g = witness(x, y)
        assert isinstance(g, AffineWitness)
        assert apply(g, x) == tuple(F(v) for v in y)

    def test_witness_symbolic(self):
        x = sym(R2, (0, 1), (1, 1))
        y = sym(R2, (F(0), 1), (0, 0))
        g = witness(x, y)
        assert g(x) == y
        assert witness(sym(R2, (0, 1), (0, 0)), sym(R2, (0, 2), (0, 0))) is None

    def test_identity(self):
        g = witness((F(1, 3), F(2, 3)), (F(1, 3), F(2, 3)))
        assert g == AffineWitness.identity(2)

    def test_random_images(self, rng):
        for _ in range(150):
            n = rng.randint(1, 4)
            basis = rng.choice([SymBasis(), R2, R2R3])
            x = random_sym_point(rng, n, basis, rng.random())
            y = apply(random_witness(rng, n), x)
            g = witness(x, y)
            assert g is not None and g(x) == y

    def test_independence_warning(self):
        with pytest.warns(UserWarning, match="dependent"):
            SymBasis(("a", "b"), (2 ** 0.5, 2 * 2 ** 0.5))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            SymBasis(("r2", "r3"), (2 ** 0.5, 3 ** 0.5))


class TestCounting:
    def test_phi(self):
        assert [euler_phi(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        with pytest.raises(ValueError):
            euler_phi(0)

    def test_admissible_matches_phi(self):
        for d in range(1, 200):
            assert len(admissible_c(d)) == max(1, euler_phi(d) // 2)

    @pytest.mark.parametrize("d, count, cs", [(5, 2, [1, 2]), (1, 1, [1]), (12, 2, [1, 5])])
    def test_examples(self, d, count, cs):
        k, reps = count_orbits(group(SymBasis(), d, 1), 1)
        assert k == count
        assert [invariant_of(r).c for r in reps] == cs
        assert all(invariant_of(r).d == d for r in reps)

    def test_rank_too_large(self):
        with pytest.raises(RankTooLarge):
            count_orbits(group(R2R3, 1, 3), 1)

    def test_representatives_are_distinct_and_exhaustive(self, rng):
        # every point with the given group lands on exactly one representative
        for n in (1, 2, 3):
            for d in (1, 5, 7, 12):
                g = group(R2, d, n) if n >= 2 else group(SymBasis(), d, 1)
                k, reps = count_orbits(g, n)
                invs = [invariant_of(r) for r in reps]
                assert len(set((i.group, i.c) for i in invs)) == k
                assert all(i.group == g for i in invs)

    def test_rational_count_matches_enumeration(self):
        # n = 1, rank 1: classes of p/d are {±p mod d}
        for d in range(1, 40):
            classes = {min(p % d, -p % d) for p in range(d) if gcd(p, d) == 1}
            assert count_orbits(group(SymBasis(), d, 1), 1)[0] == len(classes)


class TestDenominators:
    def test_den_preserved(self, rng):
        for _ in range(100):
            n = rng.randint(1, 4)
            x = random_rational_point(rng, n)
            assert den(apply(random_witness(rng, n), x)) == den(x)
